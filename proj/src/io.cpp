#include "menger/io.hpp"

#include <fstream>
#include <sstream>

namespace menger {

using nlohmann::json;

namespace {

int require_int(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(std::string("missing integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

template <typename T>
std::vector<T> require_int_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("missing array field \"") + key + "\"");
  }
  std::vector<T> out;
  out.reserve(j[key].size());
  for (const auto& v : j[key]) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw ParseError(std::string("field \"") + key + "\" must hold non-negative integers");
    }
    out.push_back(static_cast<T>(v.get<long long>()));
  }
  return out;
}

json subset_list(Mask x) {
  json arr = json::array();
  for (int i = 0; x >> i; ++i) {
    if ((x >> i) & 1u) arr.push_back(i);
  }
  return arr;
}

}  // namespace

json to_json(const Transformation& f) {
  return json{{"m", f.shape().atoms()},
              {"n", f.shape().arity()},
              {"table", std::vector<Mask>(f.table().begin(), f.table().end())}};
}

Transformation transformation_from_json(const json& j) {
  const int m = require_int(j, "m");
  const int n = require_int(j, "n");
  auto table = require_int_array<Mask>(j, "table");
  return Transformation(Shape(m, n), std::move(table));
}

json to_json(const MengerAlgebra& alg) {
  return json{{"q", alg.size()},
              {"n", alg.rank()},
              {"op", std::vector<Element>(alg.table().begin(), alg.table().end())}};
}

MengerAlgebra algebra_from_json(const json& j) {
  const int q = require_int(j, "q");
  const int n = require_int(j, "n");
  return MengerAlgebra(q, n, require_int_array<Element>(j, "op"));
}

json to_json(const Semigroup& s) {
  return json{{"q", s.size()},
              {"table", std::vector<Element>(s.table().begin(), s.table().end())}};
}

Semigroup semigroup_from_json(const json& j) {
  const int q = require_int(j, "q");
  return Semigroup(q, require_int_array<Element>(j, "table"));
}

json to_json(const Witness& w, const Shape& shape) {
  json j{{"check", w.check}, {"pass", w.pass}};
  if (!w.counterexample) return j;
  const auto& ce = *w.counterexample;
  const bool family = w.check.starts_with("families-");
  json tuples = json::array();
  json indices = json::array();
  for (std::size_t k = 0; k < ce.tuples.size(); ++k) {
    const Index idx = ce.tuples[k];
    if (family && k == 1) {
      json members = json::array();
      for (Mask x = 0; x < shape.subset_count(); ++x) {
        if ((idx >> x) & 1u) members.push_back(x);
      }
      j["family"] = members;
      continue;
    }
    indices.push_back(idx);
    if (idx < shape.tuple_count()) tuples.push_back(shape.decode(idx));
  }
  json cex{{"tuples", tuples}, {"indices", indices}};
  if (ce.slot) cex["coordinate"] = *ce.slot + 1;
  j["counterexample"] = cex;
  return j;
}

json to_json(const ElementWitness& w) {
  json j{{"check", w.check}, {"pass", w.pass}};
  if (!w.pass) j["elements"] = w.elements;
  return j;
}

json to_json(const LawReport& r) {
  json j{{"law", r.law}, {"digest", r.digest}, {"pass", r.pass}};
  json ws = json::array();
  for (const auto& w : r.witnesses) {
    json wj{{"check", w.check}, {"pass", w.pass}};
    if (w.counterexample) {
      wj["instance"] = w.counterexample->tuples;
      if (w.counterexample->slot) wj["coordinate"] = *w.counterexample->slot + 1;
    }
    ws.push_back(wj);
  }
  j["witnesses"] = ws;
  if (!r.pass) j["inputs"] = json::parse(r.inputs);
  return j;
}

json to_json(const Representation& rep) {
  const int q = rep.algebra.size();
  json omega = json::array();
  for (Element x = 0; x < q; ++x) {
    json row = json::array();
    for (Element y = 0; y < q; ++y) row.push_back(rep.omega.related(x, y) ? 1 : 0);
    omega.push_back(row);
  }
  json kernels = json::array();
  json masks = json::array();
  for (const auto& k : rep.kernels) {
    kernels.push_back(subset_list(k.kernel));
    masks.push_back(k.kernel);
  }
  return json{{"algebra", to_json(rep.algebra)},
              {"ground", {{"m", rep.ground.atoms()}, {"n", rep.ground.arity()}}},
              {"omega", omega},
              {"kernels", kernels},
              {"kernel_masks", masks}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace menger
