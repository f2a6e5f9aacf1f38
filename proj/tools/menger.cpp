// menger: command-line front end for the menger library.
// Exit codes: 0 pass/found, 1 fail/not found, 2 usage or parse error, 3 resource guard.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "menger/enumerate.hpp"
#include "menger/io.hpp"
#include "menger/suite.hpp"

using namespace menger;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kGuard = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t budget_from(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MENGER_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("MENGER_BUDGET is not a number: ") + env);
    }
  }
  return kExhaustMax;
}

Witness check_property(const Transformation& f, const std::string& prop, EmptyFamily empty) {
  if (prop == "contractive") return is_contractive(f);
  if (prop == "idempotent") return is_idempotent(f);
  if (prop == "isotone") return is_isotone(f);
  if (prop == "interior") return is_interior(f);
  if (prop == "union-dist") return is_union_distributive(f);
  if (prop == "intersection-dist") return is_intersection_distributive(f);
  if (prop == "full-union") return is_full_union_distributive(f);
  if (prop == "full-intersection") return is_full_intersection_distributive(f, empty);
  if (prop == "eq2" || prop == "interior-inclusion") return satisfies_interior_inclusion(f);
  if (prop == "eq6" || prop == "kernel-form") return is_kernel_form(f);
  throw UsageError("unknown property: " + prop);
}

struct CheckOp {
  std::string path;
  std::vector<std::string> props;
  bool empty_family = false;

  int run() const {
    const Transformation f = transformation_from_json(read_json_file(path));
    const std::vector<std::string> wanted = props.empty() ? std::vector<std::string>{"interior"} : props;
    json out = json::array();
    bool ok = true;
    const auto empty = empty_family ? EmptyFamily::included : EmptyFamily::excluded;
    for (const auto& p : wanted) {
      const Witness w = check_property(f, p, empty);
      json j = to_json(w, f.shape());
      j["property"] = p;
      ok = ok && w.pass;
      out.push_back(j);
    }
    std::cout << out.dump(2) << "\n";
    return ok ? kPass : kFail;
  }
};

struct CheckAlgebra {
  std::string path;

  int run() const {
    const MengerAlgebra alg = algebra_from_json(read_json_file(path));
    json out = json::array();
    bool ok = true;
    auto add = [&](const ElementWitness& w) {
      ok = ok && w.pass;
      out.push_back(to_json(w));
    };
    add(check_superassociative(alg));
    const IdentityReport ids = check_identities(alg);
    add(ids.idempotent);
    add(ids.commutative);
    add(ids.expansion);
    add(is_semilattice(diagonal(alg)));
    add(is_derived(alg));
    std::cout << out.dump(2) << "\n";
    return ok ? kPass : kFail;
  }
};

struct Verify {
  std::string law;
  int m = 1, n = 1, q = 2;
  bool exhaustive = false;
  std::string mode;
  std::optional<std::uint64_t> count, seed, budget;

  int run() const {
    StreamSpec spec;
    spec.m = m;
    spec.n = n;
    spec.q = q;
    spec.budget = budget_from(budget);
    if (!mode.empty()) {
      if (mode == "exhaustive") {
        spec.exhaustive = true;
      } else {
        // random:<count>:<seed>
        std::stringstream ss(mode);
        std::string head, c, s;
        std::getline(ss, head, ':');
        std::getline(ss, c, ':');
        std::getline(ss, s);
        if (head != "random" || c.empty() || s.empty()) throw UsageError("mode must be exhaustive or random:<count>:<seed>");
        try {
          spec.count = std::stoull(c);
          spec.seed = std::stoull(s);
        } catch (const std::exception&) {
          throw UsageError("bad random mode: " + mode);
        }
        spec.exhaustive = false;
      }
    } else if (exhaustive) {
      spec.exhaustive = true;
    } else if (count) {
      if (!seed) throw UsageError("random mode needs an explicit --seed");
      spec.exhaustive = false;
      spec.count = *count;
      spec.seed = *seed;
    } else {
      throw UsageError("choose --exhaustive, --mode, or --count with --seed");
    }
    const SuiteResult r = run_law(law, spec);
    json out{{"law", r.law}, {"checked", r.checked}, {"failures", r.failures}, {"pass", r.pass()}};
    if (r.first_failure) out["first_failure"] = to_json(*r.first_failure);
    std::cout << out.dump(2) << "\n";
    return r.pass() ? kPass : kFail;
  }
};

struct Represent {
  std::string path, out;

  int run() const {
    const MengerAlgebra alg = algebra_from_json(read_json_file(path));
    if (const ElementWitness w = check_superassociative(alg); !w) {
      std::cout << to_json(w).dump(2) << "\n";
      return kFail;
    }
    const IdentityReport ids = check_identities(alg);
    if (const ElementWitness* w = ids.first_failure()) {
      std::cout << to_json(*w).dump(2) << "\n";
      return kFail;
    }
    const Representation rep = represent(alg);
    const LawReport r = verify_representation(rep);
    json j = to_json(rep);
    if (!out.empty()) write_json_file(out, j);
    std::cout << to_json(r).dump(2) << "\n";
    return r.pass ? kPass : kFail;
  }
};

struct Census {
  std::string cls;
  std::optional<int> m, n, q;
  std::optional<std::uint64_t> budget;
  std::string golden;

  int run() const {
    const std::uint64_t b = budget_from(budget);
    std::vector<CensusRecord> records;
    if (cls == "standard") {
      records = standard_census(b);
    } else if (cls == "semilattices" || cls == "menger-identities") {
      if (!q) throw UsageError(cls + " needs --q");
      records.push_back(census(cls, *q, cls == "semilattices" ? std::nullopt : std::optional<int>(n.value_or(1)), b));
    } else {
      if (!m || !n) throw UsageError(cls + " needs --m and --n");
      records.push_back(census(cls, *m, *n, b));
    }
    std::string csv;
    for (const auto& r : records) csv += r.csv() + "\n";
    std::cout << csv;
    if (golden.empty()) return kPass;
    std::ifstream in(golden, std::ios::binary);
    if (!in) throw ParseError("cannot open " + golden);
    std::stringstream expected;
    expected << in.rdbuf();
    if (expected.str() == csv) return kPass;
    std::cerr << "census differs from " << golden << "\n";
    return kFail;
  }
};

struct FindCounterexample {
  std::string claim;
  int m = 2, n = 1;
  std::optional<std::uint64_t> budget;
  std::string out;

  int run() const {
    const auto c = parse_claim(claim);
    if (!c) throw UsageError("unknown claim: " + claim);
    const Shape shape(m, n);
    const auto found = find_counterexample(*c, shape, budget_from(budget));
    if (!found) {
      std::cout << json{{"claim", claim}, {"found", false}}.dump(2) << "\n";
      return kFail;
    }
    json instance = json::array();
    for (const auto& f : *found) instance.push_back(to_json(f));
    if (!out.empty()) {
      std::filesystem::create_directories(out);
      static const char* names[] = {"f", "g1", "g2", "g3"};
      for (std::size_t i = 0; i < found->size(); ++i) {
        write_json_file((std::filesystem::path(out) / (std::string(names[i]) + ".json")).string(), instance[i]);
      }
    }
    json report{{"claim", claim}, {"found", true}, {"instance", instance}};
    if (*c == Claim::distributive_gap) {
      report["witness"] = to_json(is_union_distributive(found->front()), shape);
    } else {
      const std::vector<Transformation> gs(found->begin() + 1, found->end());
      report["superposition"] = to_json(superpose(found->front(), gs));
      report["witness"] = to_json(*c == Claim::composition_not_closed ? is_interior(superpose(found->front(), gs))
                                                                      : satisfies_composition_criterion(found->front(), gs),
                                  shape);
    }
    std::cout << report.dump(2) << "\n";
    return kPass;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Menger algebras and n-place interior operations on finite power sets"};
  app.require_subcommand(1);

  CheckOp check_op;
  auto* c1 = app.add_subcommand("check-op", "Check properties of a transformation file");
  c1->add_option("file", check_op.path, "Transformation JSON")->required();
  c1->add_option("properties", check_op.props, "Properties to check (default: interior)");
  c1->add_flag("--empty-family", check_op.empty_family, "Include the empty family in full-intersection");

  CheckAlgebra check_alg;
  auto* c2 = app.add_subcommand("check-algebra", "Check superassociativity and the diagonal identities");
  c2->add_option("file", check_alg.path, "Algebra JSON")->required();

  Verify verify;
  auto* c3 = app.add_subcommand("verify", "Run a law verifier over a generator stream");
  c3->add_option("law", verify.law, "T1 T2 C1 C2 T3 P1 P2 C5 C9 T4")->required();
  c3->add_option("--m", verify.m, "Atoms");
  c3->add_option("--n", verify.n, "Arity or rank");
  c3->add_option("--q", verify.q, "Carrier size (T4)");
  c3->add_flag("--exhaustive", verify.exhaustive, "Every admissible input");
  c3->add_option("--mode", verify.mode, "exhaustive | random:<count>:<seed>");
  c3->add_option("--count", verify.count, "Random inputs");
  c3->add_option("--seed", verify.seed, "Random seed");
  c3->add_option("--budget", verify.budget, "Exhaustive budget");

  Represent represent_cmd;
  auto* c4 = app.add_subcommand("represent", "Represent an algebra by kernel operations");
  c4->add_option("file", represent_cmd.path, "Algebra JSON")->required();
  c4->add_option("--out", represent_cmd.out, "Representation JSON output");

  Census census_cmd;
  auto* c5 = app.add_subcommand("census", "Count a class of finite structures");
  c5->add_option("class", census_cmd.cls, "transformations interior kernel semilattices menger-identities standard")
      ->required();
  c5->add_option("--m", census_cmd.m, "Atoms");
  c5->add_option("--n", census_cmd.n, "Arity or rank");
  c5->add_option("--q", census_cmd.q, "Carrier size");
  c5->add_option("--budget", census_cmd.budget, "Exhaustive budget");
  c5->add_option("--golden", census_cmd.golden, "Expected CSV; exit 1 unless identical");

  FindCounterexample find;
  auto* c6 = app.add_subcommand("find-counterexample", "Search for the first refuting instance");
  c6->add_option("claim", find.claim, "composition-not-closed eq8-fails distributive-gap")->required();
  c6->add_option("--m", find.m, "Atoms");
  c6->add_option("--n", find.n, "Arity");
  c6->add_option("--budget", find.budget, "Exhaustive budget");
  c6->add_option("--out", find.out, "Directory for instance files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*c1) return check_op.run();
    if (*c2) return check_alg.run();
    if (*c3) return verify.run();
    if (*c4) return represent_cmd.run();
    if (*c5) return census_cmd.run();
    if (*c6) return find.run();
  } catch (const ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kGuard;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
