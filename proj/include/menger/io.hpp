#pragma once

#include <string>

#include <json.hpp>

#include "menger/algebra.hpp"
#include "menger/laws.hpp"
#include "menger/transform.hpp"

namespace menger {

// File formats:
//   transformation {"m": int, "n": int, "table": [int, ...]}
//   algebra        {"q": int, "n": int, "op": [int, ...]}
//   semigroup      {"q": int, "table": [int, ...]}
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const Transformation& f);
Transformation transformation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MengerAlgebra& alg);
MengerAlgebra algebra_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Semigroup& s);
Semigroup semigroup_from_json(const nlohmann::json& j);

// `shape` decodes tuple indices into subset lists; families are left as masks.
nlohmann::json to_json(const Witness& w, const Shape& shape);
nlohmann::json to_json(const ElementWitness& w);
nlohmann::json to_json(const LawReport& r);
nlohmann::json to_json(const Representation& rep);

// Reads and parses a file; throws ParseError on I/O or syntax errors.
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace menger
