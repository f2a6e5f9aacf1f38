#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "menger/enumerate.hpp"
#include "menger/laws.hpp"

namespace menger {

// Input stream for a law run: every admissible input, or `count` seeded draws.
struct StreamSpec {
  int m = 1;
  int n = 1;
  int q = 2;  // carrier size, T4 only
  bool exhaustive = true;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = kExhaustMax;
};

struct SuiteResult {
  std::string law;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::optional<LawReport> first_failure;
  bool pass() const { return failures == 0; }
};

// Known law ids: T1 T2 C1 C2 T3 P1 P2 C5 C9 T4.
const std::vector<std::string>& law_ids();

// Runs one law verifier over the stream.
//   T1 T2 C1 C2 C5  every transformation of the shape (C5: n = 1)
//   T3              interior f with n interior g_i
//   P1              exhaustive: contractive f with every g, isotone f with every
//                   ordered pair g ≼ h (n = 1); random: interior f, contractive
//                   g_i ≼ h_i
//   P2 C9           ordered pairs of interior operations (C9: n = 1)
//   T4              derived algebras of rank n over every semilattice of size q
// Throws DomainError for an unknown law or bad shape and ResourceGuardError
// when an exhaustive stream exceeds the budget.
SuiteResult run_law(const std::string& law, const StreamSpec& spec);

enum class Claim { composition_not_closed, eq8_fails, distributive_gap };

std::optional<Claim> parse_claim(const std::string& name);

// First lexicographic instance refuting the claim's naive expectation:
//   composition-not-closed  interior f, g_1..g_n with f[g] not interior
//   eq8-fails               interior f, g_1..g_n failing the composition criterion
//   distributive-gap        interior f that is not ∪-distributive
// Instances list f first. Searches are exhaustive over interior operations.
std::optional<std::vector<Transformation>> find_counterexample(Claim claim, const Shape& shape,
                                                               std::uint64_t budget = kExhaustMax);

}  // namespace menger
