#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/transform.hpp"

namespace menger {

// Default cap on candidate tables (or search nodes) for exhaustive runs.
inline constexpr std::uint64_t kExhaustMax = std::uint64_t{1} << 20;

// Number of n-place transformations, (2^m)^(2^(mn)); nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> transformation_count(const Shape& shape);
bool transformations_feasible(const Shape& shape, std::uint64_t budget = kExhaustMax);

// Visits every table in lexicographic order; stop early by returning false.
// Throws ResourceGuardError when the count exceeds the budget.
void for_each_transformation(const Shape& shape,
                             const std::function<bool(const Transformation&)>& visit,
                             std::uint64_t budget = kExhaustMax);
std::vector<Transformation> all_transformations(const Shape& shape,
                                                std::uint64_t budget = kExhaustMax);

// Depth-first search: diagonal entries first (increasing mask), then the rest.
// Each assignment is pruned by contractivity, isotonicity against every
// assigned comparable tuple, and f(v, ..., v) = v for every assigned value v.
// Requires m <= 3, n <= 3; the budget bounds search nodes. Sorted output.
std::vector<Transformation> all_interior(const Shape& shape, std::uint64_t budget = kExhaustMax);
// Naive filter of all_transformations by is_interior.
std::vector<Transformation> all_interior_by_filter(const Shape& shape,
                                                   std::uint64_t budget = kExhaustMax);

std::vector<Kernel> all_kernel(const Shape& shape);

// Backtracking over commutative tables with x*x = x, associativity at leaves.
std::vector<Semigroup> all_semilattices(int q, std::uint64_t budget = kExhaustMax);
// Naive filter of all q^(q^2) tables.
std::vector<Semigroup> all_semilattices_by_filter(int q, std::uint64_t budget = kExhaustMax);

// Every op table satisfying superassociativity and the three diagonal identities.
std::vector<MengerAlgebra> all_identity_algebras(int q, int n, std::uint64_t budget = kExhaustMax);

// Deterministic per seed; entries uniform over P(A).
Transformation random_transformation(const Shape& shape, std::uint64_t seed);
// greatest_interior_below of a random contractive table (each bit of
// X_1 ∩ ... ∩ X_n kept with probability 3/4).
Transformation random_interior(const Shape& shape, std::uint64_t seed);

// Greatest interior operation g with g ≼ s. A set U is admissible when
// U ⊆ s(X) for every tuple X with U ⊆ X_1 ∩ ... ∩ X_n; admissible sets are
// closed under union and g(X) is the union of those inside X_1 ∩ ... ∩ X_n.
Transformation greatest_interior_below(const Transformation& s);

struct CensusRecord {
  std::string cls;  // transformations | interior | kernel | semilattices | menger-identities
  int size = 0;     // m, or q for semilattices / menger-identities
  std::optional<int> arity;
  std::uint64_t count = 0;
  bool oracle_checked = false;
  int generator_version = 1;

  // "class,m_or_q,n,count"; n is empty for semilattices.
  std::string csv() const;
};

struct CensusMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// Counts with the structured generator and, when feasible, confirms against
// the naive oracle (throws CensusMismatch on disagreement).
CensusRecord census(const std::string& cls, int size, std::optional<int> arity,
                    std::uint64_t budget = kExhaustMax);

// interior at (1,1) (1,2) (1,3) (2,1); semilattices at q = 1, 2, 3.
std::vector<CensusRecord> standard_census(std::uint64_t budget = kExhaustMax);

}  // namespace menger
