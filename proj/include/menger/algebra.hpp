#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "menger/laws.hpp"
#include "menger/setcore.hpp"
#include "menger/transform.hpp"

namespace menger {

using Element = int;

// Finite Menger algebra of rank n on {0, ..., q-1}. Entry
// ((x*q + y_1)*q + y_2)... holds x[y_1 ... y_n].
class MengerAlgebra {
 public:
  MengerAlgebra(int q, int n, std::vector<Element> op);

  int size() const { return q_; }
  int rank() const { return n_; }
  std::span<const Element> table() const { return op_; }

  std::size_t index(Element x, std::span<const Element> ys) const;
  Element apply(Element x, std::span<const Element> ys) const { return op_[index(x, ys)]; }
  // x[y ... y]
  Element apply_diagonal(Element x, Element y) const;

  bool operator==(const MengerAlgebra&) const = default;
  auto operator<=>(const MengerAlgebra& other) const { return op_ <=> other.op_; }

 private:
  int q_;
  int n_;
  std::vector<Element> op_;
};

// Binary operation table on {0, ..., q-1}, row-major.
class Semigroup {
 public:
  Semigroup(int q, std::vector<Element> table);

  int size() const { return q_; }
  std::span<const Element> table() const { return table_; }
  Element operator()(Element x, Element y) const { return table_[x * q_ + y]; }

  bool operator==(const Semigroup&) const = default;
  auto operator<=>(const Semigroup& other) const { return table_ <=> other.table_; }

 private:
  int q_;
  std::vector<Element> table_;
};

// Verdict over carrier elements; `elements` is the least failing instance in
// the order the check enumerates it.
struct ElementWitness {
  std::string check;
  bool pass = true;
  std::vector<Element> elements;

  explicit operator bool() const { return pass; }
};

struct IdentityReport {
  ElementWitness idempotent;   // x[x ... x] = x
  ElementWitness commutative;  // x[y ... y] = y[x ... x]
  ElementWitness expansion;    // x[y_1 ... y_n] = x[y_1 ... y_1] ... [y_n ... y_n]

  bool all() const { return idempotent.pass && commutative.pass && expansion.pass; }
  // First failing identity, or nullptr.
  const ElementWitness* first_failure() const;
};

ElementWitness check_superassociative(const MengerAlgebra& alg);
IdentityReport check_identities(const MengerAlgebra& alg);

Semigroup diagonal(const MengerAlgebra& alg);
ElementWitness check_associative(const Semigroup& s);
ElementWitness is_semilattice(const Semigroup& s);

// x[y_1 ... y_n] = x * y_1 * ... * y_n. Throws PreconditionError unless s is associative.
MengerAlgebra derive_from_semigroup(const Semigroup& s, int n);
ElementWitness is_derived(const MengerAlgebra& alg);

// ω = {(x, y) | x * y = y}; upset(x) is ω⟨x⟩ as a mask over the carrier.
class OmegaOrder {
 public:
  OmegaOrder(int q, std::vector<bool> relation);

  int size() const { return q_; }
  bool related(Element x, Element y) const { return relation_[x * q_ + y]; }
  Mask upset(Element x) const;
  ElementWitness check_partial_order() const;

 private:
  int q_;
  std::vector<bool> relation_;
};

// Throws PreconditionError unless s is a semilattice.
OmegaOrder omega_order(const Semigroup& s);

// ω⟨x[y_1 ... y_n]⟩ = ω⟨x⟩ ∩ ω⟨y_1⟩ ∩ ... ∩ ω⟨y_n⟩.
// Throws PreconditionError naming the failed law when alg is not superassociative
// or violates one of the identities.
ElementWitness check_upset_intersection(const MengerAlgebra& alg);

// g -> (X_1..X_n -> ω⟨g⟩ ∩ X_1 ∩ ... ∩ X_n) over the ground set G itself.
struct Representation {
  MengerAlgebra algebra;
  OmegaOrder omega;
  Shape ground;
  std::vector<Kernel> kernels;  // indexed by carrier element

  std::vector<Transformation> family() const;
};

// Throws PreconditionError when alg is not superassociative or fails an identity.
Representation represent(const MengerAlgebra& alg);

// Law "T4": every image interior, P is a homomorphism, P is injective, and the
// image is closed under superposition with kernel ∩.
LawReport verify_representation(const Representation& rep);

// Bijection phi with phi(x * y) = phi(x) * phi(y), or nullopt.
std::optional<std::vector<Element>> semigroup_isomorphic(const Semigroup& a, const Semigroup& b);

}  // namespace menger
