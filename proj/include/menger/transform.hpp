#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "menger/setcore.hpp"

namespace menger {

// A total map P(A)^n -> P(A), stored densely in canonical tuple order.
class Transformation {
 public:
  Transformation(Shape shape, std::vector<Mask> table);

  static Transformation constant(Shape shape, Mask value);
  // (X_1, ..., X_n) -> X_{slot+1}; the identity when n == 1.
  static Transformation projection(Shape shape, int slot);

  const Shape& shape() const { return shape_; }
  std::span<const Mask> table() const { return table_; }
  Mask operator[](Index idx) const { return table_[idx]; }
  Mask operator()(std::span<const Mask> args) const { return table_[shape_.encode(args)]; }

  bool operator==(const Transformation& other) const {
    return shape_ == other.shape_ && table_ == other.table_;
  }
  // Lexicographic on the table; only meaningful for equal shapes.
  std::strong_ordering operator<=>(const Transformation& other) const {
    return table_ <=> other.table_;
  }

 private:
  Shape shape_;
  std::vector<Mask> table_;
};

// (X_1, ..., X_n) -> K ∩ X_1 ∩ ... ∩ X_n.
struct Kernel {
  Shape shape;
  Mask kernel = 0;

  Mask operator()(Index idx) const { return kernel & shape.intersect_all(idx); }
  Transformation expand() const;

  bool operator==(const Kernel&) const = default;
};

// Counterexample tuples are canonical indices. Two-tuple witnesses that vary a
// single coordinate record it in `slot` (0-based). The family oracle stores
// (frame, family) where bit x of `family` marks subset x as a member.
struct Counterexample {
  std::vector<Index> tuples;
  std::optional<int> slot;

  bool operator==(const Counterexample&) const = default;
};

struct Witness {
  std::string check;
  bool pass = true;
  std::optional<Counterexample> counterexample;

  explicit operator bool() const { return pass; }
};

// Whether the empty family counts as an instance of a full-distributivity law.
// The empty union is ∅ and the empty intersection is A.
enum class EmptyFamily { excluded, included };

// f[g_1 ... g_n]
Transformation superpose(const Transformation& f, std::span<const Transformation> gs);
// f[g ... g]
Transformation diagonal_product(const Transformation& f, const Transformation& g);
// f(X) ⊆ g(X) for every tuple.
bool pointwise_leq(const Transformation& f, const Transformation& g);

Witness is_contractive(const Transformation& f);
Witness is_idempotent(const Transformation& f);
// Single-coordinate form: slot i grows, the rest stay fixed.
Witness is_isotone(const Transformation& f);
// All pairs of componentwise-ordered tuples.
Witness is_isotone_all_pairs(const Transformation& f);
Witness is_interior(const Transformation& f);

Witness is_union_distributive(const Transformation& f);
Witness is_intersection_distributive(const Transformation& f);
// Binary law plus, optionally, the empty family.
Witness is_full_union_distributive(const Transformation& f,
                                   EmptyFamily empty = EmptyFamily::included);
Witness is_full_intersection_distributive(const Transformation& f,
                                          EmptyFamily empty = EmptyFamily::excluded);

enum class SetOp { union_, intersection };

// Direct check of the family-indexed law over every family of subsets
// (2^(2^m) per slot). Only for m <= 2.
Witness full_distributive_by_families(const Transformation& f, SetOp op, EmptyFamily empty);

// f(X ∩ Y) ⊆ f(f(X), ..., f(X)) ∩ f(Y) ∩ Y_1 ∩ ... ∩ Y_n for all tuples X, Y.
Witness satisfies_interior_inclusion(const Transformation& f);
// f(X) = f(A, ..., A) ∩ X_1 ∩ ... ∩ X_n.
Witness is_kernel_form(const Transformation& f);
std::optional<Kernel> kernel_of(const Transformation& f);
// g_i[f ... f][g_1 ... g_n] = f[g_1 ... g_n] for every i.
Witness satisfies_composition_criterion(const Transformation& f,
                                        std::span<const Transformation> gs);

// Re-evaluates the named check at the witness's counterexample; true iff the
// condition fails there. `gs` is needed for the composition criterion only.
bool reproduces(const Witness& w, const Transformation& f,
                std::span<const Transformation> gs = {});

}  // namespace menger
