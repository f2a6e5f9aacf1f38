#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace menger {

// Subset of a finite ground set: bit i set iff atom i is a member.
using Mask = std::uint32_t;
// Linear index of an argument tuple (X_1, ..., X_n).
using Index = std::uint64_t;

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

struct ResourceGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxAtoms = 4;
// Guard on m * n; a full table has 2^(m*n) entries.
inline constexpr int kMaxTableBits = 12;

class GroundSet {
 public:
  explicit GroundSet(int atoms, int max_atoms = kMaxAtoms) : m_(atoms) {
    if (atoms < 1 || atoms > max_atoms) {
      throw ResourceGuardError("ground set size " + std::to_string(atoms) +
                               " outside [1, " + std::to_string(max_atoms) + "]");
    }
  }

  int size() const { return m_; }
  Mask full() const { return (Mask{1} << m_) - 1; }
  std::size_t subset_count() const { return std::size_t{1} << m_; }
  bool valid(Mask x) const { return x <= full(); }

  bool operator==(const GroundSet&) const = default;

 private:
  int m_;
};

// Shape of an n-place transformation of P(A) with |A| = m.
//
// Tuples are encoded little-endian in radix 2^m: X_1 occupies the low m bits.
// Because each component is a bit field, componentwise intersection of two
// tuples is the bitwise AND of their indices.
class Shape {
 public:
  Shape(int atoms, int arity) : ground_(atoms) {
    if (arity < 1) throw DomainError("arity must be >= 1");
    if (atoms * arity > kMaxTableBits) {
      throw ResourceGuardError("m*n = " + std::to_string(atoms * arity) + " exceeds " +
                               std::to_string(kMaxTableBits));
    }
    n_ = arity;
  }

  int atoms() const { return ground_.size(); }
  int arity() const { return n_; }
  const GroundSet& ground() const { return ground_; }
  Mask full() const { return ground_.full(); }
  std::size_t subset_count() const { return ground_.subset_count(); }
  std::size_t tuple_count() const { return std::size_t{1} << (atoms() * n_); }

  Index encode(std::span<const Mask> tuple) const {
    if (static_cast<int>(tuple.size()) != n_) {
      throw DomainError("tuple has " + std::to_string(tuple.size()) + " components, expected " +
                        std::to_string(n_));
    }
    Index idx = 0;
    for (int i = n_ - 1; i >= 0; --i) {
      if (!ground_.valid(tuple[i])) {
        throw DomainError("subset " + std::to_string(tuple[i]) + " out of range for m=" +
                          std::to_string(atoms()));
      }
      idx = (idx << atoms()) | tuple[i];
    }
    return idx;
  }

  std::vector<Mask> decode(Index idx) const {
    if (idx >= tuple_count()) throw DomainError("tuple index out of range");
    std::vector<Mask> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = component(idx, i);
    return out;
  }

  Mask component(Index idx, int slot) const {
    return static_cast<Mask>(idx >> (atoms() * slot)) & full();
  }

  Index replace(Index idx, int slot, Mask x) const {
    const int shift = atoms() * slot;
    return (idx & ~(Index{full()} << shift)) | (Index{x} << shift);
  }

  // The tuple (x, ..., x).
  Index diagonal(Mask x) const {
    Index idx = 0;
    for (int i = 0; i < n_; ++i) idx = (idx << atoms()) | x;
    return idx;
  }

  Mask intersect_all(Index idx) const {
    Mask acc = full();
    for (int i = 0; i < n_; ++i) acc &= component(idx, i);
    return acc;
  }

  // Componentwise X_i ⊆ Y_i.
  bool componentwise_subset(Index x, Index y) const { return (x & ~y) == 0; }

  bool operator==(const Shape&) const = default;

 private:
  GroundSet ground_;
  int n_ = 1;
};

inline Mask intersect_all(std::span<const Mask> tuple) {
  if (tuple.empty()) throw DomainError("intersect_all of an empty tuple");
  Mask acc = tuple.front();
  for (Mask x : tuple.subspan(1)) acc &= x;
  return acc;
}

inline bool subset_of(Mask x, Mask y) { return (x & ~y) == 0; }

inline int popcount(Mask x) { return std::popcount(x); }

}  // namespace menger
