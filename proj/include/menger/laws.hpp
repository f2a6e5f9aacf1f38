#pragma once

#include <span>
#include <string>
#include <vector>

#include "menger/transform.hpp"

namespace menger {

// Outcome of checking one theorem on one concrete input. `inputs` is the
// canonical JSON of the checked transformations (or algebra), enough to replay
// the check; `digest` is a 64-bit FNV-1a hash of it in hex.
struct LawReport {
  std::string law;
  std::string digest;
  std::string inputs;
  bool pass = true;
  std::vector<Witness> witnesses;

  explicit operator bool() const { return pass; }
};

// T1: interior ⇔ interior-inclusion.
LawReport verify_interior_characterization(const Transformation& f);

// T2: (contractive ∧ full-∪) ⇔ (contractive ∧ ∪) ⇔ kernel form.
LawReport verify_kernel_characterization(const Transformation& f);

// C1: kernel form ⇒ interior.
LawReport verify_kernel_is_interior(const Transformation& f);

// C2: interior ∧ ∪ ⇒ ∩, and interior ∧ full-∪ ⇒ full-∩.
LawReport verify_distributivity_transfer(const Transformation& f);

// T3: for interior f, g_1..g_n, f[g_1..g_n] is interior ⇔ composition criterion.
// Throws PreconditionError when an input is not interior.
LawReport verify_composition_criterion(const Transformation& f,
                                       std::span<const Transformation> gs);

// P1 (a) contractive f: f[g] ≼ g_i; (b) isotone f, g_i ≼ h_i: f[g] ≼ f[h];
// (c) isotone f, contractive g: f*g ≼ f, checked for every contractive g_i, h_i.
// Parts whose antecedent fails are skipped.
LawReport verify_order_properties(const Transformation& f, std::span<const Transformation> gs,
                                  std::span<const Transformation> hs);

// P2: for interior f, g: f*g interior ⇔ f*g = g*f*g ⇔ f*g = f*g*f.
// Throws PreconditionError when an input is not interior.
LawReport verify_diagonal_composition(const Transformation& f, const Transformation& g);

// C5 (n = 1): interior ⇔ f(X ∩ Y) ⊆ f(f(X)) ∩ f(Y) ∩ Y, written for unary maps.
LawReport verify_unary_interior_inclusion(const Transformation& f);

// C9 (n = 1): for interior f, g: f∘g interior ⇔ f∘g = f∘g∘f.
// Throws PreconditionError when an input is not interior.
LawReport verify_unary_composition(const Transformation& f, const Transformation& g);

// C5 on f, plus C9 on (f, g) when both are interior. Throws DomainError unless n = 1.
LawReport verify_unary_corollaries(const Transformation& f, const Transformation& g);

std::string fnv1a_hex(const std::string& text);

}  // namespace menger
