#include "menger/transform.hpp"

#include <algorithm>
#include <limits>
#include <string_view>

namespace menger {

namespace {

constexpr Index kNone = std::numeric_limits<Index>::max();

void require_same_shape(const Transformation& a, const Transformation& b) {
  if (!(a.shape() == b.shape())) throw DomainError("transformation shapes differ");
}

Witness pass(std::string check) { return Witness{std::move(check), true, std::nullopt}; }

Witness fail(std::string check, std::vector<Index> tuples, std::optional<int> slot = std::nullopt) {
  return Witness{std::move(check), false, Counterexample{std::move(tuples), slot}};
}

// Slot in which two tuples differing in exactly one coordinate differ.
int differing_slot(const Shape& s, Index a, Index b) {
  for (int i = 0; i < s.arity(); ++i) {
    if (s.component(a, i) != s.component(b, i)) return i;
  }
  return 0;
}

// Local conditions: true iff the named law holds at the given instance.

bool contractive_at(const Transformation& f, Index a) {
  return subset_of(f[a], f.shape().intersect_all(a));
}

bool idempotent_at(const Transformation& f, Index a) {
  const Mask v = f[a];
  return f[f.shape().diagonal(v)] == v;
}

bool isotone_at(const Transformation& f, Index a, Index b) {
  return !f.shape().componentwise_subset(a, b) || subset_of(f[a], f[b]);
}

bool binary_law_at(const Transformation& f, SetOp op, Index a, Index b, int slot) {
  const Shape& s = f.shape();
  const Mask x = s.component(a, slot);
  const Mask y = s.component(b, slot);
  if (s.replace(a, slot, y) != b) return true;  // frames differ: not an instance
  if (op == SetOp::union_) return f[s.replace(a, slot, x | y)] == (f[a] | f[b]);
  return f[s.replace(a, slot, x & y)] == (f[a] & f[b]);
}

bool empty_family_at(const Transformation& f, SetOp op, Index a, int slot) {
  const Shape& s = f.shape();
  if (op == SetOp::union_) {
    return s.component(a, slot) != 0 || f[a] == 0;
  }
  return s.component(a, slot) != s.full() || f[a] == s.full();
}

bool family_law_at(const Transformation& f, SetOp op, Index frame, int slot, std::uint32_t family) {
  const Shape& s = f.shape();
  const bool is_union = op == SetOp::union_;
  Mask joined = is_union ? Mask{0} : s.full();
  Mask images = is_union ? Mask{0} : s.full();
  for (Mask x = 0; x < s.subset_count(); ++x) {
    if (!((family >> x) & 1u)) continue;
    const Mask image = f[s.replace(frame, slot, x)];
    if (is_union) {
      joined |= x;
      images |= image;
    } else {
      joined &= x;
      images &= image;
    }
  }
  return f[s.replace(frame, slot, joined)] == images;
}

bool inclusion_at(const Transformation& f, Index x, Index y) {
  const Shape& s = f.shape();
  const Mask lhs = f[x & y];
  const Mask rhs = f[s.diagonal(f[x])] & f[y] & s.intersect_all(y);
  return subset_of(lhs, rhs);
}

bool kernel_form_at(const Transformation& f, Index a) {
  const Shape& s = f.shape();
  return f[a] == (f[s.tuple_count() - 1] & s.intersect_all(a));
}

// Least failing single-coordinate partner b of each a, scanning a upward.
template <typename Candidates, typename Holds>
Witness scan_pairs(const Transformation& f, std::string check, Candidates candidates, Holds holds) {
  const Shape& s = f.shape();
  for (Index a = 0; a < s.tuple_count(); ++a) {
    Index best = kNone;
    for (int slot = 0; slot < s.arity(); ++slot) {
      candidates(a, slot, [&](Index b) {
        if (b < best && !holds(a, b, slot)) best = b;
      });
    }
    if (best != kNone) return fail(std::move(check), {a, best}, differing_slot(s, a, best));
  }
  return pass(std::move(check));
}

Witness binary_law(const Transformation& f, SetOp op, std::string check) {
  const Shape& s = f.shape();
  auto any_value = [&](Index a, int slot, auto&& visit) {
    for (Mask y = 0; y < s.subset_count(); ++y) visit(s.replace(a, slot, y));
  };
  return scan_pairs(f, std::move(check), any_value, [&](Index a, Index b, int slot) {
    return binary_law_at(f, op, a, b, slot);
  });
}

Witness empty_family_law(const Transformation& f, SetOp op, const std::string& check) {
  const Shape& s = f.shape();
  for (Index a = 0; a < s.tuple_count(); ++a) {
    for (int slot = 0; slot < s.arity(); ++slot) {
      if (!empty_family_at(f, op, a, slot)) return fail(check, {a}, slot);
    }
  }
  return pass(check);
}

Witness full_law(const Transformation& f, SetOp op, EmptyFamily empty, std::string check) {
  if (empty == EmptyFamily::included) {
    Witness w = empty_family_law(f, op, check);
    if (!w) return w;
  }
  return binary_law(f, op, std::move(check));
}

}  // namespace

Transformation::Transformation(Shape shape, std::vector<Mask> table)
    : shape_(shape), table_(std::move(table)) {
  if (table_.size() != shape_.tuple_count()) {
    throw DomainError("table has " + std::to_string(table_.size()) + " entries, expected " +
                      std::to_string(shape_.tuple_count()));
  }
  for (Mask v : table_) {
    if (!shape_.ground().valid(v)) {
      throw DomainError("table entry " + std::to_string(v) + " out of range for m=" +
                        std::to_string(shape_.atoms()));
    }
  }
}

Transformation Transformation::constant(Shape shape, Mask value) {
  return Transformation(shape, std::vector<Mask>(shape.tuple_count(), value));
}

Transformation Transformation::projection(Shape shape, int slot) {
  if (slot < 0 || slot >= shape.arity()) throw DomainError("projection slot out of range");
  std::vector<Mask> table(shape.tuple_count());
  for (Index idx = 0; idx < table.size(); ++idx) table[idx] = shape.component(idx, slot);
  return Transformation(shape, std::move(table));
}

Transformation Kernel::expand() const {
  std::vector<Mask> table(shape.tuple_count());
  for (Index idx = 0; idx < table.size(); ++idx) table[idx] = (*this)(idx);
  return Transformation(shape, std::move(table));
}

Transformation superpose(const Transformation& f, std::span<const Transformation> gs) {
  const Shape& s = f.shape();
  if (static_cast<int>(gs.size()) != s.arity()) {
    throw DomainError("superposition needs " + std::to_string(s.arity()) + " inner maps, got " +
                      std::to_string(gs.size()));
  }
  for (const auto& g : gs) require_same_shape(f, g);
  std::vector<Mask> table(s.tuple_count());
  for (Index idx = 0; idx < table.size(); ++idx) {
    Index arg = 0;
    for (int i = s.arity() - 1; i >= 0; --i) arg = (arg << s.atoms()) | gs[i][idx];
    table[idx] = f[arg];
  }
  return Transformation(s, std::move(table));
}

Transformation diagonal_product(const Transformation& f, const Transformation& g) {
  require_same_shape(f, g);
  std::vector<Mask> table(f.shape().tuple_count());
  for (Index idx = 0; idx < table.size(); ++idx) table[idx] = f[f.shape().diagonal(g[idx])];
  return Transformation(f.shape(), std::move(table));
}

bool pointwise_leq(const Transformation& f, const Transformation& g) {
  require_same_shape(f, g);
  for (Index idx = 0; idx < f.shape().tuple_count(); ++idx) {
    if (!subset_of(f[idx], g[idx])) return false;
  }
  return true;
}

Witness is_contractive(const Transformation& f) {
  for (Index a = 0; a < f.shape().tuple_count(); ++a) {
    if (!contractive_at(f, a)) return fail("contractive", {a});
  }
  return pass("contractive");
}

Witness is_idempotent(const Transformation& f) {
  for (Index a = 0; a < f.shape().tuple_count(); ++a) {
    if (!idempotent_at(f, a)) return fail("idempotent", {a});
  }
  return pass("idempotent");
}

Witness is_isotone(const Transformation& f) {
  const Shape& s = f.shape();
  auto proper_supersets = [&](Index a, int slot, auto&& visit) {
    const Mask x = s.component(a, slot);
    const Mask free = s.full() & ~x;
    // Nonempty subsets of `free`, each added to x.
    for (Mask extra = free; extra != 0; extra = (extra - 1) & free) {
      visit(s.replace(a, slot, x | extra));
    }
  };
  return scan_pairs(f, "isotone", proper_supersets,
                    [&](Index a, Index b, int) { return isotone_at(f, a, b); });
}

Witness is_isotone_all_pairs(const Transformation& f) {
  const Index count = f.shape().tuple_count();
  for (Index a = 0; a < count; ++a) {
    for (Index b = 0; b < count; ++b) {
      if (!isotone_at(f, a, b)) return fail("isotone-all-pairs", {a, b});
    }
  }
  return pass("isotone-all-pairs");
}

Witness is_interior(const Transformation& f) {
  for (auto check : {is_contractive, is_idempotent, is_isotone}) {
    Witness w = check(f);
    if (!w) {
      w.check = "interior/" + w.check;
      return w;
    }
  }
  return pass("interior");
}

Witness is_union_distributive(const Transformation& f) {
  return binary_law(f, SetOp::union_, "union-dist");
}

Witness is_intersection_distributive(const Transformation& f) {
  return binary_law(f, SetOp::intersection, "intersection-dist");
}

Witness is_full_union_distributive(const Transformation& f, EmptyFamily empty) {
  return full_law(f, SetOp::union_, empty, "full-union");
}

Witness is_full_intersection_distributive(const Transformation& f, EmptyFamily empty) {
  return full_law(f, SetOp::intersection, empty, "full-intersection");
}

Witness full_distributive_by_families(const Transformation& f, SetOp op, EmptyFamily empty) {
  const Shape& s = f.shape();
  if (s.atoms() > 2) throw DomainError("family oracle supports m <= 2 only");
  const std::string check =
      op == SetOp::union_ ? "families-union" : "families-intersection";
  const std::uint64_t families = std::uint64_t{1} << s.subset_count();
  const std::uint32_t first = empty == EmptyFamily::included ? 0u : 1u;
  for (Index frame = 0; frame < s.tuple_count(); ++frame) {
    for (int slot = 0; slot < s.arity(); ++slot) {
      if (s.component(frame, slot) != 0) continue;
      for (std::uint32_t fam = first; fam < families; ++fam) {
        if (!family_law_at(f, op, frame, slot, fam)) {
          Witness w = fail(check, {frame}, slot);
          // The family is carried as the second entry: bit x set iff subset x is a member.
          w.counterexample->tuples.push_back(fam);
          return w;
        }
      }
    }
  }
  return pass(check);
}

Witness satisfies_interior_inclusion(const Transformation& f) {
  const Shape& s = f.shape();
  const Index count = s.tuple_count();
  std::vector<Mask> rhs_x(count), rhs_y(count);
  for (Index t = 0; t < count; ++t) {
    rhs_x[t] = f[s.diagonal(f[t])];
    rhs_y[t] = f[t] & s.intersect_all(t);
  }
  for (Index x = 0; x < count; ++x) {
    for (Index y = 0; y < count; ++y) {
      if (!subset_of(f[x & y], rhs_x[x] & rhs_y[y])) return fail("interior-inclusion", {x, y});
    }
  }
  return pass("interior-inclusion");
}

Witness is_kernel_form(const Transformation& f) {
  for (Index a = 0; a < f.shape().tuple_count(); ++a) {
    if (!kernel_form_at(f, a)) return fail("kernel-form", {a});
  }
  return pass("kernel-form");
}

std::optional<Kernel> kernel_of(const Transformation& f) {
  if (!is_kernel_form(f)) return std::nullopt;
  return Kernel{f.shape(), f[f.shape().tuple_count() - 1]};
}

Witness satisfies_composition_criterion(const Transformation& f,
                                        std::span<const Transformation> gs) {
  const Transformation target = superpose(f, gs);
  std::vector<Transformation> lhs;
  lhs.reserve(gs.size());
  for (const auto& g : gs) lhs.push_back(superpose(diagonal_product(g, f), gs));
  for (Index a = 0; a < f.shape().tuple_count(); ++a) {
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (lhs[i][a] != target[a]) {
        return fail("composition-criterion", {a}, static_cast<int>(i));
      }
    }
  }
  return pass("composition-criterion");
}

bool reproduces(const Witness& w, const Transformation& f, std::span<const Transformation> gs) {
  if (w.pass || !w.counterexample) return false;
  const auto& ce = *w.counterexample;
  std::string_view name = w.check;
  if (name.starts_with("interior/")) name.remove_prefix(9);
  const auto& t = ce.tuples;
  const int slot = ce.slot.value_or(0);
  if (t.empty()) return false;
  for (Index idx : t) {
    if (name != "families-union" && name != "families-intersection" &&
        idx >= f.shape().tuple_count()) {
      return false;
    }
  }

  if (name == "contractive") return !contractive_at(f, t[0]);
  if (name == "idempotent") return !idempotent_at(f, t[0]);
  if (name == "isotone" || name == "isotone-all-pairs") {
    return t.size() == 2 && !isotone_at(f, t[0], t[1]);
  }
  if (name == "union-dist" || name == "intersection-dist" || name == "full-union" ||
      name == "full-intersection") {
    const SetOp op = name.find("union") != std::string_view::npos ? SetOp::union_
                                                                  : SetOp::intersection;
    if (t.size() == 1) return !empty_family_at(f, op, t[0], slot);
    return !binary_law_at(f, op, t[0], t[1], slot);
  }
  if (name == "families-union" || name == "families-intersection") {
    const SetOp op = name == "families-union" ? SetOp::union_ : SetOp::intersection;
    return t.size() == 2 && t[0] < f.shape().tuple_count() &&
           !family_law_at(f, op, t[0], slot, static_cast<std::uint32_t>(t[1]));
  }
  if (name == "interior-inclusion") return t.size() == 2 && !inclusion_at(f, t[0], t[1]);
  if (name == "kernel-form") return !kernel_form_at(f, t[0]);
  if (name == "composition-criterion") {
    if (static_cast<std::size_t>(slot) >= gs.size()) return false;
    const Transformation lhs = superpose(diagonal_product(gs[slot], f), gs);
    return lhs[t[0]] != superpose(f, gs)[t[0]];
  }
  return false;
}

}  // namespace menger
