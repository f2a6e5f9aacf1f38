#include "menger/laws.hpp"

#include <cstdio>

#include "menger/io.hpp"

namespace menger {

namespace {

std::string canonical_inputs(std::initializer_list<const Transformation*> singles,
                             std::span<const Transformation> gs = {},
                             std::span<const Transformation> hs = {}) {
  nlohmann::json j = nlohmann::json::object();
  const char* names[] = {"f", "g"};
  std::size_t k = 0;
  for (const Transformation* t : singles) j[names[k++]] = to_json(*t);
  auto list = [](std::span<const Transformation> ts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : ts) arr.push_back(to_json(t));
    return arr;
  };
  if (!gs.empty()) j["gs"] = list(gs);
  if (!hs.empty()) j["hs"] = list(hs);
  return j.dump();
}

LawReport make_report(std::string law, std::string inputs, bool pass,
                      std::vector<Witness> witnesses) {
  LawReport r;
  r.law = std::move(law);
  r.digest = fnv1a_hex(inputs);
  r.inputs = std::move(inputs);
  r.pass = pass;
  r.witnesses = std::move(witnesses);
  return r;
}

Witness verdict(std::string check, bool ok) { return Witness{std::move(check), ok, std::nullopt}; }

// Tuple where a(X) ⊄ b(X); slot records which inner map was compared, if any.
Witness leq_witness(std::string check, const Transformation& a, const Transformation& b,
                    std::optional<int> slot = std::nullopt) {
  for (Index idx = 0; idx < a.shape().tuple_count(); ++idx) {
    if (!subset_of(a[idx], b[idx])) {
      return Witness{std::move(check), false, Counterexample{{idx}, slot}};
    }
  }
  return verdict(std::move(check), true);
}

Witness equal_witness(std::string check, const Transformation& a, const Transformation& b) {
  for (Index idx = 0; idx < a.shape().tuple_count(); ++idx) {
    if (a[idx] != b[idx]) return Witness{std::move(check), false, Counterexample{{idx}, {}}};
  }
  return verdict(std::move(check), true);
}

void require_interior(const Transformation& t, const char* role) {
  if (!is_interior(t)) {
    throw PreconditionError(std::string(role) + " is not an interior operation");
  }
}

void require_unary(const Transformation& t) {
  if (t.shape().arity() != 1) throw DomainError("unary corollaries need n = 1");
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

LawReport verify_interior_characterization(const Transformation& f) {
  Witness interior = is_interior(f);
  Witness inclusion = satisfies_interior_inclusion(f);
  const bool ok = interior.pass == inclusion.pass;
  return make_report("T1", canonical_inputs({&f}), ok,
                     {std::move(interior), std::move(inclusion)});
}

LawReport verify_kernel_characterization(const Transformation& f) {
  Witness contractive = is_contractive(f);
  Witness full_union = is_full_union_distributive(f);
  Witness union_dist = is_union_distributive(f);
  Witness kernel = is_kernel_form(f);
  const bool first = contractive.pass && full_union.pass;
  const bool second = contractive.pass && union_dist.pass;
  const bool third = kernel.pass;
  const bool ok = first == second && second == third;
  return make_report("T2", canonical_inputs({&f}), ok,
                     {std::move(contractive), std::move(full_union), std::move(union_dist),
                      std::move(kernel)});
}

LawReport verify_kernel_is_interior(const Transformation& f) {
  Witness kernel = is_kernel_form(f);
  Witness interior = is_interior(f);
  const bool ok = !kernel.pass || interior.pass;
  return make_report("C1", canonical_inputs({&f}), ok, {std::move(kernel), std::move(interior)});
}

LawReport verify_distributivity_transfer(const Transformation& f) {
  Witness interior = is_interior(f);
  Witness u = is_union_distributive(f);
  Witness i = is_intersection_distributive(f);
  Witness fu = is_full_union_distributive(f);
  Witness fi = is_full_intersection_distributive(f);
  const bool binary = !(interior.pass && u.pass) || i.pass;
  const bool full = !(interior.pass && fu.pass) || fi.pass;
  return make_report("C2", canonical_inputs({&f}), binary && full,
                     {std::move(interior), std::move(u), std::move(i), std::move(fu),
                      std::move(fi)});
}

LawReport verify_composition_criterion(const Transformation& f,
                                       std::span<const Transformation> gs) {
  require_interior(f, "f");
  for (const auto& g : gs) require_interior(g, "g_i");
  Witness closed = is_interior(superpose(f, gs));
  closed.check = "superposition-" + closed.check;
  Witness criterion = satisfies_composition_criterion(f, gs);
  const bool ok = closed.pass == criterion.pass;
  return make_report("T3", canonical_inputs({&f}, gs), ok,
                     {std::move(closed), std::move(criterion)});
}

LawReport verify_order_properties(const Transformation& f, std::span<const Transformation> gs,
                                  std::span<const Transformation> hs) {
  if (gs.size() != hs.size()) throw DomainError("g and h lists differ in length");
  const bool contractive = is_contractive(f).pass;
  const bool isotone = is_isotone(f).pass;
  std::vector<Witness> out;
  bool ok = true;
  auto record = [&](Witness w) {
    ok = ok && w.pass;
    out.push_back(std::move(w));
  };

  const Transformation fg = superpose(f, gs);
  if (contractive) {
    for (std::size_t i = 0; i < gs.size(); ++i) {
      record(leq_witness("order-a", fg, gs[i], static_cast<int>(i)));
    }
  }
  if (isotone) {
    bool ordered = true;
    for (std::size_t i = 0; i < gs.size(); ++i) ordered = ordered && pointwise_leq(gs[i], hs[i]);
    if (ordered) record(leq_witness("order-b", fg, superpose(f, hs)));
    for (std::span<const Transformation> side : {gs, hs}) {
      for (std::size_t i = 0; i < side.size(); ++i) {
        if (is_contractive(side[i])) {
          record(leq_witness("order-c", diagonal_product(f, side[i]), f, static_cast<int>(i)));
        }
      }
    }
  }
  return make_report("P1", canonical_inputs({&f}, gs, hs), ok, std::move(out));
}

LawReport verify_diagonal_composition(const Transformation& f, const Transformation& g) {
  require_interior(f, "f");
  require_interior(g, "g");
  const Transformation fg = diagonal_product(f, g);
  Witness interior = is_interior(fg);
  interior.check = "product-" + interior.check;
  Witness left = equal_witness("product-left-absorb", fg, diagonal_product(g, fg));
  Witness right = equal_witness("product-right-absorb", fg, diagonal_product(fg, f));
  const bool ok = interior.pass == left.pass && left.pass == right.pass;
  return make_report("P2", canonical_inputs({&f, &g}), ok,
                     {std::move(interior), std::move(left), std::move(right)});
}

LawReport verify_unary_interior_inclusion(const Transformation& f) {
  require_unary(f);
  const Mask subsets = static_cast<Mask>(f.shape().subset_count());
  Witness inclusion = verdict("unary-inclusion", true);
  for (Mask x = 0; x < subsets && inclusion.pass; ++x) {
    for (Mask y = 0; y < subsets; ++y) {
      if (!subset_of(f[x & y], f[f[x]] & f[y] & y)) {
        inclusion = Witness{"unary-inclusion", false, Counterexample{{x, y}, {}}};
        break;
      }
    }
  }
  Witness interior = is_interior(f);
  const bool ok = interior.pass == inclusion.pass;
  return make_report("C5", canonical_inputs({&f}), ok, {std::move(interior), std::move(inclusion)});
}

LawReport verify_unary_composition(const Transformation& f, const Transformation& g) {
  require_unary(f);
  require_unary(g);
  require_interior(f, "f");
  require_interior(g, "g");
  const Shape& s = f.shape();
  std::vector<Mask> fg(s.tuple_count()), fgf(s.tuple_count());
  for (Mask x = 0; x < s.tuple_count(); ++x) {
    fg[x] = f[g[x]];
    fgf[x] = f[g[f[x]]];
  }
  const Transformation comp(s, fg);
  const Transformation comp_f(s, fgf);
  Witness interior = is_interior(comp);
  interior.check = "composite-" + interior.check;
  Witness absorb = equal_witness("composite-absorbs-f", comp, comp_f);
  const bool ok = interior.pass == absorb.pass;
  return make_report("C9", canonical_inputs({&f, &g}), ok,
                     {std::move(interior), std::move(absorb)});
}

LawReport verify_unary_corollaries(const Transformation& f, const Transformation& g) {
  require_unary(f);
  require_unary(g);
  LawReport first = verify_unary_interior_inclusion(f);
  std::vector<Witness> witnesses = first.witnesses;
  bool ok = first.pass;
  if (is_interior(f) && is_interior(g)) {
    LawReport second = verify_unary_composition(f, g);
    ok = ok && second.pass;
    witnesses.insert(witnesses.end(), second.witnesses.begin(), second.witnesses.end());
  }
  return make_report("C5/C9", canonical_inputs({&f, &g}), ok, std::move(witnesses));
}

}  // namespace menger
