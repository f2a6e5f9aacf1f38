#include "menger/algebra.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "menger/io.hpp"

namespace menger {

namespace {

constexpr std::size_t kMaxAlgebraEntries = std::size_t{1} << 20;

// Visits every tuple of `length` carrier elements in lexicographic order until
// `visit` returns false. Returns false iff stopped early.
bool for_each_tuple(int q, int length, const std::function<bool(std::span<const Element>)>& visit) {
  std::vector<Element> t(length, 0);
  while (true) {
    if (!visit(t)) return false;
    int pos = length - 1;
    while (pos >= 0 && ++t[pos] == q) t[pos--] = 0;
    if (pos < 0) return true;
  }
}

ElementWitness pass_element(std::string check) { return {std::move(check), true, {}}; }

ElementWitness first_failure(std::string check, int q, int length,
                             const std::function<bool(std::span<const Element>)>& holds) {
  ElementWitness w = pass_element(std::move(check));
  for_each_tuple(q, length, [&](std::span<const Element> t) {
    if (holds(t)) return true;
    w.pass = false;
    w.elements.assign(t.begin(), t.end());
    return false;
  });
  return w;
}

ElementWitness prefixed(ElementWitness w, const std::string& prefix) {
  w.check = prefix + w.check;
  return w;
}

void require_identity_algebra(const MengerAlgebra& alg) {
  auto describe = [](const ElementWitness& w) {
    std::string s = w.check + " fails at (";
    for (std::size_t i = 0; i < w.elements.size(); ++i) {
      s += (i ? "," : "") + std::to_string(w.elements[i]);
    }
    return s + ")";
  };
  if (ElementWitness w = check_superassociative(alg); !w) {
    throw PreconditionError(describe(w));
  }
  IdentityReport ids = check_identities(alg);
  if (const ElementWitness* w = ids.first_failure()) throw PreconditionError(describe(*w));
}

}  // namespace

MengerAlgebra::MengerAlgebra(int q, int n, std::vector<Element> op)
    : q_(q), n_(n), op_(std::move(op)) {
  if (q < 1) throw DomainError("carrier must be nonempty");
  if (n < 1) throw DomainError("rank must be >= 1");
  std::size_t expected = static_cast<std::size_t>(q);
  for (int i = 0; i < n; ++i) {
    expected *= static_cast<std::size_t>(q);
    if (expected > kMaxAlgebraEntries) throw ResourceGuardError("operation table too large");
  }
  if (op_.size() != expected) {
    throw DomainError("op has " + std::to_string(op_.size()) + " entries, expected " +
                      std::to_string(expected));
  }
  for (Element v : op_) {
    if (v < 0 || v >= q) throw DomainError("op entry " + std::to_string(v) + " out of range");
  }
}

std::size_t MengerAlgebra::index(Element x, std::span<const Element> ys) const {
  if (static_cast<int>(ys.size()) != n_) throw DomainError("wrong number of arguments");
  std::size_t idx = static_cast<std::size_t>(x);
  for (Element y : ys) idx = idx * q_ + y;
  return idx;
}

Element MengerAlgebra::apply_diagonal(Element x, Element y) const {
  std::size_t idx = static_cast<std::size_t>(x);
  for (int i = 0; i < n_; ++i) idx = idx * q_ + y;
  return op_[idx];
}

Semigroup::Semigroup(int q, std::vector<Element> table) : q_(q), table_(std::move(table)) {
  if (q < 1) throw DomainError("carrier must be nonempty");
  if (table_.size() != static_cast<std::size_t>(q) * q) {
    throw DomainError("semigroup table has " + std::to_string(table_.size()) +
                      " entries, expected " + std::to_string(q * q));
  }
  for (Element v : table_) {
    if (v < 0 || v >= q) throw DomainError("table entry " + std::to_string(v) + " out of range");
  }
}

const ElementWitness* IdentityReport::first_failure() const {
  for (const ElementWitness* w : {&idempotent, &commutative, &expansion}) {
    if (!w->pass) return w;
  }
  return nullptr;
}

ElementWitness check_superassociative(const MengerAlgebra& alg) {
  const int n = alg.rank();
  std::vector<Element> inner(n);
  return first_failure("superassociative", alg.size(), 2 * n + 1, [&](std::span<const Element> t) {
    const Element x = t[0];
    auto gs = t.subspan(1, n);
    auto hs = t.subspan(1 + n, n);
    const Element lhs = alg.apply(alg.apply(x, gs), hs);
    for (int i = 0; i < n; ++i) inner[i] = alg.apply(gs[i], hs);
    return lhs == alg.apply(x, inner);
  });
}

IdentityReport check_identities(const MengerAlgebra& alg) {
  const int q = alg.size();
  const int n = alg.rank();
  IdentityReport r;
  r.idempotent = first_failure("diagonal-idempotent", q, 1, [&](std::span<const Element> t) {
    return alg.apply_diagonal(t[0], t[0]) == t[0];
  });
  r.commutative = first_failure("diagonal-commutative", q, 2, [&](std::span<const Element> t) {
    return alg.apply_diagonal(t[0], t[1]) == alg.apply_diagonal(t[1], t[0]);
  });
  r.expansion = first_failure("diagonal-expansion", q, n + 1, [&](std::span<const Element> t) {
    Element folded = t[0];
    for (Element y : t.subspan(1)) folded = alg.apply_diagonal(folded, y);
    return alg.apply(t[0], t.subspan(1)) == folded;
  });
  return r;
}

Semigroup diagonal(const MengerAlgebra& alg) {
  const int q = alg.size();
  std::vector<Element> table(static_cast<std::size_t>(q) * q);
  for (Element x = 0; x < q; ++x) {
    for (Element y = 0; y < q; ++y) table[x * q + y] = alg.apply_diagonal(x, y);
  }
  return Semigroup(q, std::move(table));
}

ElementWitness check_associative(const Semigroup& s) {
  return first_failure("associative", s.size(), 3, [&](std::span<const Element> t) {
    return s(s(t[0], t[1]), t[2]) == s(t[0], s(t[1], t[2]));
  });
}

ElementWitness is_semilattice(const Semigroup& s) {
  const int q = s.size();
  ElementWitness w = first_failure("idempotent", q, 1, [&](std::span<const Element> t) {
    return s(t[0], t[0]) == t[0];
  });
  if (!w) return prefixed(std::move(w), "semilattice/");
  w = first_failure("commutative", q, 2, [&](std::span<const Element> t) {
    return s(t[0], t[1]) == s(t[1], t[0]);
  });
  if (!w) return prefixed(std::move(w), "semilattice/");
  w = check_associative(s);
  if (!w) return prefixed(std::move(w), "semilattice/");
  return pass_element("semilattice");
}

MengerAlgebra derive_from_semigroup(const Semigroup& s, int n) {
  if (!check_associative(s)) throw PreconditionError("semigroup table is not associative");
  const int q = s.size();
  std::vector<Element> op;
  for_each_tuple(q, n + 1, [&](std::span<const Element> t) {
    Element v = t[0];
    for (Element y : t.subspan(1)) v = s(v, y);
    op.push_back(v);
    return true;
  });
  return MengerAlgebra(q, n, std::move(op));
}

ElementWitness is_derived(const MengerAlgebra& alg) {
  const Semigroup d = diagonal(alg);
  return first_failure("derived", alg.size(), alg.rank() + 1, [&](std::span<const Element> t) {
    Element v = t[0];
    for (Element y : t.subspan(1)) v = d(v, y);
    return alg.apply(t[0], t.subspan(1)) == v;
  });
}

OmegaOrder::OmegaOrder(int q, std::vector<bool> relation) : q_(q), relation_(std::move(relation)) {
  if (q < 1 || q > 32) throw DomainError("order carrier size out of range");
  if (relation_.size() != static_cast<std::size_t>(q) * q) {
    throw DomainError("relation matrix has wrong size");
  }
}

Mask OmegaOrder::upset(Element x) const {
  Mask m = 0;
  for (Element y = 0; y < q_; ++y) {
    if (related(x, y)) m |= Mask{1} << y;
  }
  return m;
}

ElementWitness OmegaOrder::check_partial_order() const {
  ElementWitness w = first_failure("reflexive", q_, 1, [&](std::span<const Element> t) {
    return related(t[0], t[0]);
  });
  if (!w) return w;
  w = first_failure("antisymmetric", q_, 2, [&](std::span<const Element> t) {
    return t[0] == t[1] || !(related(t[0], t[1]) && related(t[1], t[0]));
  });
  if (!w) return w;
  w = first_failure("transitive", q_, 3, [&](std::span<const Element> t) {
    return !(related(t[0], t[1]) && related(t[1], t[2])) || related(t[0], t[2]);
  });
  if (!w) return w;
  return pass_element("partial-order");
}

OmegaOrder omega_order(const Semigroup& s) {
  if (ElementWitness w = is_semilattice(s); !w) {
    throw PreconditionError("omega order needs a semilattice: " + w.check + " fails");
  }
  const int q = s.size();
  std::vector<bool> rel(static_cast<std::size_t>(q) * q);
  for (Element x = 0; x < q; ++x) {
    for (Element y = 0; y < q; ++y) rel[x * q + y] = s(x, y) == y;
  }
  return OmegaOrder(q, std::move(rel));
}

ElementWitness check_upset_intersection(const MengerAlgebra& alg) {
  require_identity_algebra(alg);
  const OmegaOrder omega = omega_order(diagonal(alg));
  return first_failure("upset-intersection", alg.size(), alg.rank() + 1,
                       [&](std::span<const Element> t) {
                         Mask meet = omega.upset(t[0]);
                         for (Element y : t.subspan(1)) meet &= omega.upset(y);
                         return omega.upset(alg.apply(t[0], t.subspan(1))) == meet;
                       });
}

std::vector<Transformation> Representation::family() const {
  std::vector<Transformation> out;
  out.reserve(kernels.size());
  for (const auto& k : kernels) out.push_back(k.expand());
  return out;
}

Representation represent(const MengerAlgebra& alg) {
  require_identity_algebra(alg);
  OmegaOrder omega = omega_order(diagonal(alg));
  Shape ground(alg.size(), alg.rank());
  std::vector<Kernel> kernels;
  for (Element g = 0; g < alg.size(); ++g) kernels.push_back(Kernel{ground, omega.upset(g)});
  return Representation{alg, std::move(omega), ground, std::move(kernels)};
}

LawReport verify_representation(const Representation& rep) {
  const MengerAlgebra& alg = rep.algebra;
  const int q = alg.size();
  const int n = alg.rank();
  nlohmann::json inputs = to_json(rep);
  LawReport report;
  report.law = "T4";
  report.inputs = inputs.dump();
  report.digest = fnv1a_hex(report.inputs);

  auto element_fail = [](std::string check, std::vector<Index> elements) {
    return Witness{std::move(check), false, Counterexample{std::move(elements), {}}};
  };
  auto record = [&](Witness w) {
    report.pass = report.pass && w.pass;
    report.witnesses.push_back(std::move(w));
  };

  if (static_cast<int>(rep.kernels.size()) != q) {
    record(element_fail("kernel-count", {rep.kernels.size()}));
    return report;
  }
  for (const auto& k : rep.kernels) {
    if (!(k.shape == rep.ground)) {
      record(element_fail("kernel-shape", {}));
      return report;
    }
  }
  const std::vector<Transformation> family = rep.family();

  Witness interior{"image-interior", true, {}};
  for (Element g = 0; g < q && interior.pass; ++g) {
    if (!is_interior(family[g])) interior = element_fail("image-interior", {Index(g)});
  }
  record(std::move(interior));

  Witness homomorphism{"homomorphism", true, {}};
  Witness closure{"kernel-intersection", true, {}};
  std::vector<Transformation> inner;
  for_each_tuple(q, n + 1, [&](std::span<const Element> t) {
    inner.clear();
    Mask meet = rep.kernels[t[0]].kernel;
    for (Element y : t.subspan(1)) {
      inner.push_back(family[y]);
      meet &= rep.kernels[y].kernel;
    }
    const Transformation composed = superpose(family[t[0]], inner);
    std::vector<Index> at(t.begin(), t.end());
    if (homomorphism.pass && composed != family[alg.apply(t[0], t.subspan(1))]) {
      homomorphism = element_fail("homomorphism", at);
    }
    if (closure.pass) {
      auto k = kernel_of(composed);
      if (!k || k->kernel != meet) closure = element_fail("kernel-intersection", at);
    }
    return homomorphism.pass || closure.pass;
  });
  record(std::move(homomorphism));
  record(std::move(closure));

  Witness injective{"injective", true, {}};
  for (Element a = 0; a < q && injective.pass; ++a) {
    for (Element b = a + 1; b < q; ++b) {
      if (rep.kernels[a].kernel == rep.kernels[b].kernel) {
        injective = element_fail("injective", {Index(a), Index(b)});
        break;
      }
    }
  }
  record(std::move(injective));
  return report;
}

std::optional<std::vector<Element>> semigroup_isomorphic(const Semigroup& a, const Semigroup& b) {
  const int q = a.size();
  if (b.size() != q) return std::nullopt;

  // Relabeling-invariant profile of an element.
  auto profile = [q](const Semigroup& s, Element x) {
    std::array<int, 5> p{s(x, x) == x ? 1 : 0, 0, 0, 0, 0};
    for (Element y = 0; y < q; ++y) {
      p[1] += s(x, y) == x;
      p[2] += s(y, x) == x;
      p[3] += s(x, y) == y;
      p[4] += s(y, x) == y;
    }
    return p;
  };
  std::vector<std::array<int, 5>> pa(q), pb(q);
  for (Element x = 0; x < q; ++x) {
    pa[x] = profile(a, x);
    pb[x] = profile(b, x);
  }
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<Element> phi(q, -1);
  std::vector<bool> used(q, false);
  auto consistent = [&](Element upto) {
    for (Element x = 0; x <= upto; ++x) {
      for (Element y = 0; y <= upto; ++y) {
        const Element xy = a(x, y);
        if (xy <= upto && phi[xy] != b(phi[x], phi[y])) return false;
      }
    }
    return true;
  };
  std::function<bool(Element)> assign = [&](Element x) {
    if (x == q) return true;
    for (Element target = 0; target < q; ++target) {
      if (used[target] || pa[x] != pb[target]) continue;
      phi[x] = target;
      used[target] = true;
      if (consistent(x) && assign(x + 1)) return true;
      used[target] = false;
      phi[x] = -1;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return phi;
}

}  // namespace menger
