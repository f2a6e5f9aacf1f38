#include "menger/enumerate.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace menger {

namespace {

// base^exponent, or nullopt past 2^64.
std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && acc > UINT64_MAX / base) return std::nullopt;
    acc *= base;
  }
  return acc;
}

void require_budget(std::optional<std::uint64_t> count, std::uint64_t budget, const std::string& what) {
  if (!count || *count > budget) {
    throw ResourceGuardError(what + " exceeds the exhaustive budget of " + std::to_string(budget));
  }
}

Mask random_bits(std::mt19937_64& rng, int m) { return static_cast<Mask>(rng() >> (64 - m)); }

// Odometer over vectors of `length` digits in [0, radix), last digit fastest.
template <typename T, typename Visit>
void for_each_word(int length, T radix, Visit visit) {
  std::vector<T> word(length, T{0});
  while (true) {
    if (!visit(word)) return;
    int pos = length - 1;
    while (pos >= 0 && ++word[pos] == radix) word[pos--] = T{0};
    if (pos < 0) return;
  }
}

class InteriorSearch {
 public:
  InteriorSearch(const Shape& shape, std::uint64_t budget)
      : shape_(shape), budget_(budget), table_(shape.tuple_count(), 0),
        assigned_(shape.tuple_count(), false) {
    for (Mask x = 0; x < shape.subset_count(); ++x) order_.push_back(shape.diagonal(x));
    for (Index idx = 0; idx < shape.tuple_count(); ++idx) {
      if (shape.diagonal(shape.component(idx, 0)) != idx) order_.push_back(idx);
    }
  }

  std::vector<Transformation> run() {
    descend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool admissible(Index idx, Mask v) const {
    const Index fixed = shape_.diagonal(v);
    if (fixed != idx && assigned_[fixed] && table_[fixed] != v) return false;
    for (Index other = 0; other < table_.size(); ++other) {
      if (!assigned_[other]) continue;
      if (shape_.componentwise_subset(other, idx) && !subset_of(table_[other], v)) return false;
      if (shape_.componentwise_subset(idx, other) && !subset_of(v, table_[other])) return false;
    }
    return true;
  }

  void descend(std::size_t depth) {
    if (++nodes_ > budget_) {
      throw ResourceGuardError("interior search exceeded " + std::to_string(budget_) + " nodes");
    }
    if (depth == order_.size()) {
      Transformation t(shape_, table_);
      if (is_interior(t)) found_.push_back(std::move(t));
      return;
    }
    const Index idx = order_[depth];
    const Mask cap = shape_.intersect_all(idx);
    // Subsets of cap in increasing order.
    for (Mask v = 0;; v = (v - cap) & cap) {
      if (admissible(idx, v)) {
        table_[idx] = v;
        assigned_[idx] = true;
        descend(depth + 1);
        assigned_[idx] = false;
      }
      if (v == cap) break;
    }
  }

  Shape shape_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Mask> table_;
  std::vector<bool> assigned_;
  std::vector<Index> order_;
  std::vector<Transformation> found_;
};

}  // namespace

std::optional<std::uint64_t> transformation_count(const Shape& shape) {
  return checked_power(shape.subset_count(), shape.tuple_count());
}

bool transformations_feasible(const Shape& shape, std::uint64_t budget) {
  auto count = transformation_count(shape);
  return count && *count <= budget;
}

void for_each_transformation(const Shape& shape,
                             const std::function<bool(const Transformation&)>& visit,
                             std::uint64_t budget) {
  require_budget(transformation_count(shape), budget, "transformation enumeration");
  for_each_word<Mask>(static_cast<int>(shape.tuple_count()), static_cast<Mask>(shape.subset_count()),
                      [&](const std::vector<Mask>& table) { return visit(Transformation(shape, table)); });
}

std::vector<Transformation> all_transformations(const Shape& shape, std::uint64_t budget) {
  std::vector<Transformation> out;
  for_each_transformation(shape, [&](const Transformation& t) {
    out.push_back(t);
    return true;
  }, budget);
  return out;
}

std::vector<Transformation> all_interior(const Shape& shape, std::uint64_t budget) {
  if (shape.atoms() > 3 || shape.arity() > 3) {
    throw ResourceGuardError("interior enumeration needs m <= 3 and n <= 3");
  }
  return InteriorSearch(shape, budget).run();
}

std::vector<Transformation> all_interior_by_filter(const Shape& shape, std::uint64_t budget) {
  std::vector<Transformation> out;
  for_each_transformation(shape, [&](const Transformation& t) {
    if (is_interior(t)) out.push_back(t);
    return true;
  }, budget);
  return out;
}

std::vector<Kernel> all_kernel(const Shape& shape) {
  std::vector<Kernel> out;
  for (Mask k = 0; k < shape.subset_count(); ++k) out.push_back(Kernel{shape, k});
  return out;
}

std::vector<Semigroup> all_semilattices(int q, std::uint64_t budget) {
  if (q < 1) throw DomainError("carrier must be nonempty");
  const int pairs = q * (q - 1) / 2;
  require_budget(checked_power(q, pairs), budget, "semilattice search");
  std::vector<Semigroup> out;
  std::vector<Element> table(static_cast<std::size_t>(q) * q);
  for_each_word<Element>(pairs, q, [&](const std::vector<Element>& upper) {
    std::size_t k = 0;
    for (Element x = 0; x < q; ++x) {
      table[x * q + x] = x;
      for (Element y = x + 1; y < q; ++y) {
        table[x * q + y] = table[y * q + x] = upper[k++];
      }
    }
    Semigroup s(q, table);
    if (check_associative(s)) out.push_back(std::move(s));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Semigroup> all_semilattices_by_filter(int q, std::uint64_t budget) {
  if (q < 1) throw DomainError("carrier must be nonempty");
  require_budget(checked_power(q, static_cast<std::uint64_t>(q) * q), budget, "semigroup tables");
  std::vector<Semigroup> out;
  for_each_word<Element>(q * q, q, [&](const std::vector<Element>& table) {
    Semigroup s(q, table);
    if (is_semilattice(s)) out.push_back(std::move(s));
    return true;
  });
  return out;
}

std::vector<MengerAlgebra> all_identity_algebras(int q, int n, std::uint64_t budget) {
  if (q < 1 || n < 1) throw DomainError("need q >= 1 and n >= 1");
  auto entries = checked_power(q, static_cast<std::uint64_t>(n) + 1);
  require_budget(entries ? checked_power(q, *entries) : std::nullopt, budget, "op tables");
  std::vector<MengerAlgebra> out;
  for_each_word<Element>(static_cast<int>(*entries), q, [&](const std::vector<Element>& op) {
    MengerAlgebra alg(q, n, op);
    if (check_superassociative(alg) && check_identities(alg).all()) out.push_back(std::move(alg));
    return true;
  });
  return out;
}

Transformation random_transformation(const Shape& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Mask> table(shape.tuple_count());
  for (auto& v : table) v = random_bits(rng, shape.atoms());
  return Transformation(shape, std::move(table));
}

Transformation random_interior(const Shape& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Mask> table(shape.tuple_count());
  for (Index idx = 0; idx < table.size(); ++idx) {
    const Mask keep = random_bits(rng, shape.atoms()) | random_bits(rng, shape.atoms());
    table[idx] = keep & shape.intersect_all(idx);
  }
  return greatest_interior_below(Transformation(shape, std::move(table)));
}

Transformation greatest_interior_below(const Transformation& s) {
  const Shape& shape = s.shape();
  std::vector<bool> open(shape.subset_count(), true);
  for (Index idx = 0; idx < shape.tuple_count(); ++idx) {
    const Mask cap = shape.intersect_all(idx);
    for (Mask u = 0; u < shape.subset_count(); ++u) {
      if (open[u] && subset_of(u, cap) && !subset_of(u, s[idx])) open[u] = false;
    }
  }
  std::vector<Mask> inner(shape.subset_count(), 0);
  for (Mask c = 0; c < shape.subset_count(); ++c) {
    for (Mask u = 0; u < shape.subset_count(); ++u) {
      if (open[u] && subset_of(u, c)) inner[c] |= u;
    }
  }
  std::vector<Mask> table(shape.tuple_count());
  for (Index idx = 0; idx < table.size(); ++idx) table[idx] = inner[shape.intersect_all(idx)];
  return Transformation(shape, std::move(table));
}

std::string CensusRecord::csv() const {
  return cls + "," + std::to_string(size) + "," + (arity ? std::to_string(*arity) : "") + "," +
         std::to_string(count);
}

CensusRecord census(const std::string& cls, int size, std::optional<int> arity,
                    std::uint64_t budget) {
  CensusRecord r;
  r.cls = cls;
  r.size = size;
  auto need_arity = [&]() {
    if (!arity) throw DomainError("census class " + cls + " needs --n");
    return *arity;
  };
  auto mismatch = [&](std::uint64_t oracle) {
    throw CensusMismatch(cls + ": generator count " + std::to_string(r.count) +
                         " != oracle count " + std::to_string(oracle));
  };

  if (cls == "semilattices") {
    const auto structured = all_semilattices(size, budget);
    r.count = structured.size();
    if (auto c = checked_power(size, static_cast<std::uint64_t>(size) * size); c && *c <= budget) {
      const auto naive = all_semilattices_by_filter(size, budget);
      if (naive != structured) mismatch(naive.size());
      r.oracle_checked = true;
    }
    return r;
  }

  r.arity = need_arity();
  if (cls == "menger-identities") {
    const auto found = all_identity_algebras(size, *arity, budget);
    r.count = found.size();
    std::vector<MengerAlgebra> derived;
    for (const auto& s : all_semilattices(size, budget)) {
      derived.push_back(derive_from_semigroup(s, *arity));
    }
    std::sort(derived.begin(), derived.end());
    if (derived != found) mismatch(derived.size());
    r.oracle_checked = true;
    return r;
  }

  const Shape shape(size, *arity);
  if (cls == "transformations") {
    auto count = transformation_count(shape);
    if (!count) throw ResourceGuardError("transformation count exceeds 64 bits");
    r.count = *count;
    if (*count <= budget) {
      std::uint64_t seen = 0;
      for_each_transformation(shape, [&](const Transformation&) { return ++seen, true; }, budget);
      if (seen != r.count) mismatch(seen);
      r.oracle_checked = true;
    }
  } else if (cls == "interior") {
    const auto pruned = all_interior(shape, budget);
    r.count = pruned.size();
    if (transformations_feasible(shape, budget)) {
      const auto naive = all_interior_by_filter(shape, budget);
      if (naive != pruned) mismatch(naive.size());
      r.oracle_checked = true;
    }
  } else if (cls == "kernel") {
    r.count = all_kernel(shape).size();
    if (transformations_feasible(shape, budget)) {
      std::uint64_t naive = 0;
      for_each_transformation(shape, [&](const Transformation& t) {
        naive += is_kernel_form(t).pass;
        return true;
      }, budget);
      if (naive != r.count) mismatch(naive);
      r.oracle_checked = true;
    }
  } else {
    throw DomainError("unknown census class: " + cls);
  }
  return r;
}

std::vector<CensusRecord> standard_census(std::uint64_t budget) {
  std::vector<CensusRecord> out;
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 1}}) {
    out.push_back(census("interior", m, n, budget));
  }
  for (int q = 1; q <= 3; ++q) out.push_back(census("semilattices", q, std::nullopt, budget));
  return out;
}

}  // namespace menger
