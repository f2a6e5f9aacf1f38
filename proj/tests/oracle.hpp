#pragma once

// Brute-force restatements of the definitions over explicit tuple vectors.
// Nothing here uses the library's index tricks (bitwise tuple meets,
// single-coordinate reductions, search pruning).

#include <functional>
#include <vector>

#include "menger/transform.hpp"

namespace oracle {

using menger::Mask;
using menger::Transformation;
using Tuple = std::vector<Mask>;

inline std::vector<Tuple> all_tuples(int m, int n) {
  std::vector<Tuple> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<Tuple> next;
    for (const auto& t : out) {
      for (Mask x = 0; x < (Mask{1} << m); ++x) {
        auto u = t;
        u.push_back(x);
        next.push_back(u);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::uint64_t index_of(const Tuple& t, int m) {
  std::uint64_t idx = 0, scale = 1;
  for (Mask x : t) {
    idx += x * scale;
    scale *= (std::uint64_t{1} << m);
  }
  return idx;
}

inline Mask eval(const Transformation& f, const Tuple& t) {
  return f.table()[index_of(t, f.shape().atoms())];
}

inline bool sub(Mask a, Mask b) { return (a | b) == b; }

inline Mask meet(const Tuple& t, Mask full) {
  Mask acc = full;
  for (Mask x : t) acc = acc & x;
  return acc;
}

inline Transformation superpose(const Transformation& f, const std::vector<Transformation>& gs) {
  const int m = f.shape().atoms(), n = f.shape().arity();
  std::vector<Mask> table(f.shape().tuple_count());
  for (const auto& t : all_tuples(m, n)) {
    Tuple inner;
    for (const auto& g : gs) inner.push_back(eval(g, t));
    table[index_of(t, m)] = eval(f, inner);
  }
  return Transformation(f.shape(), table);
}

inline bool contractive(const Transformation& f) {
  for (const auto& t : all_tuples(f.shape().atoms(), f.shape().arity())) {
    for (Mask x : t) {
      if (!sub(eval(f, t), x)) return false;
    }
  }
  return true;
}

inline bool idempotent(const Transformation& f) {
  std::vector<Transformation> gs(f.shape().arity(), f);
  return superpose(f, gs) == f;
}

inline bool componentwise_le(const Tuple& a, const Tuple& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!sub(a[i], b[i])) return false;
  }
  return true;
}

inline bool isotone(const Transformation& f) {
  const auto ts = all_tuples(f.shape().atoms(), f.shape().arity());
  for (const auto& a : ts) {
    for (const auto& b : ts) {
      if (componentwise_le(a, b) && !sub(eval(f, a), eval(f, b))) return false;
    }
  }
  return true;
}

inline bool interior(const Transformation& f) {
  return contractive(f) && idempotent(f) && isotone(f);
}

// Binary distributive law in every slot with every frame H.
inline bool distributive(const Transformation& f, bool is_union) {
  const int m = f.shape().atoms(), n = f.shape().arity();
  for (const auto& h : all_tuples(m, n)) {
    for (int i = 0; i < n; ++i) {
      for (Mask x = 0; x < (Mask{1} << m); ++x) {
        for (Mask y = 0; y < (Mask{1} << m); ++y) {
          Tuple hx = h, hy = h, hxy = h;
          hx[i] = x;
          hy[i] = y;
          hxy[i] = is_union ? (x | y) : (x & y);
          const Mask rhs = is_union ? (eval(f, hx) | eval(f, hy)) : (eval(f, hx) & eval(f, hy));
          if (eval(f, hxy) != rhs) return false;
        }
      }
    }
  }
  return true;
}

inline bool kernel_form(const Transformation& f) {
  const int m = f.shape().atoms(), n = f.shape().arity();
  const Mask full = (Mask{1} << m) - 1;
  const Mask k = eval(f, Tuple(n, full));
  for (const auto& t : all_tuples(m, n)) {
    if (eval(f, t) != (k & meet(t, full))) return false;
  }
  return true;
}

// Every table in any order.
inline void for_each_table(const menger::Shape& s, const std::function<void(const Transformation&)>& visit) {
  std::vector<Mask> table(s.tuple_count(), 0);
  const Mask radix = static_cast<Mask>(s.subset_count());
  while (true) {
    visit(Transformation(s, table));
    std::size_t pos = 0;
    while (pos < table.size() && ++table[pos] == radix) table[pos++] = 0;
    if (pos == table.size()) return;
  }
}

}  // namespace oracle
