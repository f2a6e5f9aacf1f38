#include "menger/suite.hpp"

#include <functional>
#include <random>

#include "menger/algebra.hpp"
#include "menger/io.hpp"

namespace menger {

namespace {

using Verify = std::function<LawReport()>;

class Runner {
 public:
  explicit Runner(std::string law) { result_.law = std::move(law); }

  void run(const LawReport& r) {
    ++result_.checked;
    if (r.pass) return;
    if (result_.failures++ == 0) result_.first_failure = r;
  }

  SuiteResult done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

void require_unary(const std::string& law, const Shape& s) {
  if (s.arity() != 1) throw DomainError(law + " is stated for n = 1");
}

void guard_pairs(std::uint64_t a, std::uint64_t b, std::uint64_t budget, const std::string& what) {
  if (b != 0 && a > budget / b) throw ResourceGuardError(what + " exceeds the exhaustive budget");
}

// Visits every n-tuple drawn from `pool`, last slot fastest.
void for_each_tuple(const std::vector<Transformation>& pool, int n,
                    const std::function<void(const std::vector<Transformation>&)>& visit) {
  if (pool.empty()) return;
  std::vector<std::size_t> pos(n, 0);
  std::vector<Transformation> tuple(n, pool[0]);
  while (true) {
    visit(tuple);
    int i = n - 1;
    while (i >= 0 && ++pos[i] == pool.size()) {
      pos[i] = 0;
      tuple[i] = pool[0];
      --i;
    }
    if (i < 0) return;
    tuple[i] = pool[pos[i]];
  }
}

std::uint64_t ipow(std::uint64_t base, int e, std::uint64_t budget, const std::string& what) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    guard_pairs(r, base, budget, what);
    r *= base;
  }
  return r;
}

// Contractive table with every value inside X_1 ∩ ... ∩ X_n.
Transformation random_contractive(const Shape& s, std::uint64_t seed) {
  const Transformation r = random_transformation(s, seed);
  std::vector<Mask> t(s.tuple_count());
  for (Index i = 0; i < s.tuple_count(); ++i) t[i] = r[i] & s.intersect_all(i);
  return Transformation(s, std::move(t));
}

Transformation join(const Transformation& a, const Transformation& b) {
  std::vector<Mask> t(a.shape().tuple_count());
  for (Index i = 0; i < t.size(); ++i) t[i] = a[i] | b[i];
  return Transformation(a.shape(), std::move(t));
}

LawReport algebra_report(const MengerAlgebra& alg) {
  auto fail = [&](const ElementWitness& w) {
    LawReport r;
    r.law = "T4";
    r.inputs = to_json(alg).dump();
    r.digest = fnv1a_hex(r.inputs);
    r.pass = false;
    Witness out{w.check, false, Counterexample{}};
    for (Element e : w.elements) out.counterexample->tuples.push_back(static_cast<Index>(e));
    r.witnesses.push_back(std::move(out));
    return r;
  };
  if (ElementWitness w = check_superassociative(alg); !w) return fail(w);
  const IdentityReport ids = check_identities(alg);
  if (const ElementWitness* w = ids.first_failure()) return fail(*w);
  if (ElementWitness w = check_upset_intersection(alg); !w) return fail(w);
  return verify_representation(represent(alg));
}

SuiteResult run_t4(const StreamSpec& spec) {
  Runner run("T4");
  const auto lattices = all_semilattices(spec.q, spec.budget);
  if (spec.exhaustive) {
    for (const auto& s : lattices) run.run(algebra_report(derive_from_semigroup(s, spec.n)));
  } else {
    std::mt19937_64 rng(spec.seed);
    for (std::uint64_t i = 0; i < spec.count; ++i) {
      run.run(algebra_report(derive_from_semigroup(lattices[rng() % lattices.size()], spec.n)));
    }
  }
  return run.done();
}

}  // namespace

const std::vector<std::string>& law_ids() {
  static const std::vector<std::string> ids{"T1", "T2", "C1", "C2", "T3", "P1", "P2", "C5", "C9", "T4"};
  return ids;
}

SuiteResult run_law(const std::string& law, const StreamSpec& spec) {
  if (law == "T4") return run_t4(spec);
  const Shape shape(spec.m, spec.n);
  Runner run(law);
  std::mt19937_64 rng(spec.seed);

  using Single = LawReport (*)(const Transformation&);
  Single single = nullptr;
  if (law == "T1") single = verify_interior_characterization;
  if (law == "T2") single = verify_kernel_characterization;
  if (law == "C1") single = verify_kernel_is_interior;
  if (law == "C2") single = verify_distributivity_transfer;
  if (law == "C5") {
    require_unary(law, shape);
    single = verify_unary_interior_inclusion;
  }
  if (single) {
    if (spec.exhaustive) {
      for_each_transformation(shape, [&](const Transformation& f) {
        run.run(single(f));
        return true;
      }, spec.budget);
    } else {
      for (std::uint64_t i = 0; i < spec.count; ++i) run.run(single(random_transformation(shape, rng())));
    }
    return run.done();
  }

  if (law == "T3") {
    if (spec.exhaustive) {
      const auto pool = all_interior(shape, spec.budget);
      ipow(pool.size(), shape.arity() + 1, spec.budget, "interior tuple stream");
      for (const auto& f : pool) {
        for_each_tuple(pool, shape.arity(), [&](const std::vector<Transformation>& gs) {
          run.run(verify_composition_criterion(f, gs));
        });
      }
    } else {
      for (std::uint64_t i = 0; i < spec.count; ++i) {
        const Transformation f = random_interior(shape, rng());
        std::vector<Transformation> gs;
        for (int k = 0; k < shape.arity(); ++k) gs.push_back(random_interior(shape, rng()));
        run.run(verify_composition_criterion(f, gs));
      }
    }
    return run.done();
  }

  if (law == "P2" || law == "C9") {
    if (law == "C9") require_unary(law, shape);
    auto verify = law == "P2" ? verify_diagonal_composition : verify_unary_composition;
    if (spec.exhaustive) {
      const auto pool = all_interior(shape, spec.budget);
      guard_pairs(pool.size(), pool.size(), spec.budget, "interior pair stream");
      for (const auto& f : pool) {
        for (const auto& g : pool) run.run(verify(f, g));
      }
    } else {
      for (std::uint64_t i = 0; i < spec.count; ++i) {
        const Transformation f = random_interior(shape, rng());
        run.run(verify(f, random_interior(shape, rng())));
      }
    }
    return run.done();
  }

  if (law == "P1") {
    if (spec.exhaustive) {
      require_unary(law, shape);
      const auto all = all_transformations(shape, spec.budget);
      std::vector<std::pair<std::size_t, std::size_t>> ordered;
      for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = 0; b < all.size(); ++b) {
          if (pointwise_leq(all[a], all[b])) ordered.emplace_back(a, b);
        }
      }
      for (const auto& f : all) {
        if (is_contractive(f)) {
          for (const auto& g : all) {
            const std::vector<Transformation> gs{g};
            run.run(verify_order_properties(f, gs, gs));
          }
        }
        if (is_isotone(f)) {
          for (const auto& [a, b] : ordered) {
            const std::vector<Transformation> gs{all[a]}, hs{all[b]};
            run.run(verify_order_properties(f, gs, hs));
          }
        }
      }
    } else {
      for (std::uint64_t i = 0; i < spec.count; ++i) {
        const Transformation f = random_interior(shape, rng());
        std::vector<Transformation> gs, hs;
        for (int k = 0; k < shape.arity(); ++k) {
          gs.push_back(random_contractive(shape, rng()));
          hs.push_back(join(gs.back(), random_transformation(shape, rng())));
        }
        run.run(verify_order_properties(f, gs, hs));
      }
    }
    return run.done();
  }

  throw DomainError("unknown law: " + law);
}

std::optional<Claim> parse_claim(const std::string& name) {
  if (name == "composition-not-closed") return Claim::composition_not_closed;
  if (name == "eq8-fails" || name == "composition-criterion-fails") return Claim::eq8_fails;
  if (name == "distributive-gap") return Claim::distributive_gap;
  return std::nullopt;
}

std::optional<std::vector<Transformation>> find_counterexample(Claim claim, const Shape& shape,
                                                               std::uint64_t budget) {
  const auto pool = all_interior(shape, budget);
  if (claim == Claim::distributive_gap) {
    for (const auto& f : pool) {
      if (!is_union_distributive(f)) return std::vector<Transformation>{f};
    }
    return std::nullopt;
  }
  ipow(pool.size(), shape.arity() + 1, budget, "interior tuple stream");
  std::optional<std::vector<Transformation>> found;
  for (const auto& f : pool) {
    for_each_tuple(pool, shape.arity(), [&](const std::vector<Transformation>& gs) {
      if (found) return;
      const bool hit = claim == Claim::composition_not_closed ? !is_interior(superpose(f, gs)).pass
                                                              : !satisfies_composition_criterion(f, gs).pass;
      if (hit) {
        found = std::vector<Transformation>{f};
        found->insert(found->end(), gs.begin(), gs.end());
      }
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace menger
