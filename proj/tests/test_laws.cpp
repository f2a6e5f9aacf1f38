#include <doctest.h>

#include "menger/enumerate.hpp"
#include "menger/laws.hpp"

using namespace menger;

namespace {

Transformation T(int m, int n, std::vector<Mask> table) { return Transformation(Shape(m, n), table); }

const Transformation kKernelA = T(2, 1, {0, 1, 0, 1});
const Transformation kG = T(2, 1, {0, 0, 2, 3});

}  // namespace

TEST_CASE("interior characterization") {
  for (const auto& f : all_transformations(Shape(1, 1))) CHECK(verify_interior_characterization(f).pass);
  LawReport r = verify_interior_characterization(kG);
  CHECK(r.pass);
  CHECK(r.law == "T1");
  CHECK(r.witnesses[0].pass);
  CHECK(r.witnesses[1].pass);
  r = verify_interior_characterization(T(1, 1, {1, 0}));
  CHECK(r.pass);
  CHECK_FALSE(r.witnesses[0].pass);
  CHECK_FALSE(r.witnesses[1].pass);
}

TEST_CASE("kernel characterization") {
  LawReport r = verify_kernel_characterization(kKernelA);
  CHECK(r.pass);
  for (const auto& w : r.witnesses) CHECK(w.pass);
  r = verify_kernel_characterization(kG);
  CHECK(r.pass);
  CHECK(r.witnesses[0].pass);  // contractive
  for (std::size_t i = 1; i < r.witnesses.size(); ++i) CHECK_FALSE(r.witnesses[i].pass);
  CHECK(verify_kernel_characterization(Transformation::constant(Shape(2, 2), 0)).pass);
}

TEST_CASE("kernel form implies interior; distributivity transfers") {
  for (int m = 1; m <= 2; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& k : all_kernel(Shape(m, n))) {
        CHECK(verify_kernel_is_interior(k.expand()).pass);
        CHECK(verify_distributivity_transfer(k.expand()).pass);
      }
    }
  }
  LawReport r = verify_distributivity_transfer(kG);
  CHECK(r.pass);
  CHECK_FALSE(r.witnesses[1].pass);  // antecedent ∪-distributivity fails
  r = verify_distributivity_transfer(kKernelA);
  CHECK(r.pass);
  for (const auto& w : r.witnesses) CHECK(w.pass);
}

TEST_CASE("composition criterion theorem") {
  LawReport r = verify_composition_criterion(kKernelA, std::vector<Transformation>{kG});
  CHECK(r.pass);
  CHECK_FALSE(r.witnesses[0].pass);
  CHECK_FALSE(r.witnesses[1].pass);
  r = verify_composition_criterion(kG, std::vector<Transformation>{kKernelA});
  CHECK(r.pass);
  CHECK(r.witnesses[0].pass);
  CHECK(r.witnesses[1].pass);
  for (const auto& f : all_interior(Shape(1, 3))) {
    std::vector<Transformation> gs(3, f);
    CHECK(verify_composition_criterion(f, gs).pass);
  }
  CHECK_THROWS_AS(verify_composition_criterion(T(2, 1, {0, 0, 0, 1}), std::vector<Transformation>{kG}),
                  PreconditionError);
  CHECK_THROWS_AS(verify_composition_criterion(kG, std::vector<Transformation>{T(2, 1, {1, 1, 2, 3})}),
                  PreconditionError);
}

TEST_CASE("order properties") {
  const Shape s(2, 2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::vector<Transformation> gs{random_transformation(s, seed), random_transformation(s, seed + 1)};
    const Transformation f = random_interior(s, seed);
    LawReport r = verify_order_properties(f, gs, gs);
    CHECK(r.pass);
    CHECK(r.law == "P1");
    CHECK_FALSE(r.witnesses.empty());
  }
  const Transformation f = random_interior(Shape(2, 1), 11);
  const std::vector<Transformation> empty{Transformation::constant(Shape(2, 1), 0)};
  LawReport r = verify_order_properties(f, empty, empty);
  CHECK(r.pass);
  // Neither contractive nor isotone: nothing to check.
  const Transformation wild = T(2, 1, {3, 0, 1, 0});
  CHECK(verify_order_properties(wild, empty, empty).witnesses.empty());
}

TEST_CASE("diagonal composition") {
  LawReport r = verify_diagonal_composition(kKernelA, kG);
  CHECK(r.pass);
  for (const auto& w : r.witnesses) CHECK_FALSE(w.pass);
  r = verify_diagonal_composition(kG, kKernelA);
  CHECK(r.pass);
  for (const auto& w : r.witnesses) CHECK(w.pass);
  r = verify_diagonal_composition(kG, kG);
  CHECK(r.pass);
  for (const auto& w : r.witnesses) CHECK(w.pass);
  CHECK_THROWS_AS(verify_diagonal_composition(T(2, 1, {1, 1, 1, 1}), kG), PreconditionError);
}

TEST_CASE("unary corollaries") {
  for (const auto& f : all_transformations(Shape(2, 1))) {
    REQUIRE(verify_unary_interior_inclusion(f).pass);
  }
  LawReport r = verify_unary_composition(kKernelA, kG);
  CHECK(r.pass);
  CHECK_FALSE(r.witnesses[0].pass);
  CHECK_FALSE(r.witnesses[1].pass);
  r = verify_unary_composition(kG, kG);
  CHECK(r.pass);
  CHECK(r.witnesses[0].pass);
  CHECK(r.witnesses[1].pass);
  CHECK(verify_unary_corollaries(kKernelA, kG).pass);
  CHECK(verify_unary_corollaries(T(2, 1, {3, 2, 1, 0}), kG).pass);
  CHECK_THROWS_AS(verify_unary_corollaries(Transformation::constant(Shape(1, 2), 0),
                                           Transformation::constant(Shape(1, 2), 0)),
                  DomainError);
}

TEST_CASE("reports are pure and carry replayable inputs") {
  LawReport a = verify_kernel_characterization(kG);
  LawReport b = verify_kernel_characterization(kG);
  CHECK(a.digest == b.digest);
  CHECK(a.inputs == b.inputs);
  CHECK(a.inputs.find("\"table\":[0,0,2,3]") != std::string::npos);
  CHECK(verify_kernel_characterization(kKernelA).digest != a.digest);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
}
