#include <doctest.h>

#include "menger/suite.hpp"

using namespace menger;

namespace {

StreamSpec exhaustive(int m, int n) {
  StreamSpec s;
  s.m = m;
  s.n = n;
  return s;
}

StreamSpec random(int m, int n, std::uint64_t count, std::uint64_t seed) {
  StreamSpec s = exhaustive(m, n);
  s.exhaustive = false;
  s.count = count;
  s.seed = seed;
  return s;
}

}  // namespace

TEST_CASE("stream sizes") {
  CHECK(run_law("T1", exhaustive(2, 1)).checked == 256);
  CHECK(run_law("T2", exhaustive(1, 3)).checked == 256);
  CHECK(run_law("T3", exhaustive(2, 1)).checked == 49);
  CHECK(run_law("T3", exhaustive(1, 2)).checked == 8);
  CHECK(run_law("P2", exhaustive(2, 1)).checked == 49);
  CHECK(run_law("C9", exhaustive(2, 1)).checked == 49);
  CHECK(run_law("C1", random(2, 2, 50, 1)).checked == 50);
  StreamSpec t4 = exhaustive(1, 2);
  t4.q = 3;
  CHECK(run_law("T4", t4).checked == 9);
  for (const auto& law : law_ids()) CHECK(run_law(law, random(2, 1, 20, 5)).pass());
}

TEST_CASE("random streams are reproducible") {
  const SuiteResult a = run_law("P1", random(2, 2, 200, 17));
  const SuiteResult b = run_law("P1", random(2, 2, 200, 17));
  CHECK(a.checked == b.checked);
  CHECK(a.pass());
  CHECK(b.pass());
}

TEST_CASE("suite guards") {
  CHECK_THROWS_AS(run_law("T1", exhaustive(3, 3)), ResourceGuardError);
  StreamSpec small = exhaustive(2, 1);
  small.budget = 10;
  CHECK_THROWS_AS(run_law("T1", small), ResourceGuardError);
  CHECK_THROWS_AS(run_law("C5", exhaustive(1, 2)), DomainError);
  CHECK_THROWS_AS(run_law("P1", exhaustive(1, 2)), DomainError);
  CHECK_THROWS_AS(run_law("Z9", exhaustive(1, 1)), DomainError);
}

TEST_CASE("first counterexamples") {
  auto found = find_counterexample(Claim::composition_not_closed, Shape(2, 1));
  REQUIRE(found);
  REQUIRE(found->size() == 2);
  CHECK((*found)[0] == Transformation(Shape(2, 1), {0, 0, 2, 2}));
  CHECK((*found)[1] == Transformation(Shape(2, 1), {0, 0, 0, 3}));
  CHECK(superpose((*found)[0], std::vector<Transformation>{(*found)[1]}) ==
        Transformation(Shape(2, 1), {0, 0, 0, 2}));

  found = find_counterexample(Claim::eq8_fails, Shape(2, 1));
  REQUIRE(found);
  CHECK((*found)[0] == Transformation(Shape(2, 1), {0, 0, 2, 2}));
  CHECK((*found)[1] == Transformation(Shape(2, 1), {0, 0, 0, 3}));

  found = find_counterexample(Claim::distributive_gap, Shape(2, 1));
  REQUIRE(found);
  CHECK((*found)[0] == Transformation(Shape(2, 1), {0, 0, 0, 3}));

  for (int n = 1; n <= 3; ++n) {
    CHECK_FALSE(find_counterexample(Claim::composition_not_closed, Shape(1, n)));
    CHECK_FALSE(find_counterexample(Claim::distributive_gap, Shape(1, n)));
  }
  CHECK(parse_claim("eq8-fails") == Claim::eq8_fails);
  CHECK_FALSE(parse_claim("nothing"));
}
