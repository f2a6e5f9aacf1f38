// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Usage: acceptance <path to menger binary>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "menger/enumerate.hpp"
#include "menger/suite.hpp"

using namespace menger;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitInterior = 10.0;
constexpr double kLimitCensus = 5.0;
constexpr double kLimitRepresentation = 10.0;

constexpr std::uint64_t kRandomT1 = 100000;
constexpr std::uint64_t kRandomP1 = 10000;
constexpr std::uint64_t kSeed = 20240601;

const std::vector<std::pair<int, int>> kExhaustiveShapes{{1, 1}, {1, 2}, {1, 3}, {2, 1}};

std::string cli;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

StreamSpec exhaustive(int m, int n) {
  StreamSpec s;
  s.m = m;
  s.n = n;
  return s;
}

StreamSpec random(int m, int n, std::uint64_t count) {
  StreamSpec s = exhaustive(m, n);
  s.exhaustive = false;
  s.count = count;
  s.seed = kSeed;
  return s;
}

void expect_run(Outcome& o, const std::string& law, const StreamSpec& spec, std::uint64_t expected_count) {
  const SuiteResult r = run_law(law, spec);
  std::ostringstream what;
  what << law << " at (" << spec.m << "," << spec.n << "): " << r.failures << " failures in " << r.checked;
  o.require(r.pass(), what.str());
  if (expected_count) o.require(r.checked == expected_count, what.str() + ", expected " + std::to_string(expected_count));
}

int run_cli(const std::string& args) {
  const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void timed(Outcome& o, double limit, std::chrono::steady_clock::time_point t0) {
  const double s = seconds_since(t0);
  std::ostringstream what;
  what.precision(3);
  what << "took " << s << " s, limit " << limit << " s";
  o.require(s < limit, what.str());
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (auto [m, n] : kExhaustiveShapes) expect_run(o, "T1", exhaustive(m, n), *transformation_count(Shape(m, n)));
  expect_run(o, "T1", random(2, 2, kRandomT1), kRandomT1);
  timed(o, kLimitInterior, t0);
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::uint64_t disagreements = 0;
  for (auto [m, n] : kExhaustiveShapes) {
    expect_run(o, "T2", exhaustive(m, n), *transformation_count(Shape(m, n)));
    for_each_transformation(Shape(m, n), [&](const Transformation& f) {
      for (EmptyFamily e : {EmptyFamily::excluded, EmptyFamily::included}) {
        if (is_full_union_distributive(f, e).pass != full_distributive_by_families(f, SetOp::union_, e).pass) ++disagreements;
        if (is_full_intersection_distributive(f, e).pass !=
            full_distributive_by_families(f, SetOp::intersection, e).pass) {
          ++disagreements;
        }
      }
      return true;
    });
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " reduced/family-oracle disagreements");
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::uint64_t failures = 0, checked = 0;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& k : all_kernel(Shape(m, n))) {
        const Transformation f = k.expand();
        ++checked;
        const bool ok = is_interior(f).pass && is_union_distributive(f).pass && is_intersection_distributive(f).pass &&
                        is_full_union_distributive(f).pass && is_full_intersection_distributive(f).pass;
        if (!ok) ++failures;
      }
    }
  }
  o.require(failures == 0, std::to_string(failures) + " of " + std::to_string(checked) + " kernel maps fail");
  o.require(checked == 2 * 3 + 4 * 3 + 8 * 3, "unexpected kernel count " + std::to_string(checked));
  return o;
}

Outcome criterion4() {
  Outcome o;
  o.require(all_interior(Shape(2, 1)).size() == 7, "interior count at (2,1) is not 7");
  o.require(all_interior_by_filter(Shape(2, 1)).size() == 7, "filtered interior count at (2,1) is not 7");
  expect_run(o, "T3", exhaustive(2, 1), 49);
  const int found = run_cli("find-counterexample composition-not-closed --m 2 --n 1");
  o.require(found == 0, "find-counterexample at (2,1) exited " + std::to_string(found));
  const int none = run_cli("find-counterexample composition-not-closed --m 1 --n 1");
  o.require(none == 1, "find-counterexample at (1,1) exited " + std::to_string(none));
  return o;
}

Outcome criterion5() {
  Outcome o;
  expect_run(o, "P1", random(2, 2, kRandomP1), kRandomP1);
  expect_run(o, "P1", exhaustive(2, 1), 0);
  expect_run(o, "P2", exhaustive(2, 1), 49);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::string csv;
  for (const auto& r : standard_census()) {
    o.require(r.oracle_checked, r.csv() + " not confirmed by the naive filter");
    csv += r.csv() + "\n";
  }
  timed(o, kLimitCensus, t0);
  std::ifstream in(MENGER_GOLDEN_CENSUS, std::ios::binary);
  std::stringstream golden;
  golden << in.rdbuf();
  o.require(in.good() || in.eof(), "cannot read golden census");
  o.require(golden.str() == csv, "census differs from golden file");
  const int rc = run_cli(std::string("census standard --golden \"") + MENGER_GOLDEN_CENSUS + "\"");
  o.require(rc == 0, "census --golden exited " + std::to_string(rc));
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t labeled[] = {0, 1, 2, 9};
  for (int q = 1; q <= 3; ++q) {
    for (int n = 1; n <= 2; ++n) {
      StreamSpec s = exhaustive(q, n);
      s.q = q;
      expect_run(o, "T4", s, labeled[q]);
    }
  }
  timed(o, kLimitRepresentation, t0);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto found = all_identity_algebras(2, 2);
  std::vector<MengerAlgebra> derived;
  for (const auto& s : all_semilattices(2)) derived.push_back(derive_from_semigroup(s, 2));
  std::sort(derived.begin(), derived.end());
  o.require(derived.size() == 2, "expected 2 semilattices on {0,1}");
  o.require(found == derived, std::to_string(found.size()) + " identity algebras, not the 2 derived ones");
  return o;
}

Outcome criterion9() {
  Outcome o;
  expect_run(o, "C5", exhaustive(2, 1), 256);
  expect_run(o, "C9", exhaustive(2, 1), 49);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <menger binary>\n";
    return 2;
  }
  cli = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"interior characterization, exhaustive and 1e5 random", criterion1},
      {"kernel characterization and family oracle agreement", criterion2},
      {"kernel maps are interior and distributive", criterion3},
      {"composition criterion over 49 interior pairs", criterion4},
      {"order properties and diagonal composition", criterion5},
      {"census golden file", criterion6},
      {"representation round trip", criterion7},
      {"identity algebras are derived", criterion8},
      {"unary corollaries", criterion9},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("threw: ") + e.what());
    }
    char line[256];
    std::snprintf(line, sizeof line, "%s #%zu %s (%.2f s)", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                  seconds_since(t0));
    std::cout << line << (o.detail.empty() ? "" : ": " + o.detail) << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
