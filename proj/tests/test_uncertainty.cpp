#include "doctest.h"

#include <cmath>

#include "entex/uncertainty.hpp"

using namespace entex;

namespace {

// Every vertex copies one fair +-1 seed.
SeedSystem plus_minus_copy(int n) {
  SeedSystem s;
  s.num_vertices = n;
  s.seeds = {Dist({-1.0, 1.0}, {0.5, 0.5})};
  s.visibility = {{}};
  for (int v = 0; v < n; ++v) {
    s.visibility[0].push_back(v);
    s.alphabets.push_back({-1.0, 1.0});
    s.tables.push_back({0, 1});
  }
  return s;
}

SeedSystem independent_pm(int n) {
  SeedSystem s;
  s.num_vertices = n;
  for (int v = 0; v < n; ++v) {
    s.seeds.push_back(Dist({0.5, 0.5}));
    s.visibility.push_back({v});
    s.alphabets.push_back({-1.0, 1.0});
    s.tables.push_back({0, 1});
  }
  return s;
}

}  // namespace

TEST_CASE("entropy pair") {
  const auto p = entropy_pair();
  CHECK(p.delta(Dist::point_mass(3, 2)) == 0.0);
  CHECK(std::abs(p.Delta(JointDist::product({Dist({0.5, 0.5}), Dist({0.5, 0.5})})) - 2 * std::log(2.0)) <
        1e-15);
  const auto d = probe_delta(p, {0, 1, 2}, 1000, 1);
  CHECK(d.violations == 0);
  CHECK(d.max_point_mass == 0.0);
  const auto pr = probe_pair(p, {0, 1}, {0, 1, 2}, 1000, 2);
  CHECK(pr.violations == 0);
  CHECK(pr.min_gap >= -kSlackTolerance);
}

TEST_CASE("variance pair") {
  const auto p = variance_pair({2, 0});
  const JointDist j({{0, {0, 1}}, {1, {-1, 3}}}, {0.25, 0.25, 0.25, 0.25});
  const auto m = pair_moments(j);
  CHECK(std::abs(p.Delta(j) - 2 * (m.var1 + m.var2)) < 1e-15);
  CHECK(std::abs(m.var1 - 0.25) < 1e-15);
  CHECK(std::abs(m.var2 - 4.0) < 1e-15);
  CHECK(p.Delta(JointDist({{0, {0, 1}}, {1, {-1, 3}}}, {0, 0, 1, 0})) == 0.0);

  const double edge = 2 * std::sqrt(2.0);
  CHECK_NOTHROW(variance_pair({2, edge}));
  CHECK_THROWS_AS(variance_pair({2, edge * (1 + 1e-9)}), std::invalid_argument);
  CHECK_THROWS_AS(variance_pair({1, 0}), std::invalid_argument);
  for (double b : {edge, -edge}) {
    const auto q = variance_pair({2, b});
    const auto r = probe_pair(q, {-1, 0, 2.5}, {-2, 0.5, 1}, 1000, 7);
    CHECK(r.violations == 0);
    CHECK(r.max_point_mass < 1e-15);
    CHECK(probe_delta(q, {-1, 0, 2.5}, 1000, 8).violations == 0);
  }
  // just outside the region the pair is not compatible; the probe sees it
  UncertaintyPair bad{"bad", [](const Dist& d) { return variance(d); },
                      [](const JointDist& jj) {
                        const auto mm = pair_moments(jj);
                        return 1.0 * (mm.var1 + mm.var2) + 1.5 * mm.cov;
                      }};
  CHECK(probe_pair(bad, {-1, 1}, {-1, 1}, 2000, 3).violations > 0);
}

TEST_CASE("uncertainty inequality with the entropy pair reduces to the edge inequality") {
  const auto g = SimpleGraph::cycle(5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = random_system({5, 3, 2, 3, 0.5, false}, seed);
    const auto a = verify_uncertainty(s, g, entropy_pair());
    const auto b = verify_regular_edge(s, g);
    CHECK(std::abs(a.lhs - b.lhs) <= 1e-12);
    CHECK(std::abs(a.slack - b.slack) <= 1e-12);
    CHECK(a.coefficient == b.coefficient);
  }
}

TEST_CASE("correlation bound") {
  const auto c4 = SimpleGraph::cycle(4);
  const auto ind = correlation_bound_check(independent_pm(4), c4);
  CHECK(ind.branch == "beta=d");
  CHECK(ind.lhs <= 1e-12);
  CHECK(ind.pass);

  const auto k4 = SimpleGraph::complete(4);
  const auto cp = correlation_bound_check(plus_minus_copy(4), k4);
  // beta = (3 + 0)/2 at W = V, so beta = d/2
  CHECK(cp.beta == 1.5);
  CHECK(cp.branch == "beta=d/2");
  CHECK(std::abs(cp.lhs - 6.0) < 1e-12);
  CHECK(std::abs(cp.rhs - 6.0) < 1e-12);
  CHECK(cp.pass);

  // interior branch: full visibility restricted to a proper subset
  auto s = plus_minus_copy(6);
  s.visibility = {{0, 1}};
  for (int v = 2; v < 6; ++v) {
    s.alphabets[v] = {0.0};
    s.tables[v] = {0};
  }
  const auto c6 = SimpleGraph::cycle(6);
  const auto r = correlation_bound_check(s, c6);
  CHECK(r.branch == "interior");
  CHECK(std::abs(r.beta - 1.5) < 1e-15);
  CHECK(std::abs(r.a - 1.5) < 1e-15);
  CHECK(r.pass);
  CHECK(r.derived_slack_plus >= -kSlackTolerance);
  CHECK(r.derived_slack_minus >= -kSlackTolerance);
}

TEST_CASE("correlation bound on random real-valued systems on cubic graphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_regular_graph(6, 3, seed);
    const auto s = random_system({6, 3, 3, 3, 0.5, true}, seed + 77);
    const auto r = correlation_bound_check(s, g);
    CHECK(r.slack >= -kSlackTolerance);
    CHECK(r.derived_slack_plus >= -kSlackTolerance);
    CHECK(r.derived_slack_minus >= -kSlackTolerance);
    const auto v = verify_uncertainty(s, g, variance_pair({2, 2 * std::sqrt(2.0)}));
    CHECK(v.pass);
  }
}
