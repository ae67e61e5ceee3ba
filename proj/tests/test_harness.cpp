#include "doctest.h"

#include <cmath>

#include "entex/harness.hpp"

using namespace entex;

namespace {

const double kLog2 = std::log(2.0);

SeedSystem constant_system(int n) {
  SeedSystem s;
  s.num_vertices = n;
  s.seeds = {Dist({0.5, 0.5})};
  s.visibility = {{}};
  for (int v = 0; v < n; ++v) {
    s.visibility[0].push_back(v);
    s.alphabets.push_back({0});
    s.tables.push_back({0, 0});
  }
  return s;
}

// X_v = Z_v, independent fair bits, singleton visibility.
SeedSystem independent_system(int n) {
  SeedSystem s;
  s.num_vertices = n;
  for (int v = 0; v < n; ++v) {
    s.seeds.push_back(Dist({0.5, 0.5}));
    s.visibility.push_back({v});
    s.alphabets.push_back({0, 1});
    s.tables.push_back({0, 1});
  }
  return s;
}

// X_v = Z_0 for every v, full visibility.
SeedSystem copy_system(int n) {
  SeedSystem s = constant_system(n);
  for (int v = 0; v < n; ++v) {
    s.alphabets[v] = {0, 1};
    s.tables[v] = {0, 1};
  }
  return s;
}

}  // namespace

TEST_CASE("weighted inequality: constants and sharpness") {
  const auto tri = SimpleGraph::cycle(3).to_hypergraph();
  const auto r = verify_weighted(constant_system(3), tri);
  CHECK(r.lhs == 0.0);
  CHECK(r.rhs_base == 0.0);
  CHECK(r.pass);
  CHECK_THROWS_AS(verify_weighted(constant_system(4), tri), std::invalid_argument);

  const std::vector<VertexSet> vis{{0}, {1}, {2}};
  const auto b = beta(tri, vis);
  const auto sharp = sharpness_system(tri, vis, b.witness_seed, b.witness_set, Dist({0.2, 0.3, 0.5}));
  const auto rs = verify_weighted(sharp, tri);
  CHECK(std::abs(rs.slack) <= kSlackTolerance);
}

TEST_CASE("sharpness at every beta witness of random hypergraphs") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto h = random_hypergraph(5, 6, seed);
    const auto s = random_system({5, 3, 2, 2, 0.6, false}, seed + 1000);
    const auto b = beta(h, s.visibility);
    const auto sharp = sharpness_system(h, s.visibility, b.witness_seed, b.witness_set,
                                        Dist({0.25, 0.75}));
    const auto r = verify_weighted(sharp, h);
    CHECK(std::abs(r.slack) <= kSlackTolerance);
    CHECK(r.coefficient == b.value);
  }
}

TEST_CASE("singleton hyperedges give a tautology") {
  std::vector<Hyperedge> edges;
  for (int v = 0; v < 4; ++v) edges.push_back({{v}, 1.0 + v});
  const WeightedHypergraph h(4, edges);
  auto s = random_system({4, 4, 2, 3, 0.5, false}, 9);
  s.visibility = {{0}, {1}, {2}, {3}};
  for (int v = 0; v < 4; ++v) s.tables[v].assign(s.seeds[v].size(), 0);
  for (int v = 0; v < 4; ++v)
    for (std::size_t r = 0; r < s.tables[v].size(); ++r)
      s.tables[v][r] = static_cast<int>(r % s.alphabets[v].size());
  const auto r = verify_weighted(s, h);
  double direct = 0;
  for (int v = 0; v < 4; ++v) direct += (1.0 + v) * entropy(joint_law(s, {v}));
  CHECK(std::abs(r.lhs - direct) < 1e-12);
  CHECK(r.coefficient == 1.0);
}

TEST_CASE("regular edge inequality") {
  const auto c4 = SimpleGraph::cycle(4);
  const auto ind = verify_regular_edge(independent_system(4), c4);
  CHECK(ind.coefficient == 2.0);
  CHECK(std::abs(ind.lhs - 8 * kLog2) < 1e-12);
  CHECK(std::abs(ind.slack) < 1e-12);

  const auto cp = verify_regular_edge(copy_system(4), c4);
  CHECK(cp.coefficient == 1.0);
  CHECK(std::abs(cp.lhs - 4 * kLog2) < 1e-12);
  CHECK(std::abs(cp.rhs_base - 4 * kLog2) < 1e-12);
  CHECK(std::abs(cp.slack) < 1e-12);

  CHECK_THROWS_AS(verify_regular_edge(copy_system(3), SimpleGraph(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("shearer") {
  const auto g = SimpleGraph::cycle(5).to_hypergraph();
  const auto r = verify_shearer(independent_system(5), g);
  CHECK(r.coefficient == 2.0);
  CHECK(std::abs(r.lhs - 10 * kLog2) < 1e-12);
  CHECK(std::abs(r.slack) < 1e-12);
  // arbitrary joint law, no seed structure
  const JointDist j({{0, {0, 1}}, {1, {0, 1}}, {2, {0, 1}}},
                    {0.1, 0.2, 0.05, 0.15, 0.2, 0.1, 0.1, 0.1});
  const auto r2 = verify_shearer(j, SimpleGraph::cycle(3).to_hypergraph());
  CHECK(r2.pass);
}

TEST_CASE("star-edge inequality") {
  const auto c6 = SimpleGraph::cycle(6);
  const auto r = verify_star_edge(constant_system(6), c6);
  CHECK(r.lhs == 0.0);
  CHECK(r.pass);
  const auto ri = verify_star_edge(independent_system(6), c6);
  CHECK(std::abs(ri.lhs - 18 * kLog2) < 1e-12);
  CHECK(std::abs(ri.rhs_base - 12 * kLog2) < 1e-12);
  CHECK(ri.coefficient == 1.5);
  CHECK(std::abs(ri.slack) < 1e-12);
}

TEST_CASE("star-edge inequality with no visible edge") {
  // only vertex 0 is visible and it is isolated, so both edge endpoints are constant
  SeedSystem s = independent_system(3);
  s.seeds.erase(s.seeds.begin() + 1, s.seeds.end());
  s.visibility.resize(1);
  s.tables[1] = {0};
  s.tables[2] = {0};
  s.alphabets[1] = s.alphabets[2] = {0};
  const SimpleGraph g(3, {{1, 2}});
  const auto r = verify_star_edge(s, g);
  CHECK(r.rhs_base == 0.0);
  CHECK(r.coefficient == 0.0);
  CHECK(r.pass);
}

TEST_CASE("random generators") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto g = random_regular_graph(10, 3, s);
    CHECK(g.regular_degree() == 3);
    CHECK(g == random_regular_graph(10, 3, s));
  }
  CHECK_THROWS_AS(random_regular_graph(5, 3, 0), std::invalid_argument);
}

TEST_CASE("fuzz campaign") {
  FuzzConfig c;
  c.count = 0;
  CHECK(fuzz(c).rows.empty());
  c.count = 60;
  c.seed = 42;
  const auto a = fuzz(c);
  CHECK(a.failures.empty());
  for (const auto& [t, m] : a.min_slack) CHECK(m >= -kSlackTolerance);
  c.jobs = 3;
  const auto b = fuzz(c);
  CHECK(fuzz_csv(a) == fuzz_csv(b));
  CHECK(a.min_slack.size() == 4);
}
