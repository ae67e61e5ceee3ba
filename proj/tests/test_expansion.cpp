#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entex/expansion.hpp"
#include "entex/rng.hpp"

using namespace entex;

namespace {

// Double loop over seeds and subsets, closure weight summed edge by edge.
ExpansionResult naive_beta(const WeightedHypergraph& h, const std::vector<VertexSet>& vis) {
  ExpansionResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vis.size(); ++i) {
    const int k = static_cast<int>(vis[i].size());
    for (unsigned m = 1; m < (1u << k); ++m) {
      VertexSet W;
      for (int b = 0; b < k; ++b)
        if (m >> b & 1) W.push_back(vis[i][b]);
      double w = 0;
      for (const auto& e : h.edges())
        if (e.weight > 0 && intersects(e.vertices, W)) w += e.weight;
      const double r = w / static_cast<double>(W.size());
      const bool tie = std::abs(r - best.value) <= 1e-12 * std::max(1.0, std::abs(r));
      if ((!tie && r < best.value) ||
          (tie && (W.size() < best.witness_set.size() ||
                   (W.size() == best.witness_set.size() && W < best.witness_set)))) {
        best.value = r;
        best.witness_seed = static_cast<int>(i);
        best.witness_set = W;
      }
    }
  }
  return best;
}

std::vector<VertexSet> full(int n) {
  VertexSet v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return {v};
}

std::vector<VertexSet> singletons(int n) {
  std::vector<VertexSet> out;
  for (int i = 0; i < n; ++i) out.push_back({i});
  return out;
}

WeightedHypergraph random_hypergraph(Rng& rng, int n) {
  std::vector<Hyperedge> edges;
  std::vector<VertexSet> seen;
  const int ne = rng.uniform_int(1, 8);
  for (int e = 0; e < ne; ++e) {
    VertexSet U;
    for (int v = 0; v < n; ++v)
      if (rng.bernoulli(0.4)) U.push_back(v);
    if (U.empty()) U.push_back(rng.uniform_int(0, n - 1));
    if (std::find(seen.begin(), seen.end(), U) != seen.end()) continue;
    seen.push_back(U);
    edges.push_back({U, rng.uniform_int(0, 6) / 2.0});
  }
  return WeightedHypergraph(n, edges);
}

}  // namespace

TEST_CASE("closure and closure weight") {
  const auto tri = SimpleGraph::cycle(3).to_hypergraph();
  CHECK(closure(tri, {}).empty());
  CHECK(closure(tri, {0}).size() == 2);
  CHECK(closure(tri, {0, 1, 2}).size() == 3);
  CHECK(closure_weight(tri, {}) == 0.0);
  CHECK(closure_weight(tri, {1}) == 2.0);
}

TEST_CASE("edge boundary") {
  const SimpleGraph path(3, {{0, 1}, {1, 2}});
  CHECK(edge_boundary(path, {1}).size() == 2);
  CHECK(edge_boundary(path, {0, 1, 2}).empty());
  CHECK(edge_boundary(SimpleGraph::cycle(4), {0, 1}).size() == 2);
}

TEST_CASE("beta on small graphs") {
  const auto tri = SimpleGraph::cycle(3).to_hypergraph();
  // every nonempty W of the triangle: sizes 1,2,3 give 2, 3/2, 1
  const auto b = beta(tri, full(3));
  CHECK(b.value == 1.0);
  CHECK(b.witness_set == VertexSet{0, 1, 2});
  CHECK(beta(tri, singletons(3)).value == 2.0);
  CHECK(beta(tri, singletons(3)).witness_set == VertexSet{0});

  const auto c4 = SimpleGraph::cycle(4);
  CHECK(beta_regular(c4, full(4)).value == 1.0);
  CHECK(beta(c4.to_hypergraph(), full(4)).value == 1.0);
  CHECK(beta_regular(c4, singletons(4)).value == 2.0);

  const auto k4 = SimpleGraph::complete(4);
  CHECK(beta(k4.to_hypergraph(), singletons(4)).value == 3.0);
  CHECK_THROWS_AS(beta(tri, {{}}), std::invalid_argument);
}

TEST_CASE("beta caps the exhaustive scan") {
  const auto g = SimpleGraph::cycle(23);
  CHECK_THROWS_AS(beta(g.to_hypergraph(), full(23)), resource_error);
}

TEST_CASE("closure weight identity on regular graphs") {
  const auto g = SimpleGraph::complete(5);
  const auto h = g.to_hypergraph();
  for (unsigned m = 0; m < 32; ++m) {
    VertexSet W;
    for (int b = 0; b < 5; ++b)
      if (m >> b & 1) W.push_back(b);
    const double lhs = closure_weight(h, W);
    const double rhs = (4.0 * W.size() + edge_boundary(g, W).size()) / 2.0;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("beta equals the naive oracle on random hypergraphs") {
  Rng rng(77);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.uniform_int(1, 7);
    const auto h = random_hypergraph(rng, n);
    std::vector<VertexSet> vis;
    const int m = rng.uniform_int(1, 3);
    for (int i = 0; i < m; ++i) {
      VertexSet W;
      for (int v = 0; v < n; ++v)
        if (rng.bernoulli(0.6)) W.push_back(v);
      if (W.empty()) W.push_back(0);
      vis.push_back(W);
    }
    const auto fast = beta(h, vis);
    const auto slow = naive_beta(h, vis);
    CHECK(std::abs(fast.value - slow.value) <= 1e-12);
    CHECK(fast.witness_set == slow.witness_set);
    CHECK(fast.witness_seed == slow.witness_seed);
    CHECK(std::abs(expansion_ratio(h, fast.witness_set) - fast.value) <= 1e-12);
    // larger visibility can only lower beta
    auto grown = vis;
    grown[0] = full(n)[0];
    CHECK(beta(h, grown).value <= fast.value + 1e-12);
  }
}

TEST_CASE("threaded scan matches serial scan") {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto h = random_hypergraph(rng, 14);
    const auto a = beta(h, full(14), 1);
    const auto b = beta(h, full(14), 4);
    CHECK(a.value == b.value);
    CHECK(a.witness_set == b.witness_set);
  }
}

TEST_CASE("shearer lambda") {
  CHECK(shearer_lambda(SimpleGraph::cycle(5).to_hypergraph()).value == 2.0);
  const SimpleGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto l = shearer_lambda(star.to_hypergraph());
  CHECK(l.value == 1.0);
  CHECK(l.witness_vertex == 1);
  std::vector<Hyperedge> doubled;
  const auto unit = star.to_hypergraph();
  for (const auto& e : unit.edges()) doubled.push_back({e.vertices, 2.0});
  CHECK(shearer_lambda(WeightedHypergraph(4, doubled)).value == 2.0);
}

TEST_CASE("star-edge coefficient") {
  const auto tri = SimpleGraph::cycle(3);
  const auto r = star_edge_beta(tri, full(3));
  CHECK(r.value == 1.0);
  CHECK(r.witness_edges.size() == 3);
  CHECK(star_edge_beta(tri, singletons(3)).value <= 2.0);
  const auto c6 = SimpleGraph::cycle(6);
  CHECK(star_edge_beta(c6, singletons(6)).value == 1.5);
}
