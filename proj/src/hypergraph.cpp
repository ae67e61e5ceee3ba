#include "entex/hypergraph.hpp"

#include <algorithm>
#include <map>

namespace entex {

WeightedHypergraph::WeightedHypergraph(int num_vertices, std::vector<Hyperedge> edges)
    : n_(num_vertices), edges_(std::move(edges)), incident_(num_vertices) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  std::map<VertexSet, std::size_t> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& edge = edges_[e];
    edge.vertices = make_vertex_set(std::move(edge.vertices));
    if (edge.vertices.empty()) throw std::invalid_argument("hyperedge with no vertices");
    if (edge.vertices.front() < 0 || edge.vertices.back() >= n_)
      throw std::invalid_argument("hyperedge " + to_string(edge.vertices) + " not inside V");
    if (!(edge.weight >= 0)) throw std::invalid_argument("negative hyperedge weight");
    if (!seen.emplace(edge.vertices, e).second)
      throw std::invalid_argument("hyperedge " + to_string(edge.vertices) + " listed twice");
    for (int v : edge.vertices) incident_[v].push_back(e);
  }
}

bool WeightedHypergraph::is_graph() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Hyperedge& e) { return e.weight == 0 || e.vertices.size() == 2; });
}

SimpleGraph::SimpleGraph(int num_vertices, std::vector<std::pair<int, int>> edges)
    : n_(num_vertices), adj_(num_vertices) {
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("parallel edges are not allowed in a simple graph");
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

SimpleGraph SimpleGraph::from_hypergraph(const WeightedHypergraph& h) {
  if (!h.is_graph()) throw std::invalid_argument("hypergraph has edges that are not pairs");
  std::vector<std::pair<int, int>> e;
  for (const auto& edge : h.edges())
    if (edge.weight > 0) e.emplace_back(edge.vertices[0], edge.vertices[1]);
  return SimpleGraph(h.num_vertices(), std::move(e));
}

SimpleGraph SimpleGraph::cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return SimpleGraph(n, std::move(e));
}

int SimpleGraph::regular_degree() const {
  if (n_ == 0) return 0;
  const int d = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != d) return -1;
  return d;
}

bool SimpleGraph::has_edge(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

WeightedHypergraph SimpleGraph::to_hypergraph() const {
  std::vector<Hyperedge> e;
  for (auto [u, v] : edges_) e.push_back({{u, v}, 1.0});
  return WeightedHypergraph(n_, std::move(e));
}

}  // namespace entex
