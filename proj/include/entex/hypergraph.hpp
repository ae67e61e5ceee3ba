#pragma once

#include <utility>
#include <vector>

#include "entex/common.hpp"

namespace entex {

struct Hyperedge {
  VertexSet vertices;
  double weight = 1.0;
  bool operator==(const Hyperedge&) const = default;
};

/// Vertex set {0..n-1} with nonnegative weights on finite subsets. Subsets
/// that are not listed carry weight zero.
class WeightedHypergraph {
 public:
  WeightedHypergraph() = default;
  WeightedHypergraph(int num_vertices, std::vector<Hyperedge> edges);

  int num_vertices() const { return n_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  /// Edges containing v (indices into edges()).
  const std::vector<std::size_t>& incident(int v) const { return incident_[v]; }

  /// True iff every positively weighted edge has exactly two vertices.
  bool is_graph() const;

  bool operator==(const WeightedHypergraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Hyperedge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Simple undirected graph on {0..n-1}.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(int num_vertices, std::vector<std::pair<int, int>> edges);

  static SimpleGraph from_hypergraph(const WeightedHypergraph& h);
  static SimpleGraph cycle(int n);
  static SimpleGraph complete(int n);

  int num_vertices() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  /// Common degree, or -1 if the graph is not regular.
  int regular_degree() const;
  bool has_edge(int u, int v) const;

  /// Unit weight on every edge.
  WeightedHypergraph to_hypergraph() const;

  bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
  std::vector<std::vector<int>> adj_;
};

}  // namespace entex
