#pragma once

#include <utility>
#include <vector>

#include "entex/hypergraph.hpp"

namespace entex {

/// A minimum ratio together with the pair (seed index, vertex set) attaining it.
struct ExpansionResult {
  double value = 0;
  int witness_seed = -1;
  VertexSet witness_set;
};

/// Positively weighted edges meeting W.
std::vector<std::size_t> closure(const WeightedHypergraph& h, const VertexSet& W);
double closure_weight(const WeightedHypergraph& h, const VertexSet& W);

/// Edges with exactly one endpoint in W.
std::vector<std::pair<int, int>> edge_boundary(const SimpleGraph& g, const VertexSet& W);

/// Hyperedge expansion: min over i and nonempty W in W_i of closure_weight(W)/|W|.
/// Ties go to the smaller set, then the lexicographically smaller one, then the
/// smaller seed index. Each W_i is limited to kMaxExhaustive vertices.
ExpansionResult beta(const WeightedHypergraph& h, const std::vector<VertexSet>& visibility,
                     int jobs = 1);

/// (d + min |dW|/|W|) / 2 on a d-regular graph, with |dW| = d|W| - 2e(W).
ExpansionResult beta_regular(const SimpleGraph& g, const std::vector<VertexSet>& visibility,
                             int jobs = 1);

/// min over nonempty W in `within` of (d|W| - 2 e(W)) / |W| where e(W) counts
/// edges of `adjacency` inside W. This is |dW|/|W| for a region of a d-regular
/// host in which every vertex has host degree d.
ExpansionResult min_boundary_ratio(const std::vector<std::vector<int>>& adjacency, int host_degree,
                                   const VertexSet& within, int jobs = 1);

struct ShearerLambda {
  double value = 0;
  int witness_vertex = -1;
};

/// min over v of the total weight of edges containing v.
ShearerLambda shearer_lambda(const WeightedHypergraph& h);

struct EdgeExpansionResult {
  double value = 0;
  int witness_seed = -1;
  std::vector<std::pair<int, int>> witness_edges;
};

/// Star-edge coefficient: min over i and nonempty F contained in the closure of
/// W_i of |vertices covered by F| / |F|.
EdgeExpansionResult star_edge_beta(const SimpleGraph& g, const std::vector<VertexSet>& visibility,
                                   int jobs = 1);

/// Recomputes closure_weight(W)/|W| from scratch.
double expansion_ratio(const WeightedHypergraph& h, const VertexSet& W);

}  // namespace entex
