#pragma once

#include <vector>

#include "entex/expansion.hpp"

namespace entex {

/// Finite induced piece of an infinite d-regular host graph. Every vertex has
/// host degree d, so the edge boundary of W inside the host is d|W| - 2e(W)
/// even though the outside vertices are not stored.
struct GraphRegion {
  int host_degree = 0;
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
  std::vector<std::vector<int>> adjacency;
  /// Tree regions: child-index path from the root. Lattice regions: coordinates.
  std::vector<std::vector<int>> labels;

  /// Rebuilds adjacency from edges and checks degrees against host_degree.
  void finalize();
  /// d|W| - 2 e(W).
  int boundary_size(const VertexSet& W) const;

  bool operator==(const GraphRegion& o) const {
    return host_degree == o.host_degree && num_vertices == o.num_vertices && edges == o.edges &&
           labels == o.labels;
  }
};

/// Radius-R ball around the root of T_d. The root has children 0..d-1, every
/// other vertex has children 0..d-2. Vertex 0 is the root; BFS order.
GraphRegion tree_ball(int d, int R);

/// Closed-form |B_R| in T_d.
long long tree_ball_size(int d, int R);

/// l1-ball of radius R in Z^n, host degree 2n; vertices in lexicographic
/// coordinate order.
GraphRegion lattice_ball(int n, int R);

/// Exact min over nonempty W of |dW|/|W| (witness_seed is 0). Limited to
/// kMaxExhaustive vertices.
ExpansionResult ball_expansion(const GraphRegion& region, int jobs = 1);

/// |dW|/|W| at W = whole region; an upper bound on ball_expansion.
double full_region_ratio(const GraphRegion& region);

/// Full-ball ratios of T_d for R = 0..Rmax: d - 2 + 2/|B_R|.
std::vector<double> tree_nested_ball_ratios(int d, int Rmax);

/// (d-2) sqrt(1 - 4/((k-2)(d-2))) for the {k,d} hyperbolic tessellation.
double hyperbolic_cheeger(int d, int k);

/// Edge Cheeger constant of T_d.
double tree_cheeger(int d);

struct BallRatioReport {
  std::vector<long long> neighborhood_sizes;  // |B_R(U0)|, R = 0..Rmax
  std::vector<double> ratios;                 // |B_R(U0)| / |B_R(v)|
  double minimum = 0;
  int argmin = 0;
};

/// Ratios |B_R(U0)|/|B_R(v)| in T_d, U0 given as tree paths. The minimum is an
/// upper bound on the infimum over all R.
BallRatioReport tree_ball_ratio(int d, const std::vector<std::vector<int>>& U0, int Rmax);

}  // namespace entex
