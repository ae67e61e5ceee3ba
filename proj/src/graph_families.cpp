#include "entex/graph_families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

namespace entex {

void GraphRegion::finalize() {
  if (host_degree < 0 || num_vertices < 0) throw std::invalid_argument("negative region size");
  adjacency.assign(num_vertices, {});
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= num_vertices || u == v) throw std::invalid_argument("bad region edge");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("repeated region edge");
  for (auto [u, v] : edges) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (int v = 0; v < num_vertices; ++v)
    if (static_cast<int>(adjacency[v].size()) > host_degree)
      throw std::invalid_argument("vertex " + std::to_string(v) + " exceeds the host degree");
}

int GraphRegion::boundary_size(const VertexSet& W) const {
  int inside = 0;
  for (auto [u, v] : edges)
    if (std::binary_search(W.begin(), W.end(), u) && std::binary_search(W.begin(), W.end(), v))
      ++inside;
  return host_degree * static_cast<int>(W.size()) - 2 * inside;
}

long long tree_ball_size(int d, int R) {
  if (d < 3) throw std::invalid_argument("tree balls need d >= 3");
  if (R < 0) throw std::invalid_argument("negative radius");
  long long total = 1, layer = d;
  for (int r = 1; r <= R; ++r) {
    total += layer;
    if (total > (1LL << 53)) throw resource_error("tree ball size overflows");
    layer *= d - 1;
  }
  return total;
}

GraphRegion tree_ball(int d, int R) {
  const long long size = tree_ball_size(d, R);
  if (size > static_cast<long long>(kMaxOutcomes))
    throw resource_error("tree ball with " + std::to_string(size) + " vertices exceeds the cap");
  GraphRegion g;
  g.host_degree = d;
  g.labels.push_back({});
  std::size_t frontier_begin = 0;
  for (int r = 0; r < R; ++r) {
    const std::size_t frontier_end = g.labels.size();
    for (std::size_t p = frontier_begin; p < frontier_end; ++p) {
      const int children = p == 0 ? d : d - 1;
      for (int c = 0; c < children; ++c) {
        auto path = g.labels[p];
        path.push_back(c);
        g.edges.emplace_back(static_cast<int>(p), static_cast<int>(g.labels.size()));
        g.labels.push_back(std::move(path));
      }
    }
    frontier_begin = frontier_end;
  }
  g.num_vertices = static_cast<int>(g.labels.size());
  g.finalize();
  return g;
}

GraphRegion lattice_ball(int n, int R) {
  if (n < 1) throw std::invalid_argument("lattice dimension must be >= 1");
  if (R < 0) throw std::invalid_argument("negative radius");
  GraphRegion g;
  g.host_degree = 2 * n;
  std::vector<int> x(n, -R);
  while (true) {
    int norm = 0;
    for (int c : x) norm += std::abs(c);
    if (norm <= R) {
      g.labels.push_back(x);
      if (g.labels.size() > kMaxOutcomes) throw resource_error("lattice ball exceeds the cap");
    }
    int i = n - 1;
    while (i >= 0 && x[i] == R) x[i--] = -R;
    if (i < 0) break;
    ++x[i];
  }
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < g.labels.size(); ++i) index[g.labels[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < g.labels.size(); ++i)
    for (int c = 0; c < n; ++c) {
      auto y = g.labels[i];
      ++y[c];
      auto it = index.find(y);
      if (it != index.end()) g.edges.emplace_back(static_cast<int>(i), it->second);
    }
  g.num_vertices = static_cast<int>(g.labels.size());
  g.finalize();
  return g;
}

ExpansionResult ball_expansion(const GraphRegion& region, int jobs) {
  if (region.num_vertices == 0) throw std::invalid_argument("empty region");
  if (region.num_vertices > kMaxExhaustive)
    throw resource_error("region has " + std::to_string(region.num_vertices) +
                         " vertices; exhaustive expansion is limited to " +
                         std::to_string(kMaxExhaustive) +
                         " (use the full-region or nested-ball upper values)");
  VertexSet all(region.num_vertices);
  for (int v = 0; v < region.num_vertices; ++v) all[v] = v;
  return min_boundary_ratio(region.adjacency, region.host_degree, all, jobs);
}

double full_region_ratio(const GraphRegion& region) {
  if (region.num_vertices == 0) throw std::invalid_argument("empty region");
  const double n = region.num_vertices;
  return (region.host_degree * n - 2.0 * static_cast<double>(region.edges.size())) / n;
}

std::vector<double> tree_nested_ball_ratios(int d, int Rmax) {
  std::vector<double> out;
  for (int R = 0; R <= Rmax; ++R)
    out.push_back(d - 2.0 + 2.0 / static_cast<double>(tree_ball_size(d, R)));
  return out;
}

double hyperbolic_cheeger(int d, int k) {
  const long long p = static_cast<long long>(k - 2) * (d - 2);
  if (d < 3 || k < 3 || p <= 4)
    throw std::invalid_argument("tessellation parameters need (k-2)(d-2) > 4, got d=" +
                                std::to_string(d) + ", k=" + std::to_string(k));
  return (d - 2.0) * std::sqrt(1.0 - 4.0 / static_cast<double>(p));
}

double tree_cheeger(int d) {
  if (d < 2) throw std::invalid_argument("tree degree must be >= 2");
  return d - 2.0;
}

BallRatioReport tree_ball_ratio(int d, const std::vector<std::vector<int>>& U0, int Rmax) {
  if (d < 3) throw std::invalid_argument("tree balls need d >= 3");
  if (U0.empty()) throw std::invalid_argument("U0 must be nonempty");
  if (Rmax < 0) throw std::invalid_argument("negative radius");
  for (const auto& path : U0)
    for (std::size_t t = 0; t < path.size(); ++t)
      if (path[t] < 0 || path[t] >= (t == 0 ? d : d - 1))
        throw std::invalid_argument("invalid tree path in U0");
  // |B_R(U0)| <= |U0| |B_R(v)|
  const long long worst = static_cast<long long>(U0.size()) * tree_ball_size(d, Rmax);
  if (worst > static_cast<long long>(kMaxOutcomes))
    throw resource_error("R-neighborhood of U0 may reach " + std::to_string(worst) +
                         " vertices, above the cap of " + std::to_string(kMaxOutcomes));

  using Path = std::vector<int>;
  std::set<Path> seen(U0.begin(), U0.end());
  std::vector<Path> frontier(seen.begin(), seen.end());
  BallRatioReport rep;
  for (int R = 0;; ++R) {
    const auto size = static_cast<long long>(seen.size());
    rep.neighborhood_sizes.push_back(size);
    rep.ratios.push_back(static_cast<double>(size) / static_cast<double>(tree_ball_size(d, R)));
    if (R == Rmax) break;
    std::vector<Path> next;
    auto visit = [&](Path p) {
      if (seen.insert(p).second) next.push_back(std::move(p));
    };
    for (const auto& p : frontier) {
      if (!p.empty()) visit(Path(p.begin(), p.end() - 1));
      const int children = p.empty() ? d : d - 1;
      for (int c = 0; c < children; ++c) {
        Path q = p;
        q.push_back(c);
        visit(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  rep.argmin = static_cast<int>(std::min_element(rep.ratios.begin(), rep.ratios.end()) -
                                rep.ratios.begin());
  rep.minimum = rep.ratios[rep.argmin];
  return rep;
}

}  // namespace entex
