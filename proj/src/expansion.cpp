#include "entex/expansion.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "entex/subset_scan.hpp"

namespace entex {
namespace {

VertexSet mask_to_set(const VertexSet& local, std::uint64_t mask) {
  VertexSet out;
  for (; mask; mask &= mask - 1) out.push_back(local[std::countr_zero(mask)]);
  return out;
}

void check_scan_size(std::size_t k, const char* what) {
  if (k > static_cast<std::size_t>(kMaxExhaustive))
    throw resource_error(std::string(what) + " has " + std::to_string(k) +
                         " elements; exhaustive search is capped at " +
                         std::to_string(kMaxExhaustive) +
                         " (for regular graphs use the boundary form on a smaller family)");
}

/// Incremental closure weight over subsets of a local vertex list.
struct ClosureState {
  std::vector<std::vector<int>> touch;       // local vertex -> local edges
  std::vector<std::vector<int>> members;     // local edge -> local vertices
  std::vector<double> weight;                // local edge -> alpha
  std::vector<int> count;
  long double sum = 0;

  void add(int i) {
    for (int e : touch[i])
      if (count[e]++ == 0) sum += weight[e];
  }
  void remove(int i) {
    for (int e : touch[i])
      if (--count[e] == 0) sum -= weight[e];
  }
  double ratio(int size) const { return static_cast<double>(sum / size); }
  double exact(std::uint64_t mask) const {
    double s = 0;
    for (std::size_t e = 0; e < members.size(); ++e)
      for (int v : members[e])
        if (mask >> v & 1) {
          s += weight[e];
          break;
        }
    return s / std::popcount(mask);
  }
};

ClosureState make_closure_state(const WeightedHypergraph& h, const VertexSet& local) {
  ClosureState st;
  std::map<int, int> local_index;
  for (std::size_t i = 0; i < local.size(); ++i) local_index[local[i]] = static_cast<int>(i);
  st.touch.resize(local.size());
  for (std::size_t e = 0; e < h.edges().size(); ++e) {
    const auto& edge = h.edges()[e];
    if (edge.weight <= 0) continue;
    std::vector<int> mem;
    for (int v : edge.vertices) {
      auto it = local_index.find(v);
      if (it != local_index.end()) mem.push_back(it->second);
    }
    if (mem.empty()) continue;
    const int le = static_cast<int>(st.members.size());
    for (int i : mem) st.touch[i].push_back(le);
    st.members.push_back(std::move(mem));
    st.weight.push_back(edge.weight);
  }
  st.count.assign(st.members.size(), 0);
  return st;
}

/// Incremental count of edges inside a subset of a local vertex list.
struct BoundaryState {
  std::vector<std::vector<int>> nbr;  // local adjacency
  int degree = 0;
  std::vector<char> in;
  long inside = 0;

  void add(int i) {
    for (int j : nbr[i]) inside += in[j];
    in[i] = 1;
  }
  void remove(int i) {
    in[i] = 0;
    for (int j : nbr[i]) inside -= in[j];
  }
  double ratio(int size) const {
    return static_cast<double>(static_cast<long>(degree) * size - 2 * inside) / size;
  }
  double exact(std::uint64_t mask) const {
    long e = 0;
    for (std::size_t i = 0; i < nbr.size(); ++i)
      if (mask >> i & 1)
        for (int j : nbr[i])
          if (j > static_cast<int>(i) && (mask >> j & 1)) ++e;
    const int size = std::popcount(mask);
    return static_cast<double>(static_cast<long>(degree) * size - 2 * e) / size;
  }
};

/// Incremental count of vertices covered by a subset of a local edge list.
struct CoverState {
  std::vector<std::vector<int>> ends;  // local edge -> local vertices
  std::vector<int> count;
  int covered = 0;

  void add(int e) {
    for (int v : ends[e])
      if (count[v]++ == 0) ++covered;
  }
  void remove(int e) {
    for (int v : ends[e])
      if (--count[v] == 0) --covered;
  }
  double ratio(int size) const { return static_cast<double>(covered) / size; }
  double exact(std::uint64_t mask) const {
    std::vector<char> hit(count.size(), 0);
    int c = 0;
    for (std::size_t e = 0; e < ends.size(); ++e)
      if (mask >> e & 1)
        for (int v : ends[e])
          if (!hit[v]) {
            hit[v] = 1;
            ++c;
          }
    return static_cast<double>(c) / std::popcount(mask);
  }
};

struct SeedBest {
  bool found = false;
  double value = 0;
  int seed = -1;
  VertexSet set;
};

/// Folds the best of seed i into the running optimum; earlier seeds win ties.
void fold(SeedBest& acc, int seed, const detail::SubsetBest& b, VertexSet set) {
  if (!b.found) return;
  if (acc.found) {
    if (!detail::ratio_equal(b.value, acc.value)) {
      if (b.value > acc.value) return;
    } else if (set.size() != acc.set.size()) {
      if (set.size() > acc.set.size()) return;
    } else if (!(set < acc.set)) {
      return;
    }
  }
  acc = {true, b.value, seed, std::move(set)};
}

}  // namespace

std::vector<std::size_t> closure(const WeightedHypergraph& h, const VertexSet& W) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < h.edges().size(); ++e)
    if (h.edges()[e].weight > 0 && intersects(h.edges()[e].vertices, W)) out.push_back(e);
  return out;
}

double closure_weight(const WeightedHypergraph& h, const VertexSet& W) {
  double s = 0;
  for (auto e : closure(h, W)) s += h.edges()[e].weight;
  return s;
}

double expansion_ratio(const WeightedHypergraph& h, const VertexSet& W) {
  if (W.empty()) throw std::invalid_argument("expansion ratio of the empty set is undefined");
  return closure_weight(h, W) / static_cast<double>(W.size());
}

std::vector<std::pair<int, int>> edge_boundary(const SimpleGraph& g, const VertexSet& W) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edges()) {
    const bool a = std::binary_search(W.begin(), W.end(), u);
    const bool b = std::binary_search(W.begin(), W.end(), v);
    if (a != b) out.emplace_back(u, v);
  }
  return out;
}

ExpansionResult beta(const WeightedHypergraph& h, const std::vector<VertexSet>& visibility,
                     int jobs) {
  SeedBest best;
  for (std::size_t i = 0; i < visibility.size(); ++i) {
    const VertexSet local = make_vertex_set(visibility[i]);
    if (local.empty()) continue;
    if (local.back() >= h.num_vertices() || local.front() < 0)
      throw std::invalid_argument("visibility set " + std::to_string(i) + " not inside V");
    check_scan_size(local.size(), "visibility set");
    const auto b = detail::scan_min_ratio(static_cast<int>(local.size()),
                                          make_closure_state(h, local), jobs);
    fold(best, static_cast<int>(i), b, mask_to_set(local, b.mask));
  }
  if (!best.found) throw std::invalid_argument("every visibility set is empty; beta is undefined");
  return {best.value, best.seed, best.set};
}

ExpansionResult min_boundary_ratio(const std::vector<std::vector<int>>& adjacency, int host_degree,
                                   const VertexSet& within, int jobs) {
  if (within.empty()) throw std::invalid_argument("empty vertex family");
  check_scan_size(within.size(), "vertex family");
  std::map<int, int> local_index;
  for (std::size_t i = 0; i < within.size(); ++i) local_index[within[i]] = static_cast<int>(i);
  BoundaryState st;
  st.degree = host_degree;
  st.nbr.resize(within.size());
  st.in.assign(within.size(), 0);
  for (std::size_t i = 0; i < within.size(); ++i)
    for (int u : adjacency.at(within[i])) {
      auto it = local_index.find(u);
      if (it != local_index.end()) st.nbr[i].push_back(it->second);
    }
  const auto b = detail::scan_min_ratio(static_cast<int>(within.size()), st, jobs);
  return {b.value, 0, mask_to_set(within, b.mask)};
}

ExpansionResult beta_regular(const SimpleGraph& g, const std::vector<VertexSet>& visibility,
                             int jobs) {
  const int d = g.regular_degree();
  if (d < 0) throw std::invalid_argument("beta_regular needs a regular graph");
  std::vector<std::vector<int>> adj(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) adj[v] = g.neighbors(v);
  SeedBest best;
  for (std::size_t i = 0; i < visibility.size(); ++i) {
    const VertexSet local = make_vertex_set(visibility[i]);
    if (local.empty()) continue;
    if (local.back() >= g.num_vertices() || local.front() < 0)
      throw std::invalid_argument("visibility set " + std::to_string(i) + " not inside V");
    const auto r = min_boundary_ratio(adj, d, local, jobs);
    detail::SubsetBest b{true, r.value, 0};
    fold(best, static_cast<int>(i), b, r.witness_set);
  }
  if (!best.found) throw std::invalid_argument("every visibility set is empty; beta is undefined");
  return {(d + best.value) / 2.0, best.seed, best.set};
}

ShearerLambda shearer_lambda(const WeightedHypergraph& h) {
  if (h.num_vertices() == 0) throw std::invalid_argument("empty vertex set");
  ShearerLambda out;
  for (int v = 0; v < h.num_vertices(); ++v) {
    double s = 0;
    for (auto e : h.incident(v)) s += h.edges()[e].weight;
    if (out.witness_vertex < 0 || s < out.value) out = {s, v};
  }
  return out;
}

EdgeExpansionResult star_edge_beta(const SimpleGraph& g, const std::vector<VertexSet>& visibility,
                                   int jobs) {
  bool found = false;
  EdgeExpansionResult out;
  for (std::size_t i = 0; i < visibility.size(); ++i) {
    const VertexSet w = make_vertex_set(visibility[i]);
    std::vector<std::pair<int, int>> local;
    for (auto e : g.edges())
      if (std::binary_search(w.begin(), w.end(), e.first) ||
          std::binary_search(w.begin(), w.end(), e.second))
        local.push_back(e);
    if (local.empty()) continue;
    check_scan_size(local.size(), "edge closure");
    std::map<int, int> vid;
    CoverState st;
    for (auto [u, v] : local) {
      const int a = vid.emplace(u, static_cast<int>(vid.size())).first->second;
      const int b = vid.emplace(v, static_cast<int>(vid.size())).first->second;
      st.ends.push_back({a, b});
    }
    st.count.assign(vid.size(), 0);
    const auto b = detail::scan_min_ratio(static_cast<int>(local.size()), st, jobs);
    std::vector<std::pair<int, int>> edges;
    for (auto m = b.mask; m; m &= m - 1) edges.push_back(local[std::countr_zero(m)]);
    bool take = !found;
    if (found) {
      if (!detail::ratio_equal(b.value, out.value))
        take = b.value < out.value;
      else if (edges.size() != out.witness_edges.size())
        take = edges.size() < out.witness_edges.size();
      else
        take = edges < out.witness_edges;
    }
    if (take) {
      found = true;
      out = {b.value, static_cast<int>(i), std::move(edges)};
    }
  }
  if (!found) throw std::invalid_argument("no visibility set meets an edge; coefficient undefined");
  return out;
}

}  // namespace entex
