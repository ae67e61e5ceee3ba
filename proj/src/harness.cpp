#include "entex/harness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <mutex>
#include <thread>

#include "entex/rng.hpp"

namespace entex {

Json to_json(const VerificationReport& r) {
  Json j{{"theorem", r.theorem},   {"lhs", r.lhs},     {"coefficient", r.coefficient},
         {"rhs_base", r.rhs_base}, {"slack", r.slack}, {"pass", r.pass}};
  Json w;
  if (r.witness_seed >= 0) w["seed"] = r.witness_seed;
  if (!r.witness_set.empty()) w["set"] = r.witness_set;
  if (!r.witness_edges.empty()) {
    Json e = Json::array();
    for (auto [u, v] : r.witness_edges) e.push_back({u, v});
    w["edges"] = e;
  }
  if (!w.is_null()) j["witness"] = w;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

namespace {

/// H(X_U) memoized over one system.
class EntropyCache {
 public:
  explicit EntropyCache(const SeedSystem& s) : s_(s) {}
  double operator()(const VertexSet& U) {
    if (U.empty()) return 0.0;
    auto it = memo_.find(U);
    if (it != memo_.end()) return it->second;
    const double h = entropy(joint_law(s_, U));
    memo_.emplace(U, h);
    return h;
  }

 private:
  const SeedSystem& s_;
  std::map<VertexSet, double> memo_;
};

void finish(VerificationReport& r) {
  r.slack = r.lhs - r.coefficient * r.rhs_base;
  r.pass = r.slack >= -kSlackTolerance;
}

double vertex_sum(EntropyCache& H, int n) {
  double t = 0;
  for (int v = 0; v < n; ++v) t += H({v});
  return t;
}

void check_vertices(const SeedSystem& s, int n) {
  if (s.num_vertices != n)
    throw std::invalid_argument("vertex sets differ: system has " + std::to_string(s.num_vertices) +
                                " vertices, graph has " + std::to_string(n));
}

}  // namespace

VerificationReport verify_weighted(const SeedSystem& s, const WeightedHypergraph& h, int jobs) {
  check_vertices(s, h.num_vertices());
  s.validate();
  EntropyCache H(s);
  VerificationReport r;
  r.theorem = "weighted";
  for (const auto& e : h.edges())
    if (e.weight > 0) r.lhs += e.weight * H(e.vertices);
  const auto b = beta(h, s.visibility, jobs);
  r.coefficient = b.value;
  r.witness_seed = b.witness_seed;
  r.witness_set = b.witness_set;
  r.rhs_base = vertex_sum(H, s.num_vertices);
  finish(r);
  return r;
}

VerificationReport verify_regular_edge(const SeedSystem& s, const SimpleGraph& g, int jobs) {
  check_vertices(s, g.num_vertices());
  if (g.regular_degree() < 0) throw std::invalid_argument("graph is not regular");
  s.validate();
  EntropyCache H(s);
  VerificationReport r;
  r.theorem = "regular-edge";
  for (auto [u, v] : g.edges()) r.lhs += H({u, v});
  const auto b = beta_regular(g, s.visibility, jobs);
  const auto c = beta(g.to_hypergraph(), s.visibility, jobs);
  if (std::abs(b.value - c.value) > 1e-12 * std::max(1.0, std::abs(c.value)))
    throw std::logic_error("regular-graph and closure forms of beta disagree: " + format12(b.value) +
                           " vs " + format12(c.value));
  r.coefficient = b.value;
  r.witness_seed = b.witness_seed;
  r.witness_set = b.witness_set;
  r.rhs_base = vertex_sum(H, s.num_vertices);
  finish(r);
  return r;
}

VerificationReport verify_shearer(const JointDist& j, const WeightedHypergraph& h) {
  const int n = h.num_vertices();
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) {
    all[v] = v;
    if (!j.has_variable(v)) throw std::invalid_argument("joint law lacks vertex " + std::to_string(v));
  }
  if (static_cast<int>(j.variables().size()) != n)
    throw std::invalid_argument("joint law has variables outside the vertex set");
  VerificationReport r;
  r.theorem = "shearer";
  for (const auto& e : h.edges())
    if (e.weight > 0) r.lhs += e.weight * joint_entropy(j, e.vertices);
  const auto lam = shearer_lambda(h);
  r.coefficient = lam.value;
  r.witness_set = {lam.witness_vertex};
  r.rhs_base = joint_entropy(j, all);
  finish(r);
  return r;
}

VerificationReport verify_shearer(const SeedSystem& s, const WeightedHypergraph& h) {
  check_vertices(s, h.num_vertices());
  VertexSet all(s.num_vertices);
  for (int v = 0; v < s.num_vertices; ++v) all[v] = v;
  return verify_shearer(joint_law(s, all), h);
}

VerificationReport verify_star_edge(const SeedSystem& s, const SimpleGraph& g, int jobs) {
  check_vertices(s, g.num_vertices());
  s.validate();
  EntropyCache H(s);
  VerificationReport r;
  r.theorem = "star-edge";
  for (int v = 0; v < g.num_vertices(); ++v) {
    VertexSet star = g.neighbors(v);
    star.push_back(v);
    r.lhs += H(make_vertex_set(star));
  }
  for (auto [u, v] : g.edges()) r.rhs_base += H({u, v});
  bool visible_edge = false;
  for (const auto& W : s.visibility)
    for (int v : W) visible_edge = visible_edge || g.degree(v) > 0;
  if (g.edges().empty()) {
    r.notes = "graph has no edges; coefficient taken as 0";
  } else if (!visible_edge) {
    // every edge endpoint is a constant, so the right side vanishes
    r.notes = "no visibility set meets an edge; coefficient taken as 0";
  } else {
    const auto b = star_edge_beta(g, s.visibility, jobs);
    r.coefficient = b.value;
    r.witness_seed = b.witness_seed;
    r.witness_edges = b.witness_edges;
  }
  finish(r);
  return r;
}

WeightedHypergraph random_hypergraph(int n, int max_edges, std::uint64_t rng_seed) {
  if (n < 1 || max_edges < 1) throw std::invalid_argument("random hypergraph needs n, max_edges >= 1");
  Rng rng(rng_seed);
  std::set<VertexSet> seen;
  std::vector<Hyperedge> edges;
  const int ne = rng.uniform_int(1, max_edges);
  for (int e = 0; e < ne; ++e) {
    VertexSet U;
    for (int v = 0; v < n; ++v)
      if (rng.bernoulli(0.4)) U.push_back(v);
    if (U.empty()) U.push_back(rng.uniform_int(0, n - 1));
    if (!seen.insert(U).second) continue;
    edges.push_back({U, rng.uniform_int(0, 6) / 2.0});
  }
  return WeightedHypergraph(n, edges);
}

SimpleGraph random_regular_graph(int n, int d, std::uint64_t rng_seed) {
  if (d < 0 || n < 1 || d >= n || (static_cast<long long>(n) * d) % 2)
    throw std::invalid_argument("no simple " + std::to_string(d) + "-regular graph on " +
                                std::to_string(n) + " vertices");
  Rng rng(rng_seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < d; ++k) points.push_back(v);
    for (int i = static_cast<int>(points.size()) - 1; i > 0; --i)
      std::swap(points[i], points[rng.uniform_int(0, i)]);
    std::set<std::pair<int, int>> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < points.size() && ok; i += 2) {
      auto e = std::minmax(points[i], points[i + 1]);
      ok = e.first != e.second && edges.insert(e).second;
    }
    if (ok) return SimpleGraph(n, {edges.begin(), edges.end()});
  }
  throw std::runtime_error("pairing model did not produce a simple graph");
}

SimpleGraph random_graph(int n, double p, std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return SimpleGraph(n, edges);
}

namespace {

struct InstanceResult {
  std::vector<FuzzRow> rows;
  std::vector<FuzzFailure> failures;
};

Json graph_json(const SimpleGraph& g) {
  return to_json(HypergraphDoc{g.to_hypergraph(), std::nullopt});
}

InstanceResult run_instance(const FuzzConfig& c, std::size_t k) {
  InstanceResult out;
  const std::uint64_t base = derive_seed(c.seed, k);
  Rng pick(derive_seed(base, 2));
  // sizes vary per instance up to the configured shape
  RandomSystemShape shape = c.shape;
  shape.num_vertices = pick.uniform_int(std::min(2, c.shape.num_vertices), c.shape.num_vertices);
  shape.num_seeds = pick.uniform_int(1, c.shape.num_seeds);
  const auto sys = random_system(shape, derive_seed(base, 0));
  const int n = sys.num_vertices;
  const auto h = random_hypergraph(n, c.max_edges, derive_seed(base, 1));

  std::vector<int> degrees;
  for (int d = 1; d < n; ++d)
    if ((n * d) % 2 == 0) degrees.push_back(d);

  auto record = [&](const VerificationReport& r, const Json& structure) {
    out.rows.push_back({k, r.theorem, r.slack, r.pass});
    if (!r.pass)
      out.failures.push_back({k, r.theorem, r.slack, Json{{"system", to_json(sys)}, {"graph", structure}}});
  };
  record(verify_weighted(sys, h), to_json(HypergraphDoc{h, std::nullopt}));
  if (!degrees.empty()) {
    const int d = degrees[pick.uniform_int(0, static_cast<int>(degrees.size()) - 1)];
    const auto g = random_regular_graph(n, d, derive_seed(base, 3));
    record(verify_regular_edge(sys, g), graph_json(g));
  }
  record(verify_shearer(sys, h), to_json(HypergraphDoc{h, std::nullopt}));
  const auto g = random_graph(n, 0.5, derive_seed(base, 4));
  record(verify_star_edge(sys, g), graph_json(g));
  return out;
}

}  // namespace

FuzzSummary fuzz(const FuzzConfig& config) {
  std::vector<InstanceResult> results(config.count);
  const int jobs = std::max(1, config.jobs);
  auto worker = [&](int t) {
    for (std::size_t k = t; k < config.count; k += jobs) results[k] = run_instance(config, k);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex m;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        try {
          worker(t);
        } catch (...) {
          std::lock_guard lock(m);
          if (!err) err = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }
  FuzzSummary s;
  std::map<std::string, double> mins;
  std::vector<std::string> order;
  for (auto& r : results) {
    for (auto& row : r.rows) {
      auto it = mins.find(row.theorem);
      if (it == mins.end()) {
        mins.emplace(row.theorem, row.slack);
        order.push_back(row.theorem);
      } else {
        it->second = std::min(it->second, row.slack);
      }
      s.rows.push_back(row);
    }
    for (auto& f : r.failures) s.failures.push_back(std::move(f));
  }
  for (const auto& t : order) s.min_slack.emplace_back(t, mins[t]);
  return s;
}

std::string fuzz_csv(const FuzzSummary& s) {
  std::ostringstream os;
  os << "instance,theorem,slack,pass\n";
  for (const auto& r : s.rows)
    os << r.instance << ',' << r.theorem << ',' << format12(r.slack) << ',' << (r.pass ? 1 : 0) << '\n';
  return os.str();
}

}  // namespace entex
