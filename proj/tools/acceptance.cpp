// Acceptance run: one PASS/FAIL line per criterion. Tolerances are fixed here
// and are not configurable. --expect-fail lists criteria known to be
// unattainable as stated; they still print FAIL, but only unexpected failures
// make the exit status nonzero.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>

#include "entex/expansion.hpp"
#include "entex/ff_optimizer.hpp"
#include "entex/graph_families.hpp"
#include "entex/harness.hpp"
#include "entex/indset_bounds.hpp"
#include "entex/rng.hpp"
#include "entex/serialize.hpp"
#include "entex/uncertainty.hpp"

using namespace entex;

namespace {

constexpr double kSlackTol = 1e-9;       // inequality slack floor
constexpr double kExactTol = 1e-12;      // "exact" comparisons
constexpr double kRoundTripTol = 1e-10;  // phi_inv(phi(q)) - q
constexpr double kDualGapTol = 1e-8;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) { return format12(x); }

// ------------------------------------------------------------------ 1

Outcome weighted_fuzz() {
  FuzzConfig c;  // |V| <= 5, m <= 3, alphabets <= 3
  c.count = 500;
  c.seed = 1;
  const auto s = fuzz(c);
  double worst = INFINITY;
  std::size_t n = 0;
  for (const auto& r : s.rows)
    if (r.theorem == "weighted") {
      worst = std::min(worst, r.slack);
      ++n;
    }
  return {n == 500 && worst >= -kSlackTol,
          std::to_string(n) + " systems, min slack " + fmt(worst) + " (floor -1e-9)"};
}

// ------------------------------------------------------------------ 2

Outcome sharpness() {
  double worst = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto h = random_hypergraph(5, 6, derive_seed(2, seed));
    const auto s = random_system({5, 3, 2, 2, 0.6, false}, derive_seed(3, seed));
    const auto b = beta(h, s.visibility);
    const auto sharp = sharpness_system(h, s.visibility, b.witness_seed, b.witness_set, Dist({0.3, 0.7}));
    worst = std::max(worst, std::abs(verify_weighted(sharp, h).slack));
  }
  return {worst <= kSlackTol, "50 hypergraphs, max |slack| " + fmt(worst) + " (limit 1e-9)"};
}

// ------------------------------------------------------------------ 3

double naive_beta(const WeightedHypergraph& h, const std::vector<VertexSet>& vis) {
  double best = INFINITY;
  for (const auto& W : vis) {
    const int k = static_cast<int>(W.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<bool> in(h.num_vertices(), false);
      int size = 0;
      for (int b = 0; b < k; ++b)
        if (mask >> b & 1) {
          in[W[b]] = true;
          ++size;
        }
      double w = 0;
      for (const auto& e : h.edges()) {
        bool meets = false;
        for (int v : e.vertices) meets = meets || in[v];
        if (meets) w += e.weight;
      }
      best = std::min(best, w / size);
    }
  }
  return best;
}

Outcome beta_oracles() {
  double worst = 0;
  int graphs = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng rng(derive_seed(4, k));
    const int d = k % 2 ? 4 : 3;
    int n = rng.uniform_int(d + 1, 10);
    if (n * d % 2) ++n;
    if (n > 10) n -= 2;
    const auto g = random_regular_graph(n, d, derive_seed(5, k));
    std::vector<VertexSet> vis(rng.uniform_int(1, 3));
    for (auto& W : vis) {
      for (int v = 0; v < n; ++v)
        if (rng.bernoulli(0.5)) W.push_back(v);
      if (W.empty()) W.push_back(rng.uniform_int(0, n - 1));
    }
    const auto h = g.to_hypergraph();
    const double b = beta(h, vis).value;
    worst = std::max({worst, std::abs(b - naive_beta(h, vis)), std::abs(b - beta_regular(g, vis).value)});
    ++graphs;
  }
  return {worst <= kExactTol, std::to_string(graphs) + " regular graphs, max disagreement " + fmt(worst)};
}

// ------------------------------------------------------------------ 4

Outcome tree_balls() {
  const double e = ball_expansion(tree_ball(3, 1)).value;
  const double coef = (3 + e) / 2;
  const auto r = tree_nested_ball_ratios(3, 12);
  bool decreasing = true;
  for (std::size_t i = 1; i < r.size(); ++i) decreasing = decreasing && r[i] < r[i - 1];
  const double gap = r.back() - 1;
  return {std::abs(e - 1.5) <= kExactTol && std::abs(coef - 2.25) <= kExactTol && decreasing && gap >= 0 &&
              gap <= 0.01,
          "ball expansion " + fmt(e) + ", coefficient " + fmt(coef) + ", ratios decreasing " +
              (decreasing ? "yes" : "no") + ", ratio at R=12 " + fmt(r.back())};
}

// ------------------------------------------------------------------ 5

Outcome edge_vertex() {
  double worst = 0;
  for (int d = 3; d <= 8; ++d) {
    const double b = (d + tree_cheeger(d)) / 2;
    worst = std::max(worst, std::abs(2 * b / d - 2.0 * (d - 1) / d));
  }
  return {worst <= kExactTol, "d = 3..8, max |2 beta/d - 2(d-1)/d| " + fmt(worst)};
}

// ------------------------------------------------------------------ 6

Outcome phi_machinery() {
  bool decreasing = true;
  double prev = INFINITY, round_trip = 0;
  for (int i = 1; i < 10000; ++i) {
    const double q = 0.5 * i / 10000;
    const double p = phi(q);
    decreasing = decreasing && p < prev;
    prev = p;
    round_trip = std::max(round_trip, std::abs(phi_inv(p) - q));
  }
  Rng rng(6);
  bool dominate = true;
  for (int i = 0; i < 100; ++i) {
    const double lo = (1 + rng.uniform() * 998) / 30000;  // inside (0, 1/30)
    const double hi = 2.0 / 3 + (1 + rng.uniform() * 998) / 3000;  // inside (2/3, 1)
    dominate = dominate && phi_inv_estimate(lo) >= phi_inv(lo) && phi_inv_estimate(hi) >= phi_inv(hi);
  }
  double lo_s = INFINITY, hi_s = -INFINITY;
  for (int e = 10; e <= 20; ++e) {
    const double d = std::ldexp(1.0, e);
    const double s = bound_tree(static_cast<int>(d)).bound * d / std::log(d);
    lo_s = std::min(lo_s, s);
    hi_s = std::max(hi_s, s);
  }
  const bool asym = lo_s >= 1.8 && hi_s <= 2.2;
  return {decreasing && round_trip <= kRoundTripTol && dominate && asym,
          std::string("decreasing ") + (decreasing ? "yes" : "no") + ", round-trip error " + fmt(round_trip) +
              ", estimates dominate " + (dominate ? "yes" : "no") + ", bound_tree(d) d/log d over d = 2^10..2^20 in [" +
              fmt(lo_s) + ", " + fmt(hi_s) + "], required [1.8, 2.2]"};
}

// ------------------------------------------------------------------ 7

Outcome tessellation() {
  const double d = 65536;
  const double ratio = bound_tessellation(65536, 4).bound / (std::log(d) / d);
  const double rel = std::abs(ratio - 3) / 3;
  return {rel <= 0.10, "ratio " + fmt(ratio) + " at d = 2^16, relative distance to 3 is " + fmt(rel) + " (limit 0.1)"};
}

// ------------------------------------------------------------------ 8

Outcome correlation() {
  double worst = INFINITY;
  for (std::uint64_t k = 0; k < 500; ++k) {
    const int n = k % 2 ? 6 : 4;
    const auto g = random_regular_graph(n, 3, derive_seed(8, k));
    const auto s = random_system({n, 3, 3, 3, 0.5, true}, derive_seed(9, k));
    worst = std::min(worst, correlation_bound_check(s, g).slack);
  }
  // independent real-valued coordinates, one private seed each
  SeedSystem ind;
  ind.num_vertices = 6;
  for (int v = 0; v < 6; ++v) {
    ind.seeds.push_back(Dist({-1.0, 0.5, 2.0}, {0.2, 0.5, 0.3}));
    ind.visibility.push_back({v});
    ind.alphabets.push_back({-1.0, 0.5, 2.0});
    ind.tables.push_back({0, 1, 2});
  }
  const auto r = correlation_bound_check(ind, random_regular_graph(6, 3, 10));
  const bool indep = r.branch == "beta=d" && r.lhs <= kExactTol;
  return {worst >= -kSlackTol && indep,
          "500 systems, min slack " + fmt(worst) + "; independent case |sum cov| " + fmt(r.lhs) + " on branch " +
              r.branch};
}

// ------------------------------------------------------------------ 9

JointDist random_joint(Rng& rng, int nvars, int max_alpha) {
  std::vector<Variable> vars;
  std::size_t total = 1;
  for (int i = 0; i < nvars; ++i) {
    const int k = rng.uniform_int(1, max_alpha);
    std::vector<double> sup(k);
    for (int a = 0; a < k; ++a) sup[a] = a;
    vars.push_back({i, sup});
    total *= k;
  }
  std::vector<double> t(total);
  double s = 0;
  for (auto& x : t) s += x = rng.bernoulli(0.25) ? 0.0 : rng.uniform();
  if (s == 0) t[0] = s = 1;
  for (auto& x : t) x /= s;
  return JointDist(vars, t);
}

Outcome joint_law_fuzz() {
  Rng rng(91);
  double worst_pair = INFINITY, worst_shearer = INFINITY;
  for (int k = 0; k < 1000; ++k) {
    const auto j = random_joint(rng, 4, 3);
    worst_pair = std::min(worst_pair, verify_pair_conditioning(j, 0, 1, 2, 3).slack);
  }
  for (int k = 0; k < 1000; ++k) {
    const int n = rng.uniform_int(2, 5);
    const auto j = random_joint(rng, n, 3);
    const auto h = random_hypergraph(n, 6, derive_seed(92, k));
    worst_shearer = std::min(worst_shearer, verify_shearer(j, h).slack);
  }
  return {worst_pair >= -kSlackTol && worst_shearer >= -kSlackTol,
          "1000 laws each, min slack: pair conditioning " + fmt(worst_pair) + ", weighted Shearer " +
              fmt(worst_shearer)};
}

// ----------------------------------------------------------------- 10

Outcome lp_optimizer() {
  const auto t0 = std::chrono::steady_clock::now();
  const int N = 40;
  const auto ent = best_bound(3, N, 1e-9, "entropy");
  const auto lp = best_bound(3, N, 1e-9, "lp");
  const double target = phi_inv(1.0 / 3);
  bool verified = verify_certificate(ent.certificate).pass && verify_certificate(lp.certificate).pass;
  double worst_gap = std::abs(lp.certificate.dual_summary.gap);
  for (int j = 1; 2 * j <= N; ++j) {
    const auto c = feasibility_margin(3, j, N);
    verified = verified && verify_certificate(c).pass;
    worst_gap = std::max(worst_gap, std::abs(dual_report(c).gap));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = ent.found && lp.found && std::abs(ent.q_star - target) <= 2.0 / N &&
                  lp.q_star <= ent.q_star + 1e-3 && verified && worst_gap <= kDualGapTol && secs <= 300;
  return {ok, "entropy q* " + fmt(ent.q_star) + " vs phi_inv(1/3) " + fmt(target) + ", LP q* " + fmt(lp.q_star) +
                  ", certificates verified " + (verified ? "yes" : "no") + ", max duality gap " + fmt(worst_gap) +
                  ", " + fmt(secs) + " s"};
}

// ----------------------------------------------------------------- 11

Outcome round_trips(const std::string& dir) {
  int files = 0;
  bool ok = true;
  std::string bad;
  auto check = [&](const std::string& name, bool same) {
    ++files;
    if (!same) {
      ok = false;
      bad += " " + name;
    }
  };
  for (const char* f : {"triangle.json", "triangle_singleton.json", "c4.json", "weighted.json"}) {
    const auto d = hypergraph_from_json(read_json_file(dir + "/" + f));
    check(f, hypergraph_from_json(parse_json(to_json(d).dump())) == d);
  }
  for (const char* f : {"t3_ball_r1.json", "t3_ball_r2.json", "z2_cross.json"}) {
    const auto j = read_json_file(dir + "/" + f);
    check(f, to_json(region_from_json(j)) == j);
  }
  for (const char* f : {"sharpness_triangle_singleton.json", "sharpness_weighted.json"}) {
    const auto j = read_json_file(dir + "/" + f);
    check(f, to_json(seed_system_from_json(j)) == j);
  }
  const auto cert = feasibility_margin(3, 9, 20);
  check("certificate", to_json(certificate_from_json(parse_json(to_json(cert).dump()))) == to_json(cert));

  FuzzConfig c;
  c.count = 100;
  c.seed = 77;
  const auto a = fuzz_csv(fuzz(c));
  c.jobs = 4;
  const auto b = fuzz_csv(fuzz(c));
  return {ok && a == b, std::to_string(files) + " round trips identical" + (ok ? "" : " except" + bad) +
                            ", fuzz CSV reproducible across runs and job counts " + (a == b ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> expect_fail;
  std::string fixtures = ENTEX_FIXTURE_DIR;
  app.add_option("--expect-fail", expect_fail, "Criteria known to be unattainable as stated")->delimiter(',');
  app.add_option("--fixtures", fixtures, "Fixture directory");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria = {
      weighted_fuzz, sharpness, beta_oracles, tree_balls,   edge_vertex, phi_machinery,
      tessellation,  correlation, joint_law_fuzz, lp_optimizer, [&] { return round_trips(fixtures); }};
  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  int failed = 0, unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const bool known = expected.count(id) > 0;
    std::printf("criterion %2d: %s | %s%s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                !o.pass && known ? " [expected]" : "");
    std::fflush(stdout);
    failed += !o.pass;
    unexpected += !o.pass && !known;
  }
  std::printf("%d of %zu criteria pass; %d unexpected failures\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), unexpected);
  return unexpected == 0 ? 0 : 1;
}
