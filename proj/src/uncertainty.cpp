#include "entex/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <limits>

#include "entex/rng.hpp"

namespace entex {

UncertaintyPair entropy_pair() {
  return {"entropy", [](const Dist& d) { return entropy(d); },
          [](const JointDist& j) { return entropy(j); }};
}

void CovarianceParams::validate() const {
  if (!(a > 1)) throw std::invalid_argument("variance pair needs a > 1 and |b| <= 2 sqrt(a(a-1)); got a = " + format12(a));
  const double lim = 2 * std::sqrt(a * (a - 1));
  if (!(std::abs(b) <= lim * (1 + 1e-15)))
    throw std::invalid_argument("variance pair needs a > 1 and |b| <= 2 sqrt(a(a-1)); got |b| = " +
                                format12(std::abs(b)) + " > " + format12(lim));
}

double variance(const Dist& d) {
  double m = 0, m2 = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double x = d.support()[i];
    m += d.prob(i) * x;
    m2 += d.prob(i) * x * x;
  }
  return std::max(0.0, m2 - m * m);
}

PairMoments pair_moments(const JointDist& j) {
  if (j.variables().size() != 2) throw std::invalid_argument("pair moments need exactly two variables");
  const auto& s1 = j.variables()[0].support;
  const auto& s2 = j.variables()[1].support;
  PairMoments m;
  double e11 = 0, e22 = 0, e12 = 0;
  for (std::size_t o = 0; o < j.num_outcomes(); ++o) {
    const double p = j.table()[o];
    if (p == 0) continue;
    const double x = s1[j.symbol(o, 0)], y = s2[j.symbol(o, 1)];
    m.mean1 += p * x;
    m.mean2 += p * y;
    e11 += p * x * x;
    e22 += p * y * y;
    e12 += p * x * y;
  }
  m.var1 = std::max(0.0, e11 - m.mean1 * m.mean1);
  m.var2 = std::max(0.0, e22 - m.mean2 * m.mean2);
  m.cov = e12 - m.mean1 * m.mean2;
  return m;
}

UncertaintyPair variance_pair(const CovarianceParams& p) {
  p.validate();
  return {"variance", [](const Dist& d) { return variance(d); },
          [p](const JointDist& j) {
            const auto m = pair_moments(j);
            return p.a * (m.var1 + m.var2) + p.b * m.cov;
          }};
}

namespace {

std::vector<double> random_simplex(Rng& rng, std::size_t n) {
  std::vector<double> w(n);
  double s = 0;
  for (auto& x : w) {
    x = rng.bernoulli(0.2) ? 0.0 : rng.uniform();
    s += x;
  }
  if (s == 0) {
    w[rng.uniform_int(0, static_cast<int>(n) - 1)] = 1;
    s = 1;
  }
  for (auto& x : w) x /= s;
  return w;
}

void note_gap(ProbeReport& r, double gap) {
  r.min_gap = std::min(r.min_gap, gap);
  if (gap < -kSlackTolerance) ++r.violations;
}

}  // namespace

ProbeReport probe_delta(const UncertaintyPair& p, const std::vector<double>& support,
                        std::size_t samples, std::uint64_t rng_seed) {
  if (support.empty()) throw std::invalid_argument("empty support");
  Rng rng(rng_seed);
  ProbeReport r;
  r.samples = samples;
  r.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < support.size(); ++i) {
    std::vector<double> pm(support.size(), 0.0);
    pm[i] = 1;
    r.max_point_mass = std::max(r.max_point_mass, std::abs(p.delta(Dist(support, pm))));
  }
  for (std::size_t k = 0; k < samples; ++k) {
    const auto mu = random_simplex(rng, support.size());
    const auto nu = random_simplex(rng, support.size());
    const double lam = rng.uniform();
    std::vector<double> mix(support.size());
    double tot = 0;
    for (std::size_t i = 0; i < mix.size(); ++i) tot += (mix[i] = lam * mu[i] + (1 - lam) * nu[i]);
    for (auto& x : mix) x /= tot;
    note_gap(r, p.delta(Dist(support, mix)) -
                    (lam * p.delta(Dist(support, mu)) + (1 - lam) * p.delta(Dist(support, nu))));
  }
  if (samples == 0) r.min_gap = 0;
  return r;
}

ProbeReport probe_pair(const UncertaintyPair& p, const std::vector<double>& support1,
                       const std::vector<double>& support2, std::size_t samples,
                       std::uint64_t rng_seed) {
  if (support1.empty() || support2.empty()) throw std::invalid_argument("empty support");
  Rng rng(rng_seed);
  const std::vector<Variable> vars{{0, support1}, {1, support2}};
  const std::size_t n = support1.size() * support2.size();
  ProbeReport r;
  r.samples = samples;
  r.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> pm(n, 0.0);
    pm[i] = 1;
    r.max_point_mass = std::max(r.max_point_mass, std::abs(p.Delta(JointDist(vars, pm))));
  }
  auto parts = [&](const std::vector<double>& t) {
    const JointDist j(vars, t);
    const double D = p.Delta(j);
    return std::array<double, 3>{D, D - p.delta(marginal(j, {0}).to_dist()),
                                 D - p.delta(marginal(j, {1}).to_dist())};
  };
  for (std::size_t k = 0; k < samples; ++k) {
    const auto mu = random_simplex(rng, n);
    const auto nu = random_simplex(rng, n);
    const double lam = rng.uniform();
    std::vector<double> mix(n);
    double tot = 0;
    for (std::size_t i = 0; i < n; ++i) tot += (mix[i] = lam * mu[i] + (1 - lam) * nu[i]);
    for (auto& x : mix) x /= tot;
    const auto fm = parts(mix), fa = parts(mu), fb = parts(nu);
    for (int c = 0; c < 3; ++c) note_gap(r, fm[c] - (lam * fa[c] + (1 - lam) * fb[c]));
  }
  if (samples == 0) r.min_gap = 0;
  return r;
}

VerificationReport verify_uncertainty(const SeedSystem& s, const SimpleGraph& g,
                                      const UncertaintyPair& pair, int jobs) {
  if (s.num_vertices != g.num_vertices())
    throw std::invalid_argument("vertex sets of system and graph differ");
  s.validate();
  VerificationReport r;
  r.theorem = "uncertainty-" + pair.name;
  for (auto [u, v] : g.edges()) r.lhs += pair.Delta(joint_law(s, {u, v}));
  for (int v = 0; v < s.num_vertices; ++v) r.rhs_base += pair.delta(joint_law(s, {v}).to_dist());
  if (g.edges().empty()) {
    r.notes = "graph has no edges; beta is 0";
  } else {
    const auto b = beta(g.to_hypergraph(), s.visibility, jobs);
    r.coefficient = b.value;
    r.witness_seed = b.witness_seed;
    r.witness_set = b.witness_set;
  }
  r.slack = r.lhs - r.coefficient * r.rhs_base;
  r.pass = r.slack >= -kSlackTolerance;
  return r;
}

CorrelationReport correlation_bound_check(const SeedSystem& s, const SimpleGraph& g, int jobs) {
  const int d = g.regular_degree();
  if (d < 1) throw std::invalid_argument("correlation bound needs a d-regular graph with d >= 1");
  if (s.num_vertices != g.num_vertices())
    throw std::invalid_argument("vertex sets of system and graph differ");
  CorrelationReport r;
  r.degree = d;
  r.beta = beta_regular(g, s.visibility, jobs).value;
  double sum_cov = 0, sum_var = 0;
  for (auto [u, v] : g.edges()) sum_cov += pair_moments(joint_law(s, {u, v})).cov;
  for (int v = 0; v < s.num_vertices; ++v) sum_var += variance(joint_law(s, {v}).to_dist());
  r.lhs = std::abs(sum_cov);
  const double tol = 1e-12 * d;
  if (std::abs(r.beta - d) <= tol) {
    r.branch = "beta=d";
    r.rhs = 0;
  } else if (std::abs(r.beta - d / 2.0) <= tol) {
    // optimal a diverges; the statement itself reads |Sum cov| <= (d/2) Sum var
    r.branch = "beta=d/2";
    r.rhs = (d / 2.0) * sum_var;
  } else {
    r.branch = "interior";
    r.rhs = std::sqrt(r.beta * (d - r.beta)) * sum_var;
    const double t = r.beta / d;
    r.a = t / (2 * t - 1);
    const double bmax = 2 * std::sqrt(r.a * (r.a - 1));
    r.derived_slack_plus = verify_uncertainty(s, g, variance_pair({r.a, bmax}), jobs).slack;
    r.derived_slack_minus = verify_uncertainty(s, g, variance_pair({r.a, -bmax}), jobs).slack;
  }
  r.slack = r.rhs - r.lhs;
  r.pass = r.slack >= -kSlackTolerance;
  return r;
}

}  // namespace entex
