#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "entex/harness.hpp"

namespace entex {

/// delta acts on single-variable laws, Delta on two-variable joint laws.
/// Both must be concave, vanish on point masses, and Delta - delta(pi_i) must
/// be concave for both marginals. The probes below test this; nothing here
/// proves it.
struct UncertaintyPair {
  std::string name;
  std::function<double(const Dist&)> delta;
  std::function<double(const JointDist&)> Delta;
};

UncertaintyPair entropy_pair();

struct CovarianceParams {
  double a = 2;
  double b = 0;
  /// Throws unless a > 1 and |b| <= 2 sqrt(a(a-1)).
  void validate() const;
};

/// delta = variance, Delta = a(var_1 + var_2) + b cov, over the real atoms
/// attached to each symbol.
UncertaintyPair variance_pair(const CovarianceParams& p);

double variance(const Dist& d);
/// Mean, variance and covariance of a two-variable joint law.
struct PairMoments {
  double mean1 = 0, mean2 = 0, var1 = 0, var2 = 0, cov = 0;
};
PairMoments pair_moments(const JointDist& j);

struct ProbeReport {
  std::size_t samples = 0;
  double min_gap = 0;  // min of f(mix) - (lam f(mu) + (1-lam) f(nu))
  std::size_t violations = 0;  // gaps below -kSlackTolerance
  double max_point_mass = 0;   // largest |f| over point masses
};

/// Concavity of delta on random mixtures over `support`, plus point masses.
ProbeReport probe_delta(const UncertaintyPair& p, const std::vector<double>& support,
                        std::size_t samples, std::uint64_t rng_seed);

/// Concavity of Delta, Delta - delta(pi_1) and Delta - delta(pi_2) on random
/// mixtures of joint laws over support1 x support2; reports the worst of the three.
ProbeReport probe_pair(const UncertaintyPair& p, const std::vector<double>& support1,
                       const std::vector<double>& support2, std::size_t samples,
                       std::uint64_t rng_seed);

/// Sum_e Delta(X_e) >= beta Sum_v delta(X_v), beta in closure form.
VerificationReport verify_uncertainty(const SeedSystem& s, const SimpleGraph& g,
                                      const UncertaintyPair& pair, int jobs = 1);

struct CorrelationReport {
  double lhs = 0;  // |Sum_e cov(X_u, X_v)|
  double rhs = 0;  // sqrt(beta (d - beta)) Sum_v var(X_v)
  double slack = 0;
  double beta = 0;
  int degree = 0;
  double a = 0;  // optimal a, 0 on the degenerate branches
  std::string branch;  // "interior", "beta=d/2" or "beta=d"
  /// Slack of the variance-pair inequality at b = +2 sqrt(a(a-1)) and
  /// b = -2 sqrt(a(a-1)) (interior branch only).
  double derived_slack_plus = 0;
  double derived_slack_minus = 0;
  bool pass = false;
};

CorrelationReport correlation_bound_check(const SeedSystem& s, const SimpleGraph& g, int jobs = 1);

}  // namespace entex
