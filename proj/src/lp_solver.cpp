#include "entex/lp_solver.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entex/common.hpp"

namespace entex {
namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

/// Largest alpha in (0, 1] with v + alpha dv >= 0, times the damping factor.
double step_to_boundary(const Vec& v, const Vec& dv, double damping) {
  double alpha = 1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (dv[i] < 0) alpha = std::min(alpha, -v[i] / dv[i]);
  return std::min(1.0, damping * alpha);
}

}  // namespace

LPSolution solve_lp(const InequalityLP& lp, const std::vector<double>& x0, const IPMOptions& opt) {
  const int n = lp.num_vars, m = lp.num_rows;
  if (static_cast<int>(x0.size()) != n || static_cast<int>(lp.c.size()) != n ||
      static_cast<int>(lp.b.size()) != m)
    throw std::invalid_argument("LP dimensions do not match");

  SpMat A(m, n);
  {
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(lp.entries.size());
    for (const auto& e : lp.entries) t.emplace_back(e.row, e.col, e.value);
    A.setFromTriplets(t.begin(), t.end());
  }
  const SpMat At = A.transpose();
  const Vec b = Eigen::Map<const Vec>(lp.b.data(), m);
  const Vec c = Eigen::Map<const Vec>(lp.c.data(), n);

  Vec x = Eigen::Map<const Vec>(x0.data(), n);
  Vec s = b - A * x;
  if (s.minCoeff() <= 0) throw std::invalid_argument("LP starting point is not strictly feasible");
  Vec y = Vec::Ones(m);

  Eigen::SimplicialLDLT<SpMat> ldlt;
  bool analyzed = false;
  int it = 0;
  double gap_rel = 0, res = 0;
  for (; it < opt.max_iterations; ++it) {
    const Vec rd = c - At * y;
    const double mu = s.dot(y) / m;
    res = rd.cwiseAbs().maxCoeff();
    gap_rel = s.dot(y) / (1 + std::abs(c.dot(x)));
    if (gap_rel <= opt.gap_tol && res <= opt.residual_tol) break;

    const Vec d = y.cwiseQuotient(s);
    SpMat M = At * d.asDiagonal() * A;
    if (!analyzed) {
      ldlt.analyzePattern(M);
      analyzed = true;
    }
    double reg = 0;
    for (int attempt = 0;; ++attempt) {
      SpMat Mr = M;
      if (reg > 0)
        for (int k = 0; k < n; ++k) Mr.coeffRef(k, k) += reg;
      ldlt.factorize(Mr);
      if (ldlt.info() == Eigen::Success) break;
      if (attempt > 8) throw std::runtime_error("normal equations could not be factorized");
      reg = reg == 0 ? 1e-14 * std::max(1.0, M.diagonal().cwiseAbs().maxCoeff()) : reg * 100;
    }

    // rc = target complementarity minus current; returns (dx, ds, dy)
    auto direction = [&](const Vec& rc, Vec& dx, Vec& ds, Vec& dy) {
      const Vec sinv_rc = rc.cwiseQuotient(s);
      const Vec rhs = rd - At * sinv_rc;
      dx = ldlt.solve(rhs);
      // the normal matrix is badly conditioned near the optimum; refinement
      // against the unregularized M recovers the lost digits
      for (int r = 0; r < 3; ++r) dx += ldlt.solve(rhs - M * dx);
      const Vec Adx = A * dx;
      ds = -Adx;
      dy = d.cwiseProduct(Adx) + sinv_rc;
    };

    Vec dxa, dsa, dya;
    direction(-s.cwiseProduct(y), dxa, dsa, dya);
    const double ap = step_to_boundary(s, dsa, 1.0);
    const double ad = step_to_boundary(y, dya, 1.0);
    const double mu_aff = (s + ap * dsa).dot(y + ad * dya) / m;
    const double sigma = std::pow(std::clamp(mu_aff / mu, 0.0, 1.0), 3);

    Vec dx, ds, dy;
    const Vec rc = (sigma * mu) * Vec::Ones(m) - s.cwiseProduct(y) - dsa.cwiseProduct(dya);
    direction(rc, dx, ds, dy);
    // a common step keeps the dual residual shrinking at least as fast as mu,
    // which stops the iterates from stalling on the boundary when dual infeasible
    const double alpha = std::min(step_to_boundary(s, ds, 0.99), step_to_boundary(y, dy, 0.99));

    // ds = -A dx, so s tracks b - Ax up to rounding; recomputing b - Ax
    // instead would zero out nearly active rows through cancellation
    x += alpha * dx;
    s += alpha * ds;
    y += alpha * dy;
  }

  LPSolution out;
  out.iterations = it;
  out.x.assign(x.data(), x.data() + n);
  out.y.assign(y.data(), y.data() + m);
  out.slack.assign(s.data(), s.data() + m);
  out.primal_objective = c.dot(x);
  out.dual_objective = b.dot(y);
  out.gap = out.dual_objective - out.primal_objective;
  out.dual_residual = (At * y - c).cwiseAbs().maxCoeff();
  if (it == opt.max_iterations)
    throw std::runtime_error("interior-point method did not converge in " + std::to_string(it) +
                             " iterations (relative gap " + format12(gap_rel) + ", dual residual " +
                             format12(res) + ")");
  return out;
}

}  // namespace entex
