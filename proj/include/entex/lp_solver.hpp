#pragma once

#include <string>
#include <vector>

namespace entex {

/// max c^T x subject to A x <= b, A given as triplets.
struct InequalityLP {
  int num_vars = 0;
  int num_rows = 0;
  struct Entry {
    int row;
    int col;
    double value;
  };
  std::vector<Entry> entries;
  std::vector<double> b;
  std::vector<double> c;

  int add_row(double rhs) {
    b.push_back(rhs);
    return num_rows++;
  }
  void add(int row, int col, double value) { entries.push_back({row, col, value}); }
};

struct LPSolution {
  std::vector<double> x;
  std::vector<double> y;      // row multipliers, y >= 0, A^T y ~ c
  std::vector<double> slack;  // b - A x, strictly positive
  double primal_objective = 0;  // c^T x
  double dual_objective = 0;    // b^T y
  double gap = 0;               // dual_objective - primal_objective
  double dual_residual = 0;     // max |A^T y - c|
  int iterations = 0;
};

struct IPMOptions {
  double gap_tol = 1e-10;       // relative to 1 + |c^T x|
  double residual_tol = 1e-8;  // max |A^T y - c|
  int max_iterations = 200;
};

/// Mehrotra predictor-corrector on the inequality form. `x0` must be strictly
/// feasible (A x0 < b); iterates stay strictly feasible, so the returned x is
/// a primal feasible point regardless of convergence. Throws
/// std::runtime_error with diagnostics if the tolerances are not reached.
LPSolution solve_lp(const InequalityLP& lp, const std::vector<double>& x0, const IPMOptions& opt = {});

}  // namespace entex
