#pragma once

#include <string>
#include <vector>

#include "entex/serialize.hpp"

namespace entex {

/// Values of f at j/N (j = 0..N) and of F at (a/N, b/N) with a + b <= N.
class TriangleGrid {
 public:
  TriangleGrid() = default;
  explicit TriangleGrid(int N);

  int N() const { return N_; }
  double& f(int j) { return f_.at(j); }
  double f(int j) const { return f_.at(j); }
  double& F(int a, int b) { return F_.at(index(a, b)); }
  double F(int a, int b) const { return F_.at(index(a, b)); }
  const std::vector<double>& f_values() const { return f_; }
  const std::vector<double>& F_values() const { return F_; }
  /// Rows F(a, 0..N-a), a = 0..N.
  std::vector<std::vector<double>> F_rows() const;
  static TriangleGrid from_rows(std::vector<double> f, const std::vector<std::vector<double>>& F);

  bool inside(int a, int b) const { return a >= 0 && b >= 0 && a + b <= N_; }
  bool operator==(const TriangleGrid&) const = default;

 private:
  std::size_t index(int a, int b) const;
  int N_ = 0;
  std::vector<double> f_;
  std::vector<double> F_;
};

/// Summary of the multipliers attached to one constraint family.
struct DualFamily {
  std::string name;
  std::size_t rows = 0;
  double sum = 0;
  double max = 0;
  std::size_t active = 0;       // multipliers above 1e-8
  double max_complementarity = 0;  // max slack * multiplier
};

struct DualReport {
  std::vector<DualFamily> families;
  double primal_objective = 0;
  double dual_objective = 0;
  double gap = 0;
  double dual_residual = 0;
};

struct Certificate {
  int d = 3;
  int j = 0;  // q = j/N
  std::string mode;  // "lp", "entropy" or "trivial"
  TriangleGrid grid;
  double margin = 0;  // c f(q) - F(q,q), c = 2(d-1)/d
  bool has_duals = false;
  std::vector<double> duals;  // one per LP row, in build order
  DualReport dual_summary;
  int iterations = 0;
  bool box_binding = false;  // the artificial variable cap carries a positive multiplier
  std::vector<std::string> notes;

  double q() const { return static_cast<double>(j) / grid.N(); }
};

inline double edge_coefficient(int d) { return 2.0 * (d - 1) / d; }

/// Upper bound on every grid variable in the LP. It only exists to keep the
/// optimal face bounded; certificates report whether it binds.
inline constexpr double kGridCap = 1000.0;

/// Maximizes c f(q) - F(q,q) over grids satisfying the boundary conditions and
/// the directional second-difference constraints, with f(q) <= 1.
Certificate feasibility_margin(int d, int j, int N);

/// Binary entropy and trinomial entropy sampled on the grid, scaled so f(q) = 1.
Certificate entropy_certificate(int d, int j, int N);

/// f = F = 0 with zero multipliers.
Certificate trivial_certificate(int d, int j, int N);

struct VerifyResult {
  bool pass = true;
  std::vector<std::string> failures;
  double max_second_difference = 0;  // worst value over all families
  double margin_error = 0;
};

/// Rechecks boundary values, all second differences (both F - f(x) and
/// F - f(y)) and the stored margin directly from the grid values.
VerifyResult verify_certificate(const Certificate& c);

/// Rebuilds the LP for (d, j, N) and recomputes the duality gap and dual
/// residual from the stored multipliers. Throws if the certificate has none.
DualReport dual_report(const Certificate& c);

struct InterpolantProbe {
  std::size_t samples = 0;
  std::size_t violations = 0;
  double worst = 0;
};

/// Random three-point concavity checks of f, F - f(x) and F - f(y) on the
/// piecewise-linear interpolant over the anti-diagonal triangulation.
InterpolantProbe probe_interpolant(const TriangleGrid& g, std::size_t samples, std::uint64_t seed);

struct BestBound {
  bool found = false;
  double q_star = 0.5;  // smallest grid q with margin > tol; 1/2 if none
  Certificate certificate;
  std::vector<double> margins;  // margins[j-1] for scanned j (full scan only)
  bool full_scan = false;
  bool monotone = true;
  std::vector<std::string> notes;
};

/// mode is "lp" or "entropy". For N <= 64 every grid point with 2j <= N is
/// solved and the monotonicity of the margin checked; above that the smallest
/// certified point is found by binary search, which relies on monotonicity.
BestBound best_bound(int d, int N, double tol = 1e-9, const std::string& mode = "lp", int jobs = 1);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

}  // namespace entex
