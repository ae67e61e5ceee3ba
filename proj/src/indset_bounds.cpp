#include "entex/indset_bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "entex/common.hpp"
#include "entex/graph_families.hpp"

namespace entex {

double phi(double q) {
  if (!(q > 0 && q < 0.5)) throw std::invalid_argument("phi is defined on (0, 1/2), got " + format12(q));
  const double lq = std::log(q);
  const double vertex = -q * lq - (1 - q) * std::log1p(-q);
  const double edge = -2 * q * lq - (1 - 2 * q) * std::log1p(-2 * q);
  return edge / vertex - 1;
}

double phi_inv(double x, double tol) {
  if (!(x > 0 && x < 1)) throw std::invalid_argument("phi_inv is defined on (0, 1), got " + format12(x));
  // bisect until the bracket collapses: q near 0 needs relative, not absolute, accuracy
  double lo = 1e-15, hi = 0.5 - 1e-15;  // phi(lo) > phi(hi)
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double f = phi(mid);
    if (f == x) break;
    if (f > x)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() * hi) break;
  }
  if (std::abs(phi(mid) - x) > tol)
    throw std::runtime_error("phi_inv(" + format12(x) + ") missed the tolerance " + format12(tol));
  return mid;
}

double phi_inv_estimate(double x) {
  if (x > 0 && x < 1.0 / 30) {
    const double L = -std::log(x);
    return 0.5 - std::log(2.0) / 2 * x / (L + 2 * std::log(L));
  }
  if (x > 2.0 / 3 && x < 1) return -(1 - x) * std::log1p(-x);
  throw std::invalid_argument("the explicit estimate covers (0, 1/30) and (2/3, 1) only; use phi_inv for " +
                              format12(x));
}

BoundReport bound_custom(double tau) {
  if (!(tau >= 0 && tau < 1)) throw std::invalid_argument("tau must lie in [0, 1), got " + format12(tau));
  BoundReport r;
  r.family = "custom";
  r.params = "tau=" + format12(tau);
  r.tau = tau;
  if (tau == 0) {
    r.bound = 0.5;
    r.uninformative = true;
    r.method = "uninformative (tau = 0)";
  } else {
    r.bound = phi_inv(tau);
    r.method = "bisection";
  }
  return r;
}

BoundReport bound_tree(int d) {
  if (d < 2) throw std::invalid_argument("tree degree must be >= 2");
  auto r = bound_custom((d - 2.0) / d);
  r.family = "tree";
  r.params = "d=" + std::to_string(d);
  if (!r.uninformative) r.method = "bisection; tau=(d-2)/d";
  return r;
}

BoundReport bound_tessellation(int d, int k) {
  auto r = bound_custom(hyperbolic_cheeger(d, k) / d);
  r.family = "tessellation";
  r.params = "d=" + std::to_string(d) + ";k=" + std::to_string(k);
  r.method = "bisection; tau=cheeger(d,k)/d";
  return r;
}

BoundReport bound_lattice(int n, int R, int jobs) {
  const auto ball = lattice_ball(n, R);
  const double d = 2.0 * n;
  const std::string shape = "c n/(R log(R/n)) with c unspecified";
  if (ball.num_vertices > kMaxExhaustive) {
    BoundReport r;
    r.family = "lattice";
    r.params = "n=" + std::to_string(n) + ";R=" + std::to_string(R);
    r.tau = full_region_ratio(ball) / d;
    r.bound = std::nan("");
    r.certified = false;
    r.method = "no certified bound: " + std::to_string(ball.num_vertices) +
               " vertices exceed the exhaustive cap; tau shown is the full-ball upper value";
    return r;
  }
  auto r = bound_custom(ball_expansion(ball, jobs).value / d);
  r.family = "lattice";
  r.params = "n=" + std::to_string(n) + ";R=" + std::to_string(R);
  r.method = (r.uninformative ? "uninformative" : "exhaustive tau; bisection") +
             std::string("; asymptotic shape 1/2 - ") + shape;
  return r;
}

std::string bounds_csv(const std::vector<BoundReport>& rows) {
  std::ostringstream os;
  os << "family,params,tau,bound,method\n";
  for (const auto& r : rows)
    os << r.family << ',' << r.params << ',' << format12(r.tau) << ','
       << (r.certified ? format12(r.bound) : std::string("none")) << ',' << r.method << '\n';
  return os.str();
}

}  // namespace entex
