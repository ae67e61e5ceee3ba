#pragma once

#include <string>
#include <vector>

namespace entex {

/// Edge-to-vertex entropy ratio minus one for an independent set of density q:
/// H(edge)/H(vertex) - 1 with H(vertex) = h(q), H(edge) = -2q log q - (1-2q) log(1-2q).
/// Defined on the open interval (0, 1/2).
double phi(double q);

/// Inverse of phi on (0, 1) by bisection on [1e-15, 1/2 - 1e-15], run to full
/// double precision; throws if |phi(result) - x| still exceeds tol.
double phi_inv(double x, double tol = 1e-12);

/// Explicit upper estimates for phi_inv on (0, 1/30) and (2/3, 1).
double phi_inv_estimate(double x);

struct BoundReport {
  std::string family;  // tree | tessellation | lattice | custom
  std::string params;  // e.g. "d=3" or "d=7;k=3"
  double tau = 0;
  double bound = 0.5;
  std::string method;
  bool certified = true;      // false: no bound could be certified
  bool uninformative = false; // tau = 0 gives the trivial 1/2
};

/// Reports phi_inv(tau); tau = 0 gives the uninformative 1/2.
BoundReport bound_custom(double tau);
/// tau = (d-2)/d.
BoundReport bound_tree(int d);
/// tau = hyperbolic_cheeger(d, k)/d.
BoundReport bound_tessellation(int d, int k);
/// tau = exact min |dW|/(2n|W|) over the l1-ball of radius R in Z^n. Balls
/// above the exhaustive cap yield an uncertified report: the full-ball value
/// is only an upper value for tau, which points the wrong way for a bound.
BoundReport bound_lattice(int n, int R, int jobs = 1);

/// CSV with columns family,params,tau,bound,method at 12 significant digits.
std::string bounds_csv(const std::vector<BoundReport>& rows);

}  // namespace entex
