#include "doctest.h"

#include <cmath>

#include "entex/graph_families.hpp"
#include "entex/indset_bounds.hpp"
#include "entex/rng.hpp"

using namespace entex;

// Reference values evaluated with 40-digit arithmetic.
constexpr double kPhiQuarter = 0.84893436021096690143;
constexpr double kInvThird = 0.45906211513789937281;
constexpr double kInvFifth = 0.48050070815904798445;
constexpr double kInvCross = 0.38868413768923589256;     // tau = 3/5
constexpr double kInvHeptagonal = 0.46163350102743266411;  // tau = sqrt(5)/7

TEST_CASE("phi values and limits") {
  CHECK(std::abs(phi(0.25) - kPhiQuarter) < 1e-14);
  CHECK(phi(1e-12) > 0.96);
  CHECK(phi(1e-12) < 1.0);
  CHECK(phi(0.5 - 1e-12) < 1e-9);
  CHECK(phi(0.5 - 1e-12) > 0.0);
  CHECK_THROWS_AS(phi(0.0), std::invalid_argument);
  CHECK_THROWS_AS(phi(0.5), std::invalid_argument);
}

TEST_CASE("phi is strictly decreasing on a fine grid") {
  double prev = 2;
  for (int i = 1; i < 10000; ++i) {
    const double q = 0.5 * i / 10000.0;
    const double f = phi(q);
    CHECK(f < prev);
    CHECK(f > 0);
    CHECK(f < 1);
    prev = f;
  }
}

TEST_CASE("phi_inv") {
  CHECK(std::abs(phi_inv(1.0 / 3) - kInvThird) < 1e-13);
  CHECK(std::abs(phi_inv(0.2) - kInvFifth) < 1e-13);
  CHECK(std::abs(phi_inv(phi(0.25)) - 0.25) < 1e-10);
  for (int i = 1; i <= 9; ++i) CHECK(std::abs(phi(phi_inv(i / 10.0)) - i / 10.0) <= 1e-12);
  for (int i = 1; i < 1000; ++i) {
    const double q = 0.01 + 0.48 * i / 1000.0;
    CHECK(std::abs(phi_inv(phi(q)) - q) <= 1e-10);
  }
  CHECK_THROWS_AS(phi_inv(0.0), std::invalid_argument);
  CHECK_THROWS_AS(phi_inv(1.0), std::invalid_argument);
}

TEST_CASE("phi_inv near 1 behaves like -x log x") {
  // the ratio tends to 1 only logarithmically; check the trend
  double prev = 0;
  for (double x : {1e-3, 1e-6, 1e-9, 1e-12}) {
    const double ratio = phi_inv(1 - x) / (-x * std::log(x));
    CHECK(ratio > prev);
    CHECK(ratio < 1.0);
    prev = ratio;
  }
  CHECK(prev > 0.9);
}

TEST_CASE("explicit estimates dominate phi_inv") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const double lo = rng.uniform() / 30;
    if (lo > 0) CHECK(phi_inv_estimate(lo) >= phi_inv(lo));
    const double hi = 2.0 / 3 + rng.uniform() / 3;
    if (hi > 2.0 / 3 && hi < 1) CHECK(phi_inv_estimate(hi) >= phi_inv(hi));
  }
  CHECK(phi_inv_estimate(0.01) >= phi_inv(0.01));
  CHECK(std::abs(phi_inv_estimate(0.9) - (-0.1 * std::log(0.1))) < 1e-15);
  CHECK_THROWS_AS(phi_inv_estimate(0.5), std::invalid_argument);
}

TEST_CASE("bound families") {
  const auto t2 = bound_tree(2);
  CHECK(t2.bound == 0.5);
  CHECK(t2.uninformative);
  const auto t3 = bound_tree(3);
  CHECK(std::abs(t3.tau - 1.0 / 3) < 1e-16);
  CHECK(std::abs(t3.bound - kInvThird) < 1e-13);

  const auto h = bound_tessellation(7, 3);
  CHECK(std::abs(h.tau - std::sqrt(5.0) / 7) < 1e-16);
  CHECK(std::abs(h.bound - kInvHeptagonal) < 1e-13);
  CHECK_THROWS_AS(bound_tessellation(4, 4), std::invalid_argument);
  CHECK(std::abs(bound_tessellation(5, 100000).bound - bound_tree(5).bound) < 1e-4);

  const auto l12 = bound_lattice(1, 2);
  CHECK(std::abs(l12.tau - 0.2) < 1e-16);
  CHECK(std::abs(l12.bound - kInvFifth) < 1e-13);
  const auto l21 = bound_lattice(2, 1);
  CHECK(std::abs(l21.tau - 0.6) < 1e-15);
  CHECK(std::abs(l21.bound - kInvCross) < 1e-13);
  const auto big = bound_lattice(3, 2);
  CHECK(!big.certified);
  CHECK(bounds_csv({big}).find("no certified bound") != std::string::npos);
  double prev = 0;
  for (int R = 1; R <= 9; ++R) {
    const auto r = bound_lattice(1, R);
    CHECK(r.bound > prev);
    prev = r.bound;
  }
}

TEST_CASE("lattice tau agrees with an independent subset count") {
  for (auto [n, R] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    const auto ball = lattice_ball(n, R);
    double best = 1e9;
    for (unsigned m = 1; m < (1u << ball.num_vertices); ++m) {
      int inside = 0, size = 0;
      for (int v = 0; v < ball.num_vertices; ++v) size += m >> v & 1;
      // count edges between coordinates at l1 distance one
      for (int u = 0; u < ball.num_vertices; ++u)
        for (int v = u + 1; v < ball.num_vertices; ++v) {
          if (!((m >> u & 1) && (m >> v & 1))) continue;
          int dist = 0;
          for (int c = 0; c < n; ++c) dist += std::abs(ball.labels[u][c] - ball.labels[v][c]);
          inside += dist == 1;
        }
      best = std::min(best, (2.0 * n * size - 2.0 * inside) / (2.0 * n * size));
    }
    CHECK(std::abs(bound_lattice(n, R).tau - best) < 1e-15);
  }
}

TEST_CASE("bounds CSV formatting") {
  const auto csv = bounds_csv({bound_tree(3)});
  CHECK(csv == "family,params,tau,bound,method\ntree,d=3,0.333333333333,0.459062115138,bisection; tau=(d-2)/d\n");
}
