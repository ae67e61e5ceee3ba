#include "doctest.h"

#include <cmath>
#include <map>

#include "entex/entropy.hpp"
#include "entex/rng.hpp"

using namespace entex;

namespace {

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
  for (auto& x : t) {
    // some exact zeros so degenerate conditionals get exercised
    x = rng.bernoulli(0.25) ? 0.0 : rng.uniform();
    s += x;
  }
  if (s == 0) {
    t[0] = 1;
    s = 1;
  }
  for (auto& x : t) x /= s;
  return JointDist(vars, t);
}

// H(X|Y) as an average of entropies of the conditional laws.
double conditional_by_averaging(const JointDist& j, int x, int y) {
  const int px = j.position(x), py = j.position(y);
  std::map<std::size_t, std::map<std::size_t, double>> by_y;
  for (std::size_t o = 0; o < j.num_outcomes(); ++o)
    by_y[j.symbol(o, py)][j.symbol(o, px)] += j.table()[o];
  double h = 0;
  for (auto& [ys, row] : by_y) {
    double py_mass = 0;
    for (auto& [xs, p] : row) py_mass += p;
    if (py_mass <= 0) continue;
    double hy = 0;
    for (auto& [xs, p] : row)
      if (p > 0) hy -= (p / py_mass) * std::log(p / py_mass);
    h += py_mass * hy;
  }
  return h;
}

}  // namespace

TEST_CASE("entropy of single distributions") {
  CHECK(entropy(Dist::point_mass(3, 1)) == 0.0);
  CHECK(entropy(Dist({0.5, 0.5})) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  const double q = -0.25 * std::log(0.25) - 0.75 * std::log(0.75);
  CHECK(std::abs(entropy(Dist({0.25, 0.75})) - q) < 1e-15);
  CHECK(std::abs(entropy(Dist({0.25, 0.75})) - 0.5623351446188083) < 1e-15);
}

TEST_CASE("Dist validation") {
  CHECK_THROWS_AS(Dist({0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(Dist({-0.1, 1.1}), std::invalid_argument);
  CHECK_THROWS_AS(Dist(std::vector<double>{}), std::invalid_argument);
  CHECK_NOTHROW(Dist({0.5, 0.5 + 5e-13}));
}

TEST_CASE("marginals") {
  const auto ind = JointDist::product({Dist({0.5, 0.5}), Dist({0.5, 0.5})});
  CHECK(marginal(ind, {0}).to_dist() == Dist({0.5, 0.5}));
  const JointDist same({{0, {0, 1}}, {1, {0, 1}}}, {0.5, 0, 0, 0.5});
  CHECK(marginal(same, {0}).to_dist() == Dist({0.5, 0.5}));
  CHECK(marginal(same, {0, 1}) == same);
  CHECK(marginal(same, {1, 0}) == same);
  CHECK_THROWS_AS(marginal(same, {7}), std::invalid_argument);
  CHECK_THROWS_AS(marginal(same, {}), std::invalid_argument);
}

TEST_CASE("joint and conditional entropy examples") {
  const double l2 = std::log(2.0);
  const auto ind = JointDist::product({Dist({0.5, 0.5}), Dist({0.5, 0.5})});
  CHECK(std::abs(joint_entropy(ind, {0, 1}) - 2 * l2) < 1e-15);
  CHECK(std::abs(conditional_entropy(ind, {0}, {1}) - l2) < 1e-15);
  const JointDist same({{0, {0, 1}}, {1, {0, 1}}}, {0.5, 0, 0, 0.5});
  CHECK(std::abs(joint_entropy(same, {0, 1}) - l2) < 1e-15);
  CHECK(std::abs(conditional_entropy(same, {0}, {1})) < 1e-15);
  CHECK(joint_entropy(same, {}) == 0.0);

  // X uniform on {0,1,2}, Y = X mod 2
  std::vector<double> t(6, 0.0);
  for (int x = 0; x < 3; ++x) t[x + 3 * (x % 2)] = 1.0 / 3;
  const JointDist xy({{0, {0, 1, 2}}, {1, {0, 1}}}, t);
  CHECK(std::abs(joint_entropy(xy, {0, 1}) - std::log(3.0)) < 1e-15);

  // X uniform on 4 symbols, Y its high bit
  std::vector<double> t4(8, 0.0);
  for (int x = 0; x < 4; ++x) t4[x + 4 * (x / 2)] = 0.25;
  const JointDist hb({{0, {0, 1, 2, 3}}, {1, {0, 1}}}, t4);
  CHECK(std::abs(conditional_entropy(hb, {0}, {1}) - l2) < 1e-15);
  CHECK(std::abs(conditional_entropy(hb, {0}, {}) - 2 * l2) < 1e-15);
  CHECK_THROWS_AS(conditional_entropy(hb, {0}, {0}), std::invalid_argument);
}

TEST_CASE("JointDist rejects bad tables") {
  CHECK_THROWS_AS(JointDist({{0, {0, 1}}}, {0.5, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(JointDist({{0, {0, 1}}}, {0.5, 0.25, 0.25}), std::invalid_argument);
  CHECK_THROWS_AS(JointDist({{0, {0, 1}}, {0, {0, 1}}}, {0.25, 0.25, 0.25, 0.25}),
                  std::invalid_argument);
  std::vector<Variable> big;
  for (int i = 0; i < 21; ++i) big.push_back({i, {0, 1}});
  CHECK_THROWS_AS(table_size(big), resource_error);
}

TEST_CASE("pair conditioning examples") {
  // four independent bits
  const auto ind = JointDist::product(std::vector<Dist>(4, Dist({0.5, 0.5})));
  auto r = verify_pair_conditioning(ind, 0, 1, 2, 3);
  CHECK(std::abs(r.lhs) < 1e-15);
  CHECK(std::abs(r.rhs) < 1e-15);
  CHECK(r.pass);

  // X1 = X2 = Y2 a fair bit, Y1 independent
  std::vector<double> t(16, 0.0);
  for (int b = 0; b < 2; ++b)
    for (int y1 = 0; y1 < 2; ++y1) t[b + 2 * b + 4 * y1 + 8 * b] = 0.25;
  const JointDist j({{0, {0, 1}}, {1, {0, 1}}, {2, {0, 1}}, {3, {0, 1}}}, t);
  r = verify_pair_conditioning(j, 0, 1, 2, 3);
  CHECK(std::abs(r.lhs - std::log(2.0)) < 1e-15);
  CHECK(std::abs(r.rhs - std::log(2.0)) < 1e-15);
  CHECK(r.slack >= -kSlackTolerance);
}

TEST_CASE("random joint laws: bounds, submodularity, averaging form, pair conditioning") {
  Rng rng(20240901);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto j = random_joint(rng, 4, 3);
    std::size_t alpha = 1;
    for (const auto& v : j.variables()) alpha *= v.size();
    const double h = entropy(j);
    CHECK(h >= -1e-15);
    CHECK(h <= std::log(static_cast<double>(alpha)) + 1e-12);

    const auto a = verify_pair_conditioning(j, 0, 1, 2, 3);
    CHECK(a.slack >= -kSlackTolerance);
    CHECK(a.pass);

    CHECK(std::abs(conditional_entropy(j, {0}, {1}) - conditional_by_averaging(j, 0, 1)) < 1e-10);
    CHECK(conditional_entropy(j, {0, 2}, {1, 3}) >= -1e-12);

    if (trial % 10 == 0) {
      for (unsigned s = 0; s < 16; ++s)
        for (unsigned t = 0; t < 16; ++t) {
          auto ids = [](unsigned m) {
            std::vector<int> out;
            for (int i = 0; i < 4; ++i)
              if (m >> i & 1) out.push_back(i);
            return out;
          };
          const double lhs = joint_entropy(j, ids(s)) + joint_entropy(j, ids(t));
          const double rhs = joint_entropy(j, ids(s | t)) + joint_entropy(j, ids(s & t));
          CHECK(lhs >= rhs - 1e-12);
          if ((s & t) == s) CHECK(joint_entropy(j, ids(s)) <= joint_entropy(j, ids(t)) + 1e-12);
        }
    }
  }
}
