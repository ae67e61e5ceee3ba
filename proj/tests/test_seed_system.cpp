#include "doctest.h"

#include <cmath>

#include "entex/expansion.hpp"
#include "entex/seed_system.hpp"

using namespace entex;

namespace {

const double kLog2 = std::log(2.0);

// X_0 = Z_0 xor Z_1, X_1 = Z_0, both seeds fair bits.
SeedSystem xor_system() {
  SeedSystem s;
  s.num_vertices = 2;
  s.seeds = {Dist({0.5, 0.5}), Dist({0.5, 0.5})};
  s.visibility = {{0, 1}, {0}};
  s.alphabets = {{0, 1}, {0, 1}};
  s.tables = {{0, 1, 1, 0}, {0, 1}};
  s.validate();
  return s;
}

}  // namespace

TEST_CASE("joint law examples") {
  SeedSystem copy;
  copy.num_vertices = 3;
  copy.seeds = {Dist({0.5, 0.5})};
  copy.visibility = {{0, 1, 2}};
  copy.alphabets = {{0, 1}, {0, 1}, {0, 1}};
  copy.tables = {{0, 1}, {0, 1}, {0, 1}};
  copy.validate();
  const auto j = joint_law(copy, {0, 1, 2});
  CHECK(j.table()[0] == 0.5);
  CHECK(j.table()[7] == 0.5);
  CHECK(std::abs(entropy(j) - kLog2) < 1e-15);

  const auto x = joint_law(xor_system(), {0, 1});
  for (double p : x.table()) CHECK(p == 0.25);
  CHECK_THROWS_AS(joint_law(copy, {}), std::invalid_argument);
}

TEST_CASE("validation") {
  auto s = xor_system();
  s.tables[0].pop_back();
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = xor_system();
  s.visibility[1] = {5};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = xor_system();
  s.tables[1] = {0, 2};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = xor_system();
  s.seeds.assign(21, Dist({0.5, 0.5}));
  s.visibility.assign(21, {0});
  CHECK_THROWS_AS(s.seed_space_size(), resource_error);
}

TEST_CASE("gain profile examples") {
  const auto s = xor_system();
  const auto g = gain_profile(s, {0, 1}, {{0}, {1}, {0, 1}});
  CHECK(std::abs(g.gains[0][0]) < 1e-15);
  CHECK(std::abs(g.gains[1][0] - kLog2) < 1e-15);
  CHECK(std::abs(g.gains[0][1] - kLog2) < 1e-15);
  CHECK(std::abs(g.gains[1][1]) < 1e-15);
  CHECK_THROWS_AS(gain_profile(s, {0, 0}, {{0}}), std::invalid_argument);

  SeedSystem one;
  one.num_vertices = 1;
  one.seeds = {Dist({0.25, 0.75})};
  one.visibility = {{0}};
  one.alphabets = {{0, 1}};
  one.tables = {{0, 1}};
  const auto g1 = gain_profile(one, {0}, {{0}});
  CHECK(std::abs(g1.gains[0][0] - entropy(one.seeds[0])) < 1e-15);
  const auto a1 = averaged_gain(one, 0);
  CHECK(std::abs(a1.per_seed[0] - g1.gains[0][0]) < 1e-15);
}

TEST_CASE("averaged gain") {
  const auto s = xor_system();
  const auto a = averaged_gain(s, 0);
  CHECK(std::abs(a.per_seed[0] - kLog2 / 2) < 1e-15);
  CHECK(std::abs(a.per_seed[1] - kLog2 / 2) < 1e-15);

  // asymmetric: average of the two orders computed by hand
  const auto b = averaged_gain(s, 1);
  const auto o1 = gain_profile(s, {0, 1}, {{1}});
  const auto o2 = gain_profile(s, {1, 0}, {{1}});
  CHECK(std::abs(b.per_seed[0] - (o1.gains[0][0] + o2.gains[1][0]) / 2) < 1e-15);
  CHECK(std::abs(b.per_seed[1] - (o1.gains[1][0] + o2.gains[0][0]) / 2) < 1e-15);

  RandomSystemShape big;
  big.num_seeds = 9;
  big.max_seed_support = 2;
  const auto s9 = random_system(big, 3);
  CHECK_THROWS_AS(averaged_gain(s9, 0), std::invalid_argument);
  const auto mc = averaged_gain_monte_carlo(s9, 0, 400, 11);
  double total = 0;
  for (double x : mc.per_seed) total += x;
  CHECK(std::abs(total - entropy(joint_law(s9, {0}))) < 1e-10);
  CHECK(!mc.exact);
}

TEST_CASE("random systems: telescoping, support, monotonicity, data processing") {
  RandomSystemShape shape;
  shape.num_vertices = 4;
  shape.num_seeds = 3;
  shape.max_seed_support = 3;
  shape.max_alphabet = 3;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto s = random_system(shape, seed);
    CHECK(s == random_system(shape, seed));
    const auto law = joint_law(s, {0, 1, 2, 3});
    double mass = 0;
    for (double p : law.table()) mass += p;
    CHECK(std::abs(mass - 1.0) <= kNormTolerance);
    double hz = 0;
    for (const auto& z : s.seeds) hz += entropy(z);
    CHECK(entropy(law) <= hz + 1e-9);

    if (seed % 5) continue;
    std::vector<int> order{0, 1, 2};
    const std::vector<VertexSet> tracked{{0}, {0, 1}, {0, 1, 2, 3}, {2}, {2, 3}};
    do {
      const auto g = gain_profile(s, order, tracked);
      for (std::size_t t = 0; t < tracked.size(); ++t) {
        double sum = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
          sum += g.gains[i][t];
          CHECK(g.gains[i][t] >= -1e-12);
        }
        CHECK(std::abs(sum - entropy(joint_law(s, tracked[t]))) < 1e-10);
      }
      for (std::size_t i = 0; i < order.size(); ++i) {
        CHECK(g.gains[i][0] <= g.gains[i][1] + 1e-9);
        CHECK(g.gains[i][1] <= g.gains[i][2] + 1e-9);
        CHECK(g.gains[i][3] <= g.gains[i][4] + 1e-9);
        const auto& w = s.visibility[order[i]];
        if (!std::binary_search(w.begin(), w.end(), 0)) CHECK(std::abs(g.gains[i][0]) <= 1e-12);
        if (!std::binary_search(w.begin(), w.end(), 2)) CHECK(std::abs(g.gains[i][3]) <= 1e-12);
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("real-valued random systems keep distinct atoms") {
  RandomSystemShape shape;
  shape.real_valued = true;
  shape.max_alphabet = 3;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = random_system(shape, seed);
    for (const auto& a : s.alphabets)
      for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i] > a[i - 1]);
  }
}

TEST_CASE("sharpness system") {
  const auto tri = SimpleGraph::cycle(3).to_hypergraph();
  const std::vector<VertexSet> vis{{0}, {1}, {2}};
  const Dist base({0.25, 0.75});
  const auto s = sharpness_system(tri, vis, 0, {0}, base);
  double lhs = 0;
  for (const auto& e : tri.edges()) lhs += e.weight * entropy(joint_law(s, e.vertices));
  double rhs = 0;
  for (int v = 0; v < 3; ++v) rhs += entropy(joint_law(s, {v}));
  const double hb = entropy(base);
  CHECK(std::abs(lhs - 2 * hb) < 1e-15);
  CHECK(std::abs(rhs - hb) < 1e-15);
  CHECK(beta(tri, vis).value == 2.0);
  CHECK_THROWS_AS(sharpness_system(tri, vis, 0, {}, base), std::invalid_argument);
  CHECK_THROWS_AS(sharpness_system(tri, vis, 0, {1}, base), std::invalid_argument);
}
