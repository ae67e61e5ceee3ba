#pragma once

#include <memory>
#include <string>
#include <vector>

namespace entex {

/// A group presented only through right multiplication by generators.
/// Elements are canonical integer vectors, so equal elements compare equal.
class GroupOracle {
 public:
  using Element = std::vector<int>;
  virtual ~GroupOracle() = default;

  virtual Element identity() const = 0;
  virtual int num_generators() const = 0;
  /// Index of the inverse generator.
  virtual int inverse(int generator) const = 0;
  /// g * s_generator.
  virtual Element multiply(const Element& g, int generator) const = 0;
  virtual std::string name() const = 0;
};

/// Z^n with generators +e_i (index 2i) and -e_i (index 2i+1).
class IntegerLatticeGroup final : public GroupOracle {
 public:
  explicit IntegerLatticeGroup(int n);
  Element identity() const override { return Element(n_, 0); }
  int num_generators() const override { return 2 * n_; }
  int inverse(int s) const override { return s ^ 1; }
  Element multiply(const Element& g, int s) const override;
  std::string name() const override;

 private:
  int n_;
};

/// Free group on r letters; a_i has index 2i, its inverse 2i+1. Elements are
/// reduced words of generator indices.
class FreeGroup final : public GroupOracle {
 public:
  explicit FreeGroup(int r);
  Element identity() const override { return {}; }
  int num_generators() const override { return 2 * r_; }
  int inverse(int s) const override { return s ^ 1; }
  Element multiply(const Element& g, int s) const override;
  std::string name() const override;

 private:
  int r_;
};

/// Finite group from a multiplication table table[a][b] = a*b on 0..n-1.
class TableGroup final : public GroupOracle {
 public:
  TableGroup(std::vector<std::vector<int>> table, std::vector<int> generators);
  Element identity() const override { return {identity_}; }
  int num_generators() const override { return static_cast<int>(gens_.size()); }
  int inverse(int s) const override { return inverse_[s]; }
  Element multiply(const Element& g, int s) const override { return {table_[g.at(0)][gens_[s]]}; }
  std::string name() const override;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> gens_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

struct CayleyBound {
  double value = 0;  // best ratio found: an upper bound on the infimum
  std::vector<GroupOracle::Element> witness;
  int ball_radius = 0;        // radius of the best starting ball
  int local_moves = 0;        // improving moves applied after it
  std::vector<double> ball_ratios;  // ratio of B_0, B_1, ... within the budget
};

/// sum_s alpha_s |W u W s| / |W|.
double cayley_ratio(const GroupOracle& group, const std::vector<double>& alpha,
                    const std::vector<GroupOracle::Element>& W);

/// Searches BFS balls around the identity with at most `budget` elements,
/// then greedy add/remove moves, for small values of cayley_ratio. Requires
/// alpha_s = alpha_{s^-1} and alpha >= 0.
CayleyBound cayley_beta_upper(const GroupOracle& group, const std::vector<double>& alpha,
                              int budget);

}  // namespace entex
