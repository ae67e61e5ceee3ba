#pragma once

#include <span>
#include <vector>

#include "entex/common.hpp"

namespace entex {

/// Finite distribution over an explicit alphabet. Symbols are the indices
/// 0..size()-1; `support` attaches a real value to each symbol (used by the
/// moment-based uncertainty functions, ignored by entropy).
class Dist {
 public:
  explicit Dist(std::vector<double> probs);
  Dist(std::vector<double> support, std::vector<double> probs);

  static Dist point_mass(std::size_t size, std::size_t at);
  static Dist uniform(std::size_t size);

  std::size_t size() const { return probs_.size(); }
  std::span<const double> probs() const { return probs_; }
  std::span<const double> support() const { return support_; }
  double prob(std::size_t i) const { return probs_[i]; }

  bool operator==(const Dist&) const = default;

 private:
  std::vector<double> support_;
  std::vector<double> probs_;
};

/// One coordinate of a joint distribution.
struct Variable {
  int id = 0;
  std::vector<double> support;  // one real value per symbol

  std::size_t size() const { return support.size(); }
  bool operator==(const Variable&) const = default;
};

/// Dense joint table over an ordered list of variables. The first variable
/// varies fastest in the flattened table.
class JointDist {
 public:
  JointDist(std::vector<Variable> vars, std::vector<double> table);

  /// Skips the normalization check; for tables produced by exact summation.
  static JointDist from_trusted(std::vector<Variable> vars, std::vector<double> table);
  /// Independent product of the given marginals, with ids 0..n-1.
  static JointDist product(const std::vector<Dist>& marginals);

  const std::vector<Variable>& variables() const { return vars_; }
  std::span<const double> table() const { return table_; }
  std::size_t num_outcomes() const { return table_.size(); }
  const std::vector<std::size_t>& strides() const { return strides_; }

  /// Position of `id` in variables(), or -1.
  int position(int id) const;
  bool has_variable(int id) const { return position(id) >= 0; }
  /// Symbol of variable at `pos` in flattened outcome `index`.
  std::size_t symbol(std::size_t index, std::size_t pos) const {
    return (index / strides_[pos]) % vars_[pos].size();
  }

  Dist to_dist() const;  // requires a single variable

  bool operator==(const JointDist&) const = default;

 private:
  JointDist(std::vector<Variable> vars, std::vector<double> table, bool check);

  std::vector<Variable> vars_;
  std::vector<std::size_t> strides_;
  std::vector<double> table_;
};

/// Checked product of alphabet sizes; throws resource_error above kMaxOutcomes.
std::size_t table_size(const std::vector<Variable>& vars);

/// Shannon entropy in nats, 0 log 0 = 0.
double entropy(std::span<const double> probs);
double entropy(const Dist& d);
double entropy(const JointDist& j);

/// Sums out every variable not in `ids`. Result keeps the order of `j`.
JointDist marginal(const JointDist& j, const std::vector<int>& ids);

/// H(X_ids); 0 for the empty set.
double joint_entropy(const JointDist& j, const std::vector<int>& ids);

/// H(target | given) = H(target, given) - H(given).
double conditional_entropy(const JointDist& j, const std::vector<int>& target,
                           const std::vector<int>& given);

struct PairConditioningReport {
  double lhs = 0;
  double rhs = 0;
  double slack = 0;
  bool pass = false;
};

/// Information gained about (X1,X2) by additionally conditioning on Y2 is at
/// least the information gained about X1 alone.
PairConditioningReport verify_pair_conditioning(const JointDist& j, int x1, int x2, int y1, int y2);

}  // namespace entex
