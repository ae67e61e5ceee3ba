#include "entex/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entex {
namespace {

void check_probs(std::span<const double> probs) {
  if (probs.empty()) throw std::invalid_argument("distribution has an empty alphabet");
  double total = 0;
  for (double p : probs) {
    if (!(p >= 0)) throw std::invalid_argument("negative or NaN probability");
    total += p;
  }
  if (std::abs(total - 1.0) > kNormTolerance)
    throw std::invalid_argument("probabilities sum to " + format12(total) + ", not 1");
}

std::vector<double> iota_support(std::size_t n) {
  std::vector<double> s(n);
  std::iota(s.begin(), s.end(), 0.0);
  return s;
}

}  // namespace

Dist::Dist(std::vector<double> probs) : probs_(std::move(probs)) {
  support_ = iota_support(probs_.size());
  check_probs(probs_);
}

Dist::Dist(std::vector<double> support, std::vector<double> probs)
    : support_(std::move(support)), probs_(std::move(probs)) {
  if (support_.size() != probs_.size())
    throw std::invalid_argument("support and probability vectors differ in length");
  check_probs(probs_);
}

Dist Dist::point_mass(std::size_t size, std::size_t at) {
  std::vector<double> p(size, 0.0);
  p.at(at) = 1.0;
  return Dist(std::move(p));
}

Dist Dist::uniform(std::size_t size) {
  return Dist(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

std::size_t table_size(const std::vector<Variable>& vars) {
  std::size_t n = 1;
  for (const auto& v : vars) {
    if (v.size() == 0) throw std::invalid_argument("variable with empty alphabet");
    if (n > kMaxOutcomes / v.size())
      throw resource_error("joint table exceeds the cap of " + std::to_string(kMaxOutcomes) +
                           " outcomes");
    n *= v.size();
  }
  return n;
}

JointDist::JointDist(std::vector<Variable> vars, std::vector<double> table)
    : JointDist(std::move(vars), std::move(table), true) {}

JointDist JointDist::from_trusted(std::vector<Variable> vars, std::vector<double> table) {
  return JointDist(std::move(vars), std::move(table), false);
}

JointDist::JointDist(std::vector<Variable> vars, std::vector<double> table, bool check)
    : vars_(std::move(vars)), table_(std::move(table)) {
  for (std::size_t a = 0; a < vars_.size(); ++a)
    for (std::size_t b = a + 1; b < vars_.size(); ++b)
      if (vars_[a].id == vars_[b].id)
        throw std::invalid_argument("duplicate variable id " + std::to_string(vars_[a].id));
  const std::size_t n = table_size(vars_);
  if (table_.size() != n)
    throw std::invalid_argument("joint table has " + std::to_string(table_.size()) +
                                " entries, expected " + std::to_string(n));
  strides_.resize(vars_.size());
  std::size_t stride = 1;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    strides_[k] = stride;
    stride *= vars_[k].size();
  }
  if (check) check_probs(table_);
}

JointDist JointDist::product(const std::vector<Dist>& marginals) {
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < marginals.size(); ++i) {
    const auto s = marginals[i].support();
    vars.push_back({static_cast<int>(i), {s.begin(), s.end()}});
  }
  std::vector<double> table(table_size(vars), 1.0);
  std::size_t stride = 1;
  for (const auto& m : marginals) {
    for (std::size_t idx = 0; idx < table.size(); ++idx) table[idx] *= m.prob((idx / stride) % m.size());
    stride *= m.size();
  }
  return from_trusted(std::move(vars), std::move(table));
}

int JointDist::position(int id) const {
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (vars_[k].id == id) return static_cast<int>(k);
  return -1;
}

Dist JointDist::to_dist() const {
  if (vars_.size() != 1) throw std::invalid_argument("to_dist needs exactly one variable");
  return Dist(vars_[0].support, table_);
}

double entropy(std::span<const double> probs) {
  double h = 0;
  for (double p : probs)
    if (p > 0) h -= p * std::log(p);
  return h;
}

double entropy(const Dist& d) { return entropy(d.probs()); }
double entropy(const JointDist& j) { return entropy(j.table()); }

JointDist marginal(const JointDist& j, const std::vector<int>& ids) {
  if (ids.empty()) throw std::invalid_argument("marginal over an empty variable set");
  std::vector<std::size_t> keep;
  for (int id : ids) {
    const int pos = j.position(id);
    if (pos < 0) throw std::invalid_argument("unknown variable id " + std::to_string(id));
    keep.push_back(static_cast<std::size_t>(pos));
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.size() == j.variables().size()) return j;

  std::vector<Variable> vars;
  for (auto k : keep) vars.push_back(j.variables()[k]);
  std::vector<double> out(table_size(vars), 0.0);
  std::vector<std::size_t> out_strides(keep.size());
  std::size_t stride = 1;
  for (std::size_t t = 0; t < keep.size(); ++t) {
    out_strides[t] = stride;
    stride *= vars[t].size();
  }
  const auto table = j.table();
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    if (table[idx] == 0) continue;
    std::size_t o = 0;
    for (std::size_t t = 0; t < keep.size(); ++t) o += j.symbol(idx, keep[t]) * out_strides[t];
    out[o] += table[idx];
  }
  return JointDist::from_trusted(std::move(vars), std::move(out));
}

double joint_entropy(const JointDist& j, const std::vector<int>& ids) {
  if (ids.empty()) return 0.0;
  return entropy(marginal(j, ids));
}

double conditional_entropy(const JointDist& j, const std::vector<int>& target,
                           const std::vector<int>& given) {
  for (int t : target)
    if (std::find(given.begin(), given.end(), t) != given.end())
      throw std::invalid_argument("target and conditioning sets overlap at variable " +
                                  std::to_string(t));
  std::vector<int> both = target;
  both.insert(both.end(), given.begin(), given.end());
  return joint_entropy(j, both) - joint_entropy(j, given);
}

PairConditioningReport verify_pair_conditioning(const JointDist& j, int x1, int x2, int y1, int y2) {
  const std::vector<int> ids{x1, x2, y1, y2};
  if (make_vertex_set(ids).size() != 4)
    throw std::invalid_argument("pair conditioning check needs four distinct variables");
  PairConditioningReport r;
  r.lhs = conditional_entropy(j, {x1, x2}, {y1}) - conditional_entropy(j, {x1, x2}, {y1, y2});
  r.rhs = conditional_entropy(j, {x1}, {y1}) - conditional_entropy(j, {x1}, {y1, y2});
  r.slack = r.lhs - r.rhs;
  r.pass = r.slack >= -kSlackTolerance;
  return r;
}

}  // namespace entex
