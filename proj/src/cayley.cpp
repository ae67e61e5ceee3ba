#include "entex/cayley.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "entex/common.hpp"

namespace entex {

IntegerLatticeGroup::IntegerLatticeGroup(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("lattice rank must be >= 1");
}

GroupOracle::Element IntegerLatticeGroup::multiply(const Element& g, int s) const {
  Element h = g;
  h.at(s / 2) += (s % 2 == 0) ? 1 : -1;
  return h;
}

std::string IntegerLatticeGroup::name() const { return "Z^" + std::to_string(n_); }

FreeGroup::FreeGroup(int r) : r_(r) {
  if (r < 1) throw std::invalid_argument("free group rank must be >= 1");
}

GroupOracle::Element FreeGroup::multiply(const Element& g, int s) const {
  if (s < 0 || s >= 2 * r_) throw std::invalid_argument("generator out of range");
  Element h = g;
  if (!h.empty() && h.back() == (s ^ 1))
    h.pop_back();
  else
    h.push_back(s);
  return h;
}

std::string FreeGroup::name() const { return "F_" + std::to_string(r_); }

TableGroup::TableGroup(std::vector<std::vector<int>> table, std::vector<int> generators)
    : table_(std::move(table)), gens_(std::move(generators)) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw std::invalid_argument("empty group table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw std::invalid_argument("group table entry out of range");
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("group table has no identity");
  for (int s : gens_) {
    if (s < 0 || s >= n) throw std::invalid_argument("generator out of range");
    int inv = -1;
    for (std::size_t t = 0; t < gens_.size(); ++t)
      if (table_[s][gens_[t]] == identity_) inv = static_cast<int>(t);
    if (inv < 0) throw std::invalid_argument("generating set is not symmetric");
    inverse_.push_back(inv);
  }
}

std::string TableGroup::name() const { return "table group of order " + std::to_string(table_.size()); }

double cayley_ratio(const GroupOracle& group, const std::vector<double>& alpha,
                    const std::vector<GroupOracle::Element>& W) {
  if (W.empty()) throw std::invalid_argument("W must be nonempty");
  const std::set<GroupOracle::Element> in(W.begin(), W.end());
  double total = 0;
  for (int s = 0; s < group.num_generators(); ++s) {
    if (alpha[s] == 0) continue;
    std::size_t fresh = 0;
    for (const auto& g : in)
      if (!in.count(group.multiply(g, s))) ++fresh;
    total += alpha[s] * static_cast<double>(in.size() + fresh);
  }
  return total / static_cast<double>(in.size());
}

namespace {

using Element = GroupOracle::Element;

/// Running counts for the ratio under single-element insertions/removals.
class CayleySearch {
 public:
  CayleySearch(const GroupOracle& g, const std::vector<double>& alpha) : g_(g), alpha_(alpha) {}

  double ratio(const std::set<Element>& W) const {
    return cayley_ratio(g_, alpha_, std::vector<Element>(W.begin(), W.end()));
  }

  /// Elements adjacent to W but outside it, in sorted order.
  std::set<Element> outer_boundary(const std::set<Element>& W) const {
    std::set<Element> out;
    for (const auto& x : W)
      for (int s = 0; s < g_.num_generators(); ++s) {
        auto y = g_.multiply(x, s);
        if (!W.count(y)) out.insert(std::move(y));
      }
    return out;
  }

 private:
  const GroupOracle& g_;
  const std::vector<double>& alpha_;
};

bool improves(double candidate, double current) {
  return candidate < current - 1e-12 * std::max(1.0, std::abs(current));
}

}  // namespace

CayleyBound cayley_beta_upper(const GroupOracle& group, const std::vector<double>& alpha,
                              int budget) {
  const int k = group.num_generators();
  if (static_cast<int>(alpha.size()) != k)
    throw std::invalid_argument("need one weight per generator");
  for (int s = 0; s < k; ++s) {
    if (!(alpha[s] >= 0)) throw std::invalid_argument("generator weights must be nonnegative");
    if (alpha[s] != alpha[group.inverse(s)])
      throw std::invalid_argument("weights must be symmetric: alpha_s = alpha_{s^-1}");
  }
  if (budget < 1) throw std::invalid_argument("search budget must be >= 1");
  if (static_cast<std::size_t>(budget) > kMaxOutcomes) throw resource_error("search budget too large");

  CayleySearch search(group, alpha);
  CayleyBound out;
  std::set<Element> ball{group.identity()};
  std::set<Element> best_set = ball;
  double best = search.ratio(ball);
  out.ball_ratios.push_back(best);
  for (int r = 1;; ++r) {
    auto grown = ball;
    for (auto& y : search.outer_boundary(ball)) grown.insert(y);
    if (grown.size() == ball.size() || static_cast<int>(grown.size()) > budget) break;
    ball = std::move(grown);
    const double v = search.ratio(ball);
    out.ball_ratios.push_back(v);
    if (improves(v, best)) {
      best = v;
      best_set = ball;
      out.ball_radius = r;
    }
  }

  // First improving move in sorted order: removals, then additions.
  for (int iter = 0; iter < 4 * budget; ++iter) {
    bool moved = false;
    if (best_set.size() > 1) {
      for (const auto& x : best_set) {
        auto trial = best_set;
        trial.erase(x);
        const double v = search.ratio(trial);
        if (improves(v, best)) {
          best = v;
          best_set = std::move(trial);
          moved = true;
          break;
        }
      }
    }
    if (!moved && static_cast<int>(best_set.size()) < budget) {
      for (const auto& y : search.outer_boundary(best_set)) {
        auto trial = best_set;
        trial.insert(y);
        const double v = search.ratio(trial);
        if (improves(v, best)) {
          best = v;
          best_set = std::move(trial);
          moved = true;
          break;
        }
      }
    }
    if (!moved) break;
    ++out.local_moves;
  }
  out.value = best;
  out.witness.assign(best_set.begin(), best_set.end());
  return out;
}

}  // namespace entex
