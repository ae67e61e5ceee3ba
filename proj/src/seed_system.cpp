#include "entex/seed_system.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "entex/rng.hpp"

namespace entex {

void SeedSystem::validate() const {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  if (visibility.size() != seeds.size())
    throw std::invalid_argument("need one visibility set per seed");
  for (std::size_t i = 0; i < visibility.size(); ++i) {
    const auto& w = visibility[i];
    if (!std::is_sorted(w.begin(), w.end()) || std::adjacent_find(w.begin(), w.end()) != w.end())
      throw std::invalid_argument("visibility set " + std::to_string(i) + " not sorted/unique");
    if (!w.empty() && (w.front() < 0 || w.back() >= num_vertices))
      throw std::invalid_argument("visibility set " + std::to_string(i) + " not inside V");
  }
  if (alphabets.size() != static_cast<std::size_t>(num_vertices) ||
      tables.size() != static_cast<std::size_t>(num_vertices))
    throw std::invalid_argument("need one alphabet and one table per vertex");
  seed_space_size();
  for (int v = 0; v < num_vertices; ++v) {
    if (alphabets[v].empty()) throw std::invalid_argument("vertex with empty output alphabet");
    std::size_t rows = 1;
    for (int i : visible_seeds(v)) rows *= seeds[i].size();
    if (tables[v].size() != rows)
      throw std::invalid_argument("table of vertex " + std::to_string(v) + " has " +
                                  std::to_string(tables[v].size()) + " rows, expected " +
                                  std::to_string(rows));
    for (int sym : tables[v])
      if (sym < 0 || sym >= static_cast<int>(alphabets[v].size()))
        throw std::invalid_argument("table of vertex " + std::to_string(v) +
                                    " maps to a symbol outside its alphabet");
  }
}

std::vector<int> SeedSystem::visible_seeds(int v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < visibility.size(); ++i)
    if (std::binary_search(visibility[i].begin(), visibility[i].end(), v))
      out.push_back(static_cast<int>(i));
  return out;
}

std::size_t SeedSystem::seed_space_size() const {
  std::size_t n = 1;
  for (const auto& z : seeds) {
    if (n > kMaxOutcomes / z.size())
      throw resource_error("seed space exceeds the cap of " + std::to_string(kMaxOutcomes) +
                           " joint assignments");
    n *= z.size();
  }
  return n;
}

namespace {

/// Walks every seed assignment; calls visit(weight, assignment).
template <class Visit>
void for_each_assignment(const SeedSystem& s, Visit&& visit) {
  const std::size_t total = s.seed_space_size();
  const int m = s.num_seeds();
  std::vector<int> a(m, 0);
  for (std::size_t k = 0; k < total; ++k) {
    double w = 1.0;
    for (int i = 0; i < m; ++i) w *= s.seeds[i].prob(a[i]);
    if (w > 0) visit(w, a);
    for (int i = 0; i < m; ++i) {
      if (++a[i] < static_cast<int>(s.seeds[i].size())) break;
      a[i] = 0;
    }
  }
}

struct VertexEval {
  std::vector<std::vector<int>> visible;
  std::vector<std::vector<std::size_t>> radix;

  explicit VertexEval(const SeedSystem& s) : visible(s.num_vertices), radix(s.num_vertices) {
    for (int v = 0; v < s.num_vertices; ++v) {
      visible[v] = s.visible_seeds(v);
      std::size_t r = 1;
      for (int i : visible[v]) {
        radix[v].push_back(r);
        r *= s.seeds[i].size();
      }
    }
  }
  int operator()(const SeedSystem& s, int v, const std::vector<int>& a) const {
    std::size_t row = 0;
    for (std::size_t t = 0; t < visible[v].size(); ++t) row += a[visible[v][t]] * radix[v][t];
    return s.tables[v][row];
  }
};

}  // namespace

JointDist joint_law_with_seeds(const SeedSystem& s, const VertexSet& U, const std::vector<int>& S) {
  std::vector<Variable> vars;
  for (int v : U) {
    if (v < 0 || v >= s.num_vertices) throw std::invalid_argument("vertex outside V");
    vars.push_back({v, s.alphabets[v]});
  }
  for (int i : S) {
    if (i < 0 || i >= s.num_seeds()) throw std::invalid_argument("seed index out of range");
    const auto sup = s.seeds[i].support();
    vars.push_back({seed_variable_id(s, i), {sup.begin(), sup.end()}});
  }
  if (vars.empty()) throw std::invalid_argument("joint law of nothing");
  std::vector<double> table(table_size(vars), 0.0);
  std::vector<std::size_t> stride(vars.size());
  std::size_t st = 1;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    stride[k] = st;
    st *= vars[k].size();
  }
  const VertexEval eval(s);
  for_each_assignment(s, [&](double w, const std::vector<int>& a) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < U.size(); ++k) idx += eval(s, U[k], a) * stride[k];
    for (std::size_t k = 0; k < S.size(); ++k) idx += a[S[k]] * stride[U.size() + k];
    table[idx] += w;
  });
  return JointDist::from_trusted(std::move(vars), std::move(table));
}

JointDist joint_law(const SeedSystem& s, const VertexSet& U) {
  if (U.empty()) throw std::invalid_argument("joint law over an empty vertex set");
  return joint_law_with_seeds(s, U, {});
}

double conditional_entropy_given_seeds(const SeedSystem& s, const VertexSet& U,
                                       const std::vector<int>& S) {
  if (U.empty()) return 0.0;
  if (S.empty()) return entropy(joint_law(s, U));
  const auto j = joint_law_with_seeds(s, U, S);
  std::vector<int> seed_ids;
  for (int i : S) seed_ids.push_back(seed_variable_id(s, i));
  return entropy(j) - joint_entropy(j, seed_ids);
}

GainProfile gain_profile(const SeedSystem& s, const std::vector<int>& order,
                         const std::vector<VertexSet>& tracked) {
  const int m = s.num_seeds();
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(m);
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) throw std::invalid_argument("reveal order is not a permutation of the seeds");
  }
  GainProfile g{order, tracked, std::vector<std::vector<double>>(m, std::vector<double>(tracked.size()))};
  for (std::size_t t = 0; t < tracked.size(); ++t) {
    std::vector<int> revealed;
    double prev = conditional_entropy_given_seeds(s, tracked[t], revealed);
    for (int step = 0; step < m; ++step) {
      revealed.push_back(order[step]);
      const double cur = conditional_entropy_given_seeds(s, tracked[t], revealed);
      g.gains[step][t] = prev - cur;
      prev = cur;
    }
  }
  return g;
}

namespace {

/// H(X_v | Z_S) for every subset S of seeds, memoized by bitmask.
class SubsetEntropyCache {
 public:
  SubsetEntropyCache(const SeedSystem& s, int v) : s_(s), v_(v) {}
  double operator()(std::uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    std::vector<int> S;
    for (int i = 0; i < s_.num_seeds(); ++i)
      if (mask >> i & 1) S.push_back(i);
    const double h = conditional_entropy_given_seeds(s_, {v_}, S);
    memo_.emplace(mask, h);
    return h;
  }

 private:
  const SeedSystem& s_;
  int v_;
  std::map<std::uint32_t, double> memo_;
};

}  // namespace

AveragedGain averaged_gain(const SeedSystem& s, int v) {
  const int m = s.num_seeds();
  if (m > kMaxExactSeeds)
    throw std::invalid_argument("exact averaging over all orders is limited to " +
                                std::to_string(kMaxExactSeeds) +
                                " seeds; use the Monte-Carlo mode");
  if (v < 0 || v >= s.num_vertices) throw std::invalid_argument("vertex outside V");
  SubsetEntropyCache cache(s, v);
  AveragedGain out;
  out.per_seed.assign(m, 0.0);
  out.std_error.assign(m, 0.0);
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    std::uint32_t mask = 0;
    double prev = cache(0);
    for (int i : perm) {
      mask |= 1u << i;
      const double cur = cache(mask);
      out.per_seed[i] += prev - cur;
      prev = cur;
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto& x : out.per_seed) x /= static_cast<double>(count);
  out.samples = count;
  return out;
}

AveragedGain averaged_gain_monte_carlo(const SeedSystem& s, int v, std::size_t samples,
                                       std::uint64_t rng_seed) {
  const int m = s.num_seeds();
  if (m > 31) throw std::invalid_argument("too many seeds for the subset cache");
  if (samples < 2) throw std::invalid_argument("need at least two sampled orders");
  if (v < 0 || v >= s.num_vertices) throw std::invalid_argument("vertex outside V");
  SubsetEntropyCache cache(s, v);
  Rng rng(rng_seed);
  std::vector<double> sum(m, 0.0), sum_sq(m, 0.0);
  std::vector<int> perm(m);
  for (std::size_t k = 0; k < samples; ++k) {
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = m - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
    std::uint32_t mask = 0;
    double prev = cache(0);
    for (int i : perm) {
      mask |= 1u << i;
      const double cur = cache(mask);
      sum[i] += prev - cur;
      sum_sq[i] += (prev - cur) * (prev - cur);
      prev = cur;
    }
  }
  AveragedGain out;
  out.exact = false;
  out.samples = samples;
  const double n = static_cast<double>(samples);
  for (int i = 0; i < m; ++i) {
    const double mean = sum[i] / n;
    const double var = std::max(0.0, (sum_sq[i] - n * mean * mean) / (n - 1));
    out.per_seed.push_back(mean);
    out.std_error.push_back(std::sqrt(var / n));
  }
  return out;
}

SeedSystem sharpness_system(const WeightedHypergraph& h, const std::vector<VertexSet>& visibility,
                            int seed, const VertexSet& W, const Dist& base) {
  if (W.empty()) throw std::invalid_argument("sharpness construction needs a nonempty set W");
  if (seed < 0 || seed >= static_cast<int>(visibility.size()))
    throw std::invalid_argument("seed index out of range");
  const VertexSet w = make_vertex_set(W);
  if (!is_subset(w, make_vertex_set(visibility[seed])))
    throw std::invalid_argument("W must lie inside the visibility set of the chosen seed");

  SeedSystem s;
  s.num_vertices = h.num_vertices();
  for (std::size_t i = 0; i < visibility.size(); ++i) {
    s.seeds.push_back(static_cast<int>(i) == seed ? base : Dist::point_mass(1, 0));
    s.visibility.push_back(make_vertex_set(visibility[i]));
  }
  const auto sup = base.support();
  for (int v = 0; v < s.num_vertices; ++v) {
    const auto vis = s.visible_seeds(v);
    std::size_t rows = 1;
    std::size_t seed_radix = 0;
    bool sees = false;
    for (int i : vis) {
      if (i == seed) {
        seed_radix = rows;
        sees = true;
      }
      rows *= s.seeds[i].size();
    }
    if (std::binary_search(w.begin(), w.end(), v)) {
      s.alphabets.emplace_back(sup.begin(), sup.end());
      std::vector<int> t(rows);
      for (std::size_t r = 0; r < rows; ++r)
        t[r] = sees ? static_cast<int>((r / seed_radix) % base.size()) : 0;
      s.tables.push_back(std::move(t));
    } else {
      s.alphabets.push_back({0.0});
      s.tables.emplace_back(rows, 0);
    }
  }
  s.validate();
  return s;
}

SeedSystem random_system(const RandomSystemShape& shape, std::uint64_t rng_seed) {
  if (shape.num_vertices < 1 || shape.num_seeds < 1 || shape.max_seed_support < 1 ||
      shape.max_alphabet < 1)
    throw std::invalid_argument("random system shape must be positive");
  Rng rng(rng_seed);
  SeedSystem s;
  s.num_vertices = shape.num_vertices;
  for (int i = 0; i < shape.num_seeds; ++i) {
    const int k = rng.uniform_int(1, shape.max_seed_support);
    std::vector<double> w(k);
    double total = 0;
    for (auto& x : w) total += (x = rng.uniform_int(1, 9));
    for (auto& x : w) x /= total;
    std::vector<double> sup(k);
    std::iota(sup.begin(), sup.end(), 0.0);
    s.seeds.emplace_back(std::move(sup), std::move(w));
    VertexSet vis;
    for (int v = 0; v < shape.num_vertices; ++v)
      if (rng.bernoulli(shape.visibility_prob)) vis.push_back(v);
    if (vis.empty()) vis.push_back(rng.uniform_int(0, shape.num_vertices - 1));
    s.visibility.push_back(std::move(vis));
  }
  for (int v = 0; v < shape.num_vertices; ++v) {
    const int m_v = rng.uniform_int(1, shape.max_alphabet);
    std::vector<double> atoms(m_v);
    for (int a = 0; a < m_v; ++a)
      atoms[a] = shape.real_valued ? a - 1.0 + std::round(rng.uniform() * 32.0) / 64.0 : a;
    s.alphabets.push_back(std::move(atoms));
    std::size_t rows = 1;
    for (int i : s.visible_seeds(v)) rows *= s.seeds[i].size();
    std::vector<int> t(rows);
    for (auto& x : t) x = rng.uniform_int(0, m_v - 1);
    s.tables.push_back(std::move(t));
  }
  s.validate();
  return s;
}

}  // namespace entex
