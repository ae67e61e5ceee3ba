#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

namespace entex::detail {

struct SubsetBest {
  bool found = false;
  double value = 0;
  std::uint64_t mask = 0;
};

/// Lexicographic order of the sorted index lists encoded by two masks.
inline bool lex_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

inline bool ratio_equal(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Candidate order: value, then cardinality, then lexicographic.
inline bool better(double va, std::uint64_t ma, double vb, std::uint64_t mb) {
  if (!ratio_equal(va, vb)) return va < vb;
  const int pa = std::popcount(ma);
  const int pb = std::popcount(mb);
  if (pa != pb) return pa < pb;
  return lex_less(ma, mb);
}

inline void merge_into(SubsetBest& acc, const SubsetBest& c) {
  if (!c.found) return;
  if (!acc.found || better(c.value, c.mask, acc.value, acc.mask)) acc = c;
}

/// Minimizes a ratio over all nonempty subsets of {0..k-1} by Gray-code
/// traversal. `State` supplies add(i), remove(i), ratio(size) for the
/// incrementally maintained value and exact(mask) for a from-scratch value;
/// the exact value decides every comparison, so the witness does not depend
/// on accumulated rounding or on how the range is split across threads.
template <class State>
SubsetBest scan_min_ratio(int k, const State& proto, int jobs = 1) {
  if (k <= 0) return {};
  const std::uint64_t total = std::uint64_t{1} << k;
  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    SubsetBest best;
    State st = proto;
    std::uint64_t mask = begin ^ (begin >> 1);
    for (std::uint64_t m = mask; m; m &= m - 1) st.add(std::countr_zero(m));
    for (std::uint64_t i = begin; i < end; ++i) {
      if (i != begin) {
        const int bit = std::countr_zero(i);
        const std::uint64_t flip = std::uint64_t{1} << bit;
        if (mask & flip)
          st.remove(bit);
        else
          st.add(bit);
        mask ^= flip;
      }
      const double approx = st.ratio(std::popcount(mask));
      if (best.found && approx > best.value + 1e-9 * (1.0 + std::abs(best.value))) continue;
      const double exact = st.exact(mask);
      if (!best.found || better(exact, mask, best.value, best.mask)) best = {true, exact, mask};
    }
    return best;
  };

  const std::uint64_t n_jobs =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total / 4096 + 1));
  if (n_jobs == 1) return run(1, total);

  std::vector<SubsetBest> parts(n_jobs);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (total - 1 + n_jobs - 1) / n_jobs;
  for (std::uint64_t t = 0; t < n_jobs; ++t) {
    const std::uint64_t b = 1 + t * chunk;
    const std::uint64_t e = std::min(total, b + chunk);
    if (b >= e) continue;
    threads.emplace_back([&, t, b, e] { parts[t] = run(b, e); });
  }
  for (auto& th : threads) th.join();
  SubsetBest acc;
  for (const auto& p : parts) merge_into(acc, p);
  return acc;
}

}  // namespace entex::detail
