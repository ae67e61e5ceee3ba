#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace entex {

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

/// Absolute tolerance on inequality slack.
inline constexpr double kSlackTolerance = 1e-9;
/// Tolerance on probability normalization.
inline constexpr double kNormTolerance = 1e-12;
/// Largest dense joint table / seed space we are willing to enumerate.
inline constexpr std::size_t kMaxOutcomes = 1'000'000;
/// Largest ground set for exhaustive subset scans.
inline constexpr int kMaxExhaustive = 22;

/// Raised when a computation would exceed one of the size caps.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorts and removes duplicates.
VertexSet make_vertex_set(std::vector<int> v);

bool is_subset(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);

std::string to_string(const VertexSet& s);

/// printf-style "%.12g".
std::string format12(double x);
/// Rounds to 12 significant digits (for display-only output).
double round12(double x);

}  // namespace entex
