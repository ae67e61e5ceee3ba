#pragma once

#include <cstdint>
#include <vector>

#include "entex/entropy.hpp"
#include "entex/hypergraph.hpp"

namespace entex {

/// Independent finite seeds Z_i, visibility sets W_i, and for every vertex v a
/// lookup table giving X_v from the seeds that v can see.
///
/// Vertex v's table is indexed by the support indices of its visible seeds in
/// ascending seed order, first seed fastest; a vertex that sees no seed has a
/// one-entry table. Entries are symbol indices into alphabets[v].
struct SeedSystem {
  int num_vertices = 0;
  std::vector<Dist> seeds;
  std::vector<VertexSet> visibility;
  std::vector<std::vector<double>> alphabets;
  std::vector<std::vector<int>> tables;

  /// Throws std::invalid_argument / resource_error on a malformed system.
  void validate() const;

  int num_seeds() const { return static_cast<int>(seeds.size()); }
  /// Seeds i with v in W_i, ascending.
  std::vector<int> visible_seeds(int v) const;
  /// Product of all seed support sizes (checked against kMaxOutcomes).
  std::size_t seed_space_size() const;

  bool operator==(const SeedSystem&) const = default;
};

/// Variable id used for seed i inside joint laws that mix seeds and vertices.
inline int seed_variable_id(const SeedSystem& s, int i) { return s.num_vertices + i; }

/// Exact law of (X_v)_{v in U}; variable ids are the vertex ids.
JointDist joint_law(const SeedSystem& s, const VertexSet& U);

/// Exact law of (X_U, Z_S); seed i appears as seed_variable_id(s, i).
JointDist joint_law_with_seeds(const SeedSystem& s, const VertexSet& U, const std::vector<int>& S);

/// H(X_U | Z_S).
double conditional_entropy_given_seeds(const SeedSystem& s, const VertexSet& U,
                                       const std::vector<int>& S);

/// gains[step][t] = H(X_U | first step seeds) - H(X_U | first step+1 seeds)
/// for U = tracked[t], seeds revealed in `order`.
struct GainProfile {
  std::vector<int> order;
  std::vector<VertexSet> tracked;
  std::vector<std::vector<double>> gains;
};

GainProfile gain_profile(const SeedSystem& s, const std::vector<int>& order,
                         const std::vector<VertexSet>& tracked);

struct AveragedGain {
  std::vector<double> per_seed;   // indexed by seed, not by step
  std::vector<double> std_error;  // zero in exact mode
  bool exact = true;
  std::size_t samples = 0;        // number of orders averaged
};

inline constexpr int kMaxExactSeeds = 8;

/// Information about X_v gained when each seed is revealed, averaged over all
/// m! reveal orders. Throws for m > kMaxExactSeeds.
AveragedGain averaged_gain(const SeedSystem& s, int v);
/// Same average estimated from `samples` uniformly random orders.
AveragedGain averaged_gain_monte_carlo(const SeedSystem& s, int v, std::size_t samples,
                                       std::uint64_t rng_seed);

/// The equality case: seed `seed` carries law `base` and is copied to every
/// vertex of W, every other vertex is constant, every other seed is a point
/// mass. Visibility is kept so the expansion coefficient is unchanged.
SeedSystem sharpness_system(const WeightedHypergraph& h, const std::vector<VertexSet>& visibility,
                            int seed, const VertexSet& W, const Dist& base);

struct RandomSystemShape {
  int num_vertices = 4;
  int num_seeds = 2;
  int max_seed_support = 2;
  int max_alphabet = 2;
  double visibility_prob = 0.5;
  bool real_valued = false;  // random real atoms instead of 0..M-1
};

/// Reproducible pseudo-random system with rational seed laws; every W_i is nonempty.
SeedSystem random_system(const RandomSystemShape& shape, std::uint64_t rng_seed);

}  // namespace entex
