#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entex/expansion.hpp"
#include "entex/seed_system.hpp"
#include "entex/serialize.hpp"

namespace entex {

/// lhs >= coefficient * rhs_base, with the witness of the coefficient.
struct VerificationReport {
  std::string theorem;
  double lhs = 0;
  double coefficient = 0;
  double rhs_base = 0;
  double slack = 0;  // lhs - coefficient * rhs_base
  int witness_seed = -1;
  VertexSet witness_set;
  std::vector<std::pair<int, int>> witness_edges;
  bool pass = false;
  std::string notes;
};

Json to_json(const VerificationReport& r);

/// Sum_U alpha_U H(X_U) >= beta Sum_v H(X_v).
VerificationReport verify_weighted(const SeedSystem& s, const WeightedHypergraph& h, int jobs = 1);

/// Unit-weight edges of a regular graph; beta from the regular-graph formula,
/// cross-checked against the closure form.
VerificationReport verify_regular_edge(const SeedSystem& s, const SimpleGraph& g, int jobs = 1);

/// Sum_U alpha_U H(X_U) >= lambda H(X_V) for an arbitrary joint law whose
/// variable ids are the vertices 0..n-1.
VerificationReport verify_shearer(const JointDist& j, const WeightedHypergraph& h);
VerificationReport verify_shearer(const SeedSystem& s, const WeightedHypergraph& h);

/// Sum_v H(X_{v + N(v)}) >= beta Sum_e H(X_e).
VerificationReport verify_star_edge(const SeedSystem& s, const SimpleGraph& g, int jobs = 1);

/// Random distinct subsets with weights in {0, 1/2, ..., 3}.
WeightedHypergraph random_hypergraph(int n, int max_edges, std::uint64_t rng_seed);
/// Random d-regular simple graph by the pairing model with rejection.
SimpleGraph random_regular_graph(int n, int d, std::uint64_t rng_seed);
/// Erdos-Renyi G(n, p).
SimpleGraph random_graph(int n, double p, std::uint64_t rng_seed);

struct FuzzConfig {
  RandomSystemShape shape{5, 3, 3, 3, 0.5, false};
  int max_edges = 6;
  std::size_t count = 500;
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct FuzzRow {
  std::size_t instance = 0;
  std::string theorem;
  double slack = 0;
  bool pass = true;
};

struct FuzzFailure {
  std::size_t instance = 0;
  std::string theorem;
  double slack = 0;
  Json reproducer;  // system plus the graph or hypergraph
};

struct FuzzSummary {
  std::vector<FuzzRow> rows;
  std::vector<std::pair<std::string, double>> min_slack;  // per theorem
  std::vector<FuzzFailure> failures;
};

/// Runs the four verifiers on `count` random instances. Instance k uses the
/// stream derive_seed(seed, k), so the summary does not depend on jobs.
FuzzSummary fuzz(const FuzzConfig& config);

std::string fuzz_csv(const FuzzSummary& s);

}  // namespace entex
