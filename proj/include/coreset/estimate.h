// Copyright 2026 The Coreset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef CORESET_ESTIMATE_H_
#define CORESET_ESTIMATE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"

#include "coreset/graph.h"
#include "coreset/sampling.h"

namespace coreset {

// Seed vertices in increasing id order, with the inclusion probabilities of
// every vertex of the view.
struct SeedSet {
  std::vector<VertexId> ids;
  std::vector<double> gamma;
};

// Includes vertex i independently with probability gamma[i], one draw per
// vertex in id order.
absl::StatusOr<SeedSet> DrawSeed(std::span<const double> gamma, uint64_t seed);

// rho_i = sum over neighbors j of i that are seed members labeled 1 of
// w_ij / gamma_j. `labels` has one entry per seed member.
absl::StatusOr<std::vector<double>> RhoFromPartition(
    const Graph& view, const SeedSet& seed, std::span<const int> labels);

// rho_il = sum over neighbors j of i that are seed members labeled l of
// eta_ij / gamma_j. Returned n-by-k, row-major.
absl::StatusOr<std::vector<double>> RhoFromLabeling(const SignedGraph& view,
                                                    const SeedSet& seed,
                                                    std::span<const int> labels,
                                                    int k);

struct EstimateMode {
  enum Kind { kExhaustive, kSampled };
  Kind kind = kExhaustive;
  // Number of random partitions drawn in sampled mode.
  int64_t samples = 0;

  static EstimateMode Exhaustive() { return {kExhaustive, 0}; }
  static EstimateMode Sampled(int64_t t) { return {kSampled, t}; }
};

inline constexpr int kMaxExhaustiveMaxCutSeed = 22;
inline constexpr int64_t kMaxExhaustiveLabelings = 2'000'000;

struct EstimateResult {
  double value = 0.0;
  // Labels of the seed members (in seed order) of the best partition.
  std::vector<int> best_partition;
  int64_t partitions_evaluated = 0;
  EstimateMode mode;
  SeedSet seed;
  uint64_t rng_seed = 0;
};

// value, labeling of the seed, seed ids, counts, RNG seed and mode.
nlohmann::ordered_json EstimateResultJson(const EstimateResult& result);

// Draws a seed with gamma and returns the best optimum of the linearized
// max-cut program over partitions of the seed. Partitions keep the first
// seed member on side 0. Ties go to the lexicographically smallest label
// vector. Sampled mode draws partitions uniformly from the same space and
// evaluates the distinct ones.
absl::StatusOr<EstimateResult> EstimateMaxCut(const Graph& view,
                                              std::span<const double> gamma,
                                              uint64_t rng_seed,
                                              EstimateMode mode);

// Same over labelings of the seed with at most k labels, enumerated up to
// renaming of labels (first occurrences in increasing order).
absl::StatusOr<EstimateResult> EstimateCc(const SignedGraph& view,
                                          std::span<const double> gamma, int k,
                                          uint64_t rng_seed, EstimateMode mode);

// Uniform seed probability min(1, 16 log n / (eps^2 delta)).
std::vector<double> GammaOriginal(int n, double epsilon, double delta);

// Seed probabilities for a core-set: min(1, 16 log n / (eps^2 delta p_i)),
// where n and delta describe the input graph.
std::vector<double> GammaCoreset(const CoresetGraph& coreset, double epsilon,
                                 double delta, int n);

struct ConditionReport {
  bool holds = true;
  // First violating edge in edge order; (-1, -1) when the condition holds.
  VertexId u = -1;
  VertexId v = -1;
  // Largest w_ij / bound_ij over all edges.
  double worst_ratio = 0.0;
};

// Evaluates w_ij <= W eps^2 / (8 k^2 log n) * gamma_i gamma_j / sum gamma
// on every edge, with |eta| as the weight of signed edges. log_n = 0 uses the
// vertex count of the view.
ConditionReport CheckCondition(const AnyGraph& view,
                               std::span<const double> gamma, double epsilon,
                               int k = 1, int log_n = 0);

}  // namespace coreset

#endif  // CORESET_ESTIMATE_H_
