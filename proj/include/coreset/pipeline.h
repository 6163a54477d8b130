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


#ifndef CORESET_PIPELINE_H_
#define CORESET_PIPELINE_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

#include "coreset/estimate.h"
#include "coreset/graph.h"
#include "coreset/sampling.h"

namespace coreset {

enum class SolverKind { kExact, kLocalSearch, kEst };

absl::StatusOr<SolverKind> ParseSolverKind(absl::string_view name);
const char* SolverKindName(SolverKind kind);

struct SolveOptions {
  SolverKind kind = SolverKind::kLocalSearch;
  int restarts = 20;
  // Cluster bound for correlation clustering.
  int k = 2;
  EstimateMode est_mode = EstimateMode::Exhaustive();
  // Accuracy parameter behind the seed probabilities of the estimator.
  double epsilon = 0.25;
  uint64_t seed = 0;
};

struct Solution {
  double value = 0.0;
  // Side (0/1) or cluster label per vertex; empty for the estimator, which
  // reports a value only.
  std::vector<int> assignment;
};

absl::StatusOr<Solution> SolveGraphWithAssignment(const AnyGraph& g,
                                                  const SolveOptions& options);

// MaxCut value of a plain graph or agreement score of a signed graph. The
// estimator draws its seed with the uniform probabilities for the graph.
absl::StatusOr<double> SolveGraph(const AnyGraph& g,
                                  const SolveOptions& options);

// Value of a core-set scaled back to the input: delta^2 times the value of
// the reweighted graph. The estimator uses the core-set seed probabilities.
absl::StatusOr<double> SolveCoreset(const CoresetGraph& coreset,
                                    const SolveOptions& options);

struct OfflineOptions {
  ImportanceParams params;
  // Vertex probabilities are min(1, p_factor * h_i).
  double p_factor = 1.0;
  bool edge_sample = true;
  EdgeSampleOptions edge_options;
  uint64_t seed = 0;
};

// Importance scores, vertex sampling and optional edge sampling. params.n
// and params.delta are filled from the graph when zero.
absl::StatusOr<CoresetGraph> BuildOfflineCoreset(const AnyGraph& g,
                                                 OfflineOptions options);

}  // namespace coreset

#endif  // CORESET_PIPELINE_H_
