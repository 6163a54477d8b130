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


#ifndef CORESET_SOLVERS_H_
#define CORESET_SOLVERS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

#include "coreset/graph.h"

namespace coreset {

// side[i] is 0 or 1.
struct CutSolution {
  std::vector<uint8_t> side;
  double value = 0.0;
};

// label[i] is in [0, k).
struct ClusteringSolution {
  std::vector<int> labels;
  double value = 0.0;
};

// Total weight of edges whose endpoints lie on different sides.
double CutValue(const Graph& g, std::span<const uint8_t> side);

// Exact maximum cut by Gray-code enumeration with vertex 0 fixed to side 0.
// Among optimal cuts the one with the smallest bitmask encoding (bit i =
// side of vertex i) is returned.
absl::StatusOr<CutSolution> MaxCutExact(const Graph& g, int limit = 28);

// Best of `restarts` single-flip hill climbs from random starts. Each climb
// sweeps vertices in id order and flips any vertex whose gain exceeds 1e-12
// until a sweep makes no flip.
CutSolution MaxCutLocalSearch(const Graph& g, int restarts, uint64_t seed);

// True if no single flip improves the cut by more than `tolerance`.
bool IsFlipLocalOptimum(const Graph& g, std::span<const uint8_t> side,
                        double tolerance = 1e-9);

// Agreement score C- + sum_{ij} eta_ij [label_i == label_j].
double CcValue(const SignedGraph& g, std::span<const int> labels);

// Number of labelings of n vertices into at most k clusters up to renaming
// of labels, saturating at INT64_MAX.
int64_t CountCanonicalLabelings(int n, int k);

// Exact maximum agreement over clusterings with at most k clusters. Labels
// are enumerated in canonical form (first occurrences in increasing order)
// and the lexicographically smallest optimal labeling is returned. Fails if
// the number of canonical labelings exceeds `limit`.
absl::StatusOr<ClusteringSolution> CcExact(const SignedGraph& g, int k,
                                           int64_t limit = 2'000'000);

// Best of `restarts` single-vertex relabel climbs from random labelings.
ClusteringSolution CcLocalSearch(const SignedGraph& g, int k, int restarts,
                                 uint64_t seed);

// True if no single relabel improves the score by more than `tolerance`.
bool IsRelabelLocalOptimum(const SignedGraph& g, int k,
                           std::span<const int> labels,
                           double tolerance = 1e-9);

struct KRestrictionResult {
  int k = 0;
  double opt_unrestricted = 0.0;
  double opt_k = 0.0;
  double ratio = 1.0;  // opt_k / opt_unrestricted, 1 when both are 0
};

// Compares the best clustering with at most ceil(1/epsilon) clusters against
// the best clustering with any number of clusters.
absl::StatusOr<KRestrictionResult> KRestrictionCheck(
    const SignedGraph& g, double epsilon, int64_t limit = 2'000'000);

}  // namespace coreset

#endif  // CORESET_SOLVERS_H_
