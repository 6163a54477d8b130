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

#ifndef CORESET_GENERATORS_H_
#define CORESET_GENERATORS_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"

#include "coreset/graph.h"

namespace coreset {

// Edge probability for which G(n, p) has expected average degree n^delta_exp,
// clamped to 1.
double EdgeProbabilityForDensity(int n, double delta_exp);

// Erdos-Renyi G(n, p) with unit weights and p = EdgeProbabilityForDensity.
// Deterministic given the seed. Requires n >= 2 and delta_exp in (0, 1].
absl::StatusOr<Graph> GenerateRandomGraph(int n, double delta_exp,
                                          uint64_t seed);

// G(n, p) for an explicit p in [0, 1].
absl::StatusOr<Graph> GenerateGnp(int n, double p, uint64_t seed);

struct PlantedClustering {
  SignedGraph graph;
  std::vector<int> labels;  // ground-truth cluster of every vertex
};

// Planted k-clustering. Every vertex pair present in the graph (all pairs
// when density = 1) is an agreement edge (c+ = 1) inside a cluster and a
// disagreement edge (c- = 1) across clusters; each sign is then flipped
// independently with probability `noise`. Cluster labels are balanced
// (sizes differ by at most one) and randomly permuted over vertices.
absl::StatusOr<PlantedClustering> GeneratePlantedClustering(
    int n, int k, double noise, uint64_t seed, double density = 1.0);

}  // namespace coreset

#endif  // CORESET_GENERATORS_H_
