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

#include "coreset/generators.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

#include "coreset/random.h"

namespace coreset {
namespace {

// Enumerates the pairs (u, v), u < v, of G(n, p) by geometric skipping over
// the row-major order of the strict upper triangle.
template <typename Fn>
void ForEachGnpPair(int n, double p, Rng& rng, Fn fn) {
  if (p <= 0.0 || n < 2) return;
  if (p >= 1.0) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) fn(u, v);
    }
    return;
  }
  const double log_q = std::log1p(-p);
  int64_t u = 0;
  int64_t v = 0;  // candidate position is (u, u + 1 + v)
  while (u < n - 1) {
    const double r = 1.0 - rng.Uniform();  // (0, 1]
    v += static_cast<int64_t>(std::floor(std::log(r) / log_q));
    while (u < n - 1 && v >= n - 1 - u) {
      v -= n - 1 - u;
      ++u;
    }
    if (u < n - 1) {
      fn(static_cast<VertexId>(u), static_cast<VertexId>(u + 1 + v));
      ++v;
    }
  }
}

}  // namespace

double EdgeProbabilityForDensity(int n, double delta_exp) {
  if (n < 2) return 0.0;
  return std::min(1.0, std::pow(static_cast<double>(n), delta_exp) / (n - 1));
}

absl::StatusOr<Graph> GenerateGnp(int n, double p, uint64_t seed) {
  if (n < 0) return absl::InvalidArgumentError("negative vertex count");
  if (!(p >= 0.0 && p <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("edge probability ", p, " outside [0, 1]"));
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  ForEachGnpPair(n, p, rng,
                 [&](VertexId u, VertexId v) { edges.push_back({u, v, 1.0}); });
  return Graph::Create(n, std::move(edges));
}

absl::StatusOr<Graph> GenerateRandomGraph(int n, double delta_exp,
                                          uint64_t seed) {
  if (n < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("need at least 2 vertices, got ", n));
  }
  if (!(delta_exp > 0.0 && delta_exp <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("density exponent ", delta_exp, " outside (0, 1]"));
  }
  return GenerateGnp(n, EdgeProbabilityForDensity(n, delta_exp), seed);
}

absl::StatusOr<PlantedClustering> GeneratePlantedClustering(
    int n, int k, double noise, uint64_t seed, double density) {
  if (k < 1 || k > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("cluster count ", k, " outside [1, ", n, "]"));
  }
  if (!(noise >= 0.0 && noise <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("noise ", noise, " outside [0, 1]"));
  }
  if (!(density >= 0.0 && density <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("density ", density, " outside [0, 1]"));
  }
  Rng rng(seed);
  PlantedClustering out;
  out.labels.resize(n);
  for (int i = 0; i < n; ++i) out.labels[i] = i % k;
  for (int i = n - 1; i > 0; --i) {
    std::swap(out.labels[i], out.labels[rng.UniformInt(i + 1)]);
  }

  Rng pair_rng(DeriveSeed(seed, 1));
  Rng noise_rng(DeriveSeed(seed, 2));
  std::vector<SignedEdge> edges;
  ForEachGnpPair(n, density, pair_rng, [&](VertexId u, VertexId v) {
    bool agree = out.labels[u] == out.labels[v];
    if (noise > 0.0 && noise_rng.Bernoulli(noise)) agree = !agree;
    edges.push_back({u, v, agree ? 1.0 : 0.0, agree ? 0.0 : 1.0});
  });
  auto graph = SignedGraph::Create(n, std::move(edges));
  if (!graph.ok()) return graph.status();
  out.graph = *std::move(graph);
  return out;
}

}  // namespace coreset
