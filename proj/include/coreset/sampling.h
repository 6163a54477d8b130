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


#ifndef CORESET_SAMPLING_H_
#define CORESET_SAMPLING_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#include "coreset/graph.h"

namespace coreset {

enum class Problem { kMaxCut, kCorrelationClustering };

absl::StatusOr<Problem> ParseProblem(absl::string_view name);
const char* ProblemName(Problem problem);

// Parameters of the importance score
//   h_i = min{1, max{d_i, eps * delta / floor_divisor} / (delta^2 alpha)}
// with alpha = eps^4 / (C log n) for max cut and eps^8 / (C log n) for
// correlation clustering.
struct ImportanceParams {
  double epsilon = 0.25;
  double c_const = 1.0;
  Problem problem = Problem::kMaxCut;
  int n = 0;
  double delta = 0.0;
  // 1 uses eps * delta as the degree floor; k uses eps * delta / k.
  double floor_divisor = 1.0;

  double alpha() const;
  // delta^2 * alpha: the degree at which the score saturates at 1.
  double saturation_degree() const { return delta * delta * alpha(); }
};

absl::Status ValidateImportanceParams(const ImportanceParams& params);

double ImportanceScore(double degree, const ImportanceParams& params);

// Scores of every vertex of g.
std::vector<double> ImportanceScores(const AnyGraph& g,
                                     const ImportanceParams& params);

// min(1, factor * h_i). factor in [1, 2] stays inside the admissible band.
std::vector<double> ScaleProbabilities(std::span<const double> scores,
                                       double factor);

// Fails unless h_i <= p_i <= min(1, 2 h_i) for every i (with slack 1e-12).
absl::Status CheckProbabilityBand(std::span<const double> p,
                                  std::span<const double> scores);

// A vertex-sampled, reweighted subgraph. Vertex i of `graph` is vertex
// original_ids[i] of the input and was kept with probability p[i].
struct CoresetGraph {
  int original_n = 0;
  double delta = 0.0;
  std::vector<VertexId> original_ids;
  std::vector<double> p;
  AnyGraph graph;

  // Recorded for the metadata sidecar.
  double epsilon = 0.0;
  double c_const = 0.0;
  uint64_t seed = 0;
  bool edge_sampled = false;

  int num_vertices() const { return static_cast<int>(original_ids.size()); }
  int64_t num_edges() const;
  bool is_signed() const { return graph.index() == 1; }
  // Sum of |edge weight|.
  double total_weight() const;
};

enum class BandCheck { kChecked, kUnchecked };

// Keeps vertex i with probability p[i] (one uniform draw per vertex in id
// order) and weights each induced edge by w_ij / (p_i p_j delta^2); signed
// edges scale c+ and c- alike. With BandCheck::kChecked, p must lie in the
// band of the importance scores for `params`.
absl::StatusOr<CoresetGraph> VertexSample(const AnyGraph& g,
                                          std::span<const double> p,
                                          const ImportanceParams& params,
                                          uint64_t seed,
                                          BandCheck check = BandCheck::kChecked);

// Checks that every edge of a vertex-sampled core-set carries
// original weight / (p_u p_v delta^2) within `tolerance` (relative).
absl::Status ValidateVertexSampleWeights(const CoresetGraph& coreset,
                                         const AnyGraph& original,
                                         double tolerance = 1e-9);

enum class EdgeSampleRule {
  // Rescale weights to sum to |S'|, keep with min(1, constant * w / eps^2),
  // then undo the rescale.
  kRescaled,
  // Keep with min(1, w * log(n) / eps^2) on the raw weights.
  kLogN,
};

struct EdgeSampleOptions {
  EdgeSampleRule rule = EdgeSampleRule::kRescaled;
  double constant = 8.0;
  // n inside log(n) for kLogN; 0 uses coreset.original_n.
  int log_n = 0;
};

// "rescaled" or "logn".
absl::StatusOr<EdgeSampleRule> ParseEdgeSampleRule(absl::string_view name);
const char* EdgeSampleRuleName(EdgeSampleRule rule);

// Keep probability of an edge of weight w under `options`. `scale` is the
// rescaling factor |S'| / W for kRescaled and ignored otherwise.
double EdgeKeepProbability(double w, double epsilon, double scale,
                           const EdgeSampleOptions& options, int log_n);

// Keeps every edge independently (one draw per edge in edge order) and
// reweights kept edges by 1 / p_e, so the expected total weight is
// unchanged.
absl::StatusOr<CoresetGraph> EdgeSample(const CoresetGraph& coreset,
                                        double epsilon, uint64_t seed,
                                        const EdgeSampleOptions& options = {});

// JSON sidecar: ids, probabilities, delta, epsilon, seed.
std::string CoresetMetadataJson(const CoresetGraph& coreset);

// Writes the graph as an edge list to `path` and the sidecar to
// `path` + ".json".
absl::Status WriteCoreset(const CoresetGraph& coreset, const std::string& path);

// --- Nested pair sampling ---------------------------------------------------

enum class PStarForm {
  // Pr[v in S' | v not in S] under strategy A: (p - q) / (1 - q).
  kConditional,
  // (p - q) / (1 - p).
  kAsStated,
};

// Probability that strategy B puts v into S' when v is not in S. Returns 1
// when p = 1. Requires 0 <= q <= p <= 1.
absl::StatusOr<double> PStar(double p, double q,
                             PStarForm form = PStarForm::kConditional);

enum class PairStrategy {
  // S' first with p, then S inside S' with q / p.
  kA,
  // S first with q, then S' \ S with p*.
  kB,
};

struct PairSample {
  std::vector<VertexId> s;
  std::vector<VertexId> s_prime;
};

absl::StatusOr<PairSample> DoubleSample(
    PairStrategy strategy, std::span<const double> p,
    std::span<const double> q, uint64_t seed,
    PStarForm form = PStarForm::kConditional);

// Joint law of (S, S') keyed by (mask of S, mask of S'); bit v is vertex v.
// Outcomes of probability zero are omitted.
using PairTable = std::map<std::pair<uint32_t, uint32_t>, double>;

inline constexpr int kMaxPairTableVertices = 12;

absl::StatusOr<PairTable> PairDistributionExact(
    PairStrategy strategy, std::span<const double> p,
    std::span<const double> q, PStarForm form = PStarForm::kConditional);

// Largest entrywise difference, treating absent keys as zero.
double MaxAbsDifference(const PairTable& a, const PairTable& b);

}  // namespace coreset

#endif  // CORESET_SAMPLING_H_
