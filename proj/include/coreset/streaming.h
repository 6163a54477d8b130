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


#ifndef CORESET_STREAMING_H_
#define CORESET_STREAMING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "json.hpp"

#include "coreset/count_min.h"
#include "coreset/l1_sampler.h"
#include "coreset/pipeline.h"
#include "coreset/sampling.h"
#include "coreset/stream.h"

namespace coreset {

// How Pass 1 turns what it saw about a vertex into its sampling score.
enum class ScoreMapping {
  // Probability that the vertex ends up in the output given its degree
  // estimate: 1 - (1 - p_low) (1 - d / D)^r, or 1 for heavy vertices. The
  // reweighting in Pass 2 then matches how the vertex was actually drawn.
  kInclusion,
  // Importance score of the sampler's degree estimate for sampled vertices,
  // the low-score floor for pre-drawn ones, 1 for heavy ones; merged by
  // per-id maximum.
  kImportance,
};

enum class SamplerBackend {
  // Sketch when the stream deletes, exact otherwise.
  kAuto,
  kExact,
  kSketch,
};

absl::StatusOr<ScoreMapping> ParseScoreMapping(absl::string_view name);
const char* ScoreMappingName(ScoreMapping mapping);
absl::StatusOr<SamplerBackend> ParseSamplerBackend(absl::string_view name);
const char* SamplerBackendName(SamplerBackend backend);

struct StreamingParams {
  ImportanceParams importance;
  // Number of l1 samplers is ceil(c_r n / (delta alpha)).
  double c_r = 2.0;
  // CountMin failure probability; sets the depth.
  double delta_fail = 0.01;
  ScoreMapping mapping = ScoreMapping::kInclusion;
  SamplerBackend backend = SamplerBackend::kAuto;
  EdgeSampleOptions pass2{EdgeSampleRule::kLogN, 8.0, 0};
  uint64_t seed = 0;
};

inline constexpr int kMaxCountMinWidth = 1 << 20;

// ceil(c_r n / (delta alpha)), at least 1.
absl::StatusOr<int64_t> NumSamplers(const StreamingParams& params);

// Probability that Pass 1 with the inclusion mapping outputs each vertex
// when every sampler draw and CountMin query is exact: 1 for degrees at or
// above the heavy threshold, else 1 - (1 - p_low) (1 - d_i / D)^r with D the
// degree sum.
absl::StatusOr<std::vector<double>> ExactDegreeInclusion(
    std::span<const double> degrees, const StreamingParams& params);

struct ScoredVertex {
  VertexId id = 0;
  double score = 0.0;
};

struct Pass1Output {
  // Sorted by id, no duplicates, scores in (0, 1].
  std::vector<ScoredVertex> entries;
  int64_t low_count = 0;
  int64_t sampled_count = 0;
  int64_t heavy_count = 0;
  int64_t sampler_failures = 0;
  // Sum of all degree updates: twice the total edge weight.
  double total_mass = 0.0;
};

// Pass 1 state: the pre-drawn low-score set, a CountMin over degrees and r
// l1 samplers over degrees.
class Pass1State {
 public:
  // `backend` must be kExact or kSketch.
  static absl::StatusOr<Pass1State> Create(const StreamingParams& params,
                                           SamplerBackend backend);

  // One degree update per endpoint; deletes subtract.
  absl::Status Feed(const StreamEvent& event);

  Pass1Output Finalize() const;

  int64_t num_samplers() const { return r_; }
  double low_score() const { return low_score_; }
  double heavy_threshold() const { return heavy_threshold_; }
  const std::vector<VertexId>& low_set() const { return low_set_; }
  const CountMinSketch& count_min() const { return cm_; }
  SamplerBackend backend() const { return backend_; }

  // Stored items: low-set entries, CountMin counters and sampler cells (or
  // the exact table's support).
  int64_t StoredItems() const;

 private:
  Pass1State() = default;

  StreamingParams params_;
  SamplerBackend backend_ = SamplerBackend::kExact;
  double low_score_ = 0.0;
  double heavy_threshold_ = 0.0;
  int64_t r_ = 0;
  std::vector<VertexId> low_set_;
  CountMinSketch cm_;
  std::optional<ExactL1Sampler> exact_;
  std::vector<uint64_t> draw_seeds_;
  std::vector<SketchL1Sampler> sketches_;
  double total_mass_ = 0.0;
};

// Pass 2 state: the kept vertex set with scores and the kept reweighted
// edges among them.
class Pass2State {
 public:
  // The rescaled keep rule needs the core-set weight before it is known;
  // it uses the expectation (half of Pass 1's total mass) / delta^2.
  static absl::StatusOr<Pass2State> Create(const StreamingParams& params,
                                           const Pass1Output& pass1,
                                           bool is_signed);

  // Edges with an endpoint outside the kept set are ignored. The keep coin
  // is a hash of the edge, so an edge seen again gets the same decision.
  // Deleting an edge that was never kept is a no-op.
  absl::Status Feed(const StreamEvent& event);

  absl::StatusOr<CoresetGraph> Finalize() const;

  int64_t num_vertices() const { return static_cast<int64_t>(ids_.size()); }
  int64_t num_kept_edges() const {
    return static_cast<int64_t>(kept_.size());
  }
  int64_t peak_kept_edges() const { return peak_kept_; }
  // Stored items: kept vertices plus the peak number of kept edges.
  int64_t StoredItems() const { return num_vertices() + peak_kept_; }

 private:
  struct KeptEdge {
    int32_t u;
    int32_t v;
    double c_plus;
    double c_minus;
  };

  Pass2State() = default;

  StreamingParams params_;
  bool is_signed_ = false;
  std::vector<VertexId> ids_;
  std::vector<double> scores_;
  absl::flat_hash_map<VertexId, int32_t> local_;
  double scale_ = 0.0;
  uint64_t coin_seed_ = 0;
  absl::flat_hash_map<uint64_t, KeptEdge> kept_;
  int64_t peak_kept_ = 0;
};

// Exact average degree of the graph a stream leaves behind, from two
// running sums.
double MeasureAverageDegree(const EdgeStream& stream);

struct StreamReport {
  double value = 0.0;
  SamplerBackend backend = SamplerBackend::kExact;
  int64_t num_samplers = 0;
  int64_t kept_vertices = 0;
  int64_t low_count = 0;
  int64_t sampled_count = 0;
  int64_t heavy_count = 0;
  int64_t sampler_failures = 0;
  int64_t kept_edges = 0;
  int64_t count_min_counters = 0;
  int64_t pass1_items = 0;
  int64_t pass2_items = 0;
  CoresetGraph coreset;
};

// Pass 1, Pass 2 and the solver on the resulting core-set. params.importance
// must carry n and delta.
absl::StatusOr<StreamReport> TwoPassRun(const EdgeStream& stream,
                                        const StreamingParams& params,
                                        const SolveOptions& solve);

nlohmann::ordered_json StreamReportJson(const StreamReport& report);

}  // namespace coreset

#endif  // CORESET_STREAMING_H_
