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

#ifndef CORESET_EXPERIMENT_H_
#define CORESET_EXPERIMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "json.hpp"

#include "coreset/log_base.h"
#include "coreset/pipeline.h"
#include "coreset/sampling.h"
#include "coreset/stream.h"
#include "coreset/streaming.h"

namespace coreset {

enum class PipelineKind { kOffline, kStreaming };

absl::StatusOr<PipelineKind> ParsePipelineKind(absl::string_view name);
const char* PipelineKindName(PipelineKind kind);

struct ExperimentConfig {
  Problem problem = Problem::kMaxCut;
  int n = 1024;
  double delta_exp = 0.5;
  double epsilon = 0.25;
  double c_const = 0.0072;
  int trials = 3;
  uint64_t rng_seed = 1;
  PipelineKind pipeline = PipelineKind::kOffline;
  SolverKind solver = SolverKind::kLocalSearch;
  // Path prefix for <output>.json, <output>.csv and <output>.timings.csv;
  // empty writes nothing.
  std::string output;
  int restarts = 20;
  // Cluster bound for correlation clustering.
  int k = 2;
  // Sign-flip probability of the planted clustering generator.
  double noise = 0.1;
  double p_factor = 1.0;
  // Edge sampling of the offline core-set and of the streaming second pass.
  EdgeSampleRule edge_rule = EdgeSampleRule::kRescaled;
  EdgeSampleRule pass2_rule = EdgeSampleRule::kLogN;
  StreamOrder stream_order = StreamOrder::kShuffled;
  double c_r = 2.0;
  ScoreMapping mapping = ScoreMapping::kInclusion;
  SamplerBackend backend = SamplerBackend::kAuto;
  LogBase log_base = LogBase::kNatural;
  int threads = 1;
};

// Keys accepted by SetConfigValue, in file order.
const std::vector<std::string>& ConfigKeys();

// Parses `value` into the field named `key`.
absl::Status SetConfigValue(ExperimentConfig& config, absl::string_view key,
                            absl::string_view value);

// Text form of the field named `key`; doubles round-trip exactly.
absl::StatusOr<std::string> GetConfigValue(const ExperimentConfig& config,
                                           absl::string_view key);

absl::Status ValidateConfig(const ExperimentConfig& config);

// Flat "key = value" lines; '#' starts a comment. Unknown keys are errors.
// Fields not mentioned keep the values already in `config`.
absl::Status ParseConfigText(absl::string_view text, ExperimentConfig& config);
std::string FormatConfigText(const ExperimentConfig& config);

struct ExperimentRow {
  int trial = 0;
  uint64_t seed = 0;
  int64_t graph_edges = 0;
  double avg_degree = 0.0;
  int64_t coreset_vertices = 0;
  int64_t coreset_edges = 0;
  double baseline_value = 0.0;
  double pipeline_value = 0.0;
  // pipeline / baseline; 1 when both are 0, NaN when only the baseline is.
  double ratio = 0.0;
  // Offline: core-set vertices plus edges. Streaming: both passes.
  int64_t stored_items = 0;
  int64_t pass1_items = 0;
  int64_t pass2_items = 0;
};

struct TrialTiming {
  int trial = 0;
  double generate_ms = 0.0;
  double baseline_ms = 0.0;
  double pipeline_ms = 0.0;
};

struct ExperimentAggregate {
  int rows = 0;
  double mean_ratio = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  // Rows with |ratio - 1| <= 0.1.
  int within_ten_percent = 0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ExperimentRow> rows;
  std::vector<TrialTiming> timings;
  ExperimentAggregate aggregate;
};

// Seed of trial t: DeriveSeed(rng_seed, t).
uint64_t TrialSeed(uint64_t rng_seed, int trial);

// One input graph per trial, the solver on it and on the pipeline's
// core-set. Trials run on config.threads workers; rows are in trial order.
absl::StatusOr<ExperimentReport> RunExperiment(const ExperimentConfig& config);

ExperimentAggregate ComputeAggregate(const std::vector<ExperimentRow>& rows);

std::string ExperimentRowsCsv(const std::vector<ExperimentRow>& rows);
std::string TimingsCsv(const std::vector<TrialTiming>& timings);
nlohmann::ordered_json ExperimentReportJson(const ExperimentReport& report);

// Writes the JSON report, the rows CSV and the timings CSV next to
// config.output.
absl::Status WriteExperimentReport(const ExperimentReport& report);

}  // namespace coreset

#endif  // CORESET_EXPERIMENT_H_
