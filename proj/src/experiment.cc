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

#include "coreset/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <thread>
#include <utility>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

#include "coreset/generators.h"
#include "coreset/graph_io.h"
#include "coreset/random.h"

namespace coreset {
namespace {

using Setter =
    std::function<absl::Status(ExperimentConfig&, absl::string_view)>;
using Getter = std::function<std::string(const ExperimentConfig&)>;

struct Field {
  std::string key;
  Setter set;
  Getter get;
};

absl::Status BadValue(absl::string_view key, absl::string_view value) {
  return absl::InvalidArgumentError(
      absl::StrCat("bad value '", value, "' for ", key));
}

template <typename T>
Field IntField(std::string key, T ExperimentConfig::*member) {
  return {key,
          [key, member](ExperimentConfig& c, absl::string_view v) {
            return absl::SimpleAtoi(v, &(c.*member)) ? absl::OkStatus()
                                                     : BadValue(key, v);
          },
          [member](const ExperimentConfig& c) {
            return absl::StrCat(c.*member);
          }};
}

Field DoubleField(std::string key, double ExperimentConfig::*member) {
  return {key,
          [key, member](ExperimentConfig& c, absl::string_view v) {
            return absl::SimpleAtod(v, &(c.*member)) ? absl::OkStatus()
                                                     : BadValue(key, v);
          },
          [member](const ExperimentConfig& c) {
            return FormatDouble(c.*member);
          }};
}

template <typename E, typename Parse, typename Name>
Field EnumField(std::string key, E ExperimentConfig::*member, Parse parse,
                Name name) {
  return {key,
          [member, parse](ExperimentConfig& c, absl::string_view v) {
            auto parsed = parse(v);
            if (!parsed.ok()) return parsed.status();
            c.*member = *parsed;
            return absl::OkStatus();
          },
          [member, name](const ExperimentConfig& c) {
            return std::string(name(c.*member));
          }};
}

const std::vector<Field>& Fields() {
  static const auto* fields = new std::vector<Field>{
      EnumField("problem", &ExperimentConfig::problem, ParseProblem,
                ProblemName),
      IntField("n", &ExperimentConfig::n),
      DoubleField("delta_exp", &ExperimentConfig::delta_exp),
      DoubleField("epsilon", &ExperimentConfig::epsilon),
      DoubleField("c_const", &ExperimentConfig::c_const),
      IntField("trials", &ExperimentConfig::trials),
      IntField("rng_seed", &ExperimentConfig::rng_seed),
      EnumField("pipeline", &ExperimentConfig::pipeline, ParsePipelineKind,
                PipelineKindName),
      EnumField("solver", &ExperimentConfig::solver, ParseSolverKind,
                SolverKindName),
      Field{"output",
            [](ExperimentConfig& c, absl::string_view v) {
              c.output = std::string(v);
              return absl::OkStatus();
            },
            [](const ExperimentConfig& c) { return c.output; }},
      IntField("restarts", &ExperimentConfig::restarts),
      IntField("k", &ExperimentConfig::k),
      DoubleField("noise", &ExperimentConfig::noise),
      DoubleField("p_factor", &ExperimentConfig::p_factor),
      EnumField("edge_rule", &ExperimentConfig::edge_rule, ParseEdgeSampleRule,
                EdgeSampleRuleName),
      EnumField("pass2_rule", &ExperimentConfig::pass2_rule,
                ParseEdgeSampleRule, EdgeSampleRuleName),
      EnumField("stream_order", &ExperimentConfig::stream_order,
                ParseStreamOrder, StreamOrderName),
      DoubleField("c_r", &ExperimentConfig::c_r),
      EnumField("mapping", &ExperimentConfig::mapping, ParseScoreMapping,
                ScoreMappingName),
      EnumField("backend", &ExperimentConfig::backend, ParseSamplerBackend,
                SamplerBackendName),
      EnumField("log_base", &ExperimentConfig::log_base, ParseLogBase,
                [](LogBase b) { return std::string(LogBaseName(b)); }),
      IntField("threads", &ExperimentConfig::threads),
  };
  return *fields;
}

const Field* FindField(absl::string_view key) {
  for (const Field& f : Fields()) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

double Ratio(double pipeline, double baseline) {
  if (baseline == 0.0) {
    return pipeline == 0.0 ? 1.0 : std::numeric_limits<double>::quiet_NaN();
  }
  return pipeline / baseline;
}

double MillisSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

struct TrialOutput {
  ExperimentRow row;
  TrialTiming timing;
};

absl::StatusOr<AnyGraph> GenerateInput(const ExperimentConfig& config,
                                       uint64_t seed) {
  if (config.problem == Problem::kMaxCut) {
    auto g = GenerateRandomGraph(config.n, config.delta_exp, seed);
    if (!g.ok()) return g.status();
    return AnyGraph(*std::move(g));
  }
  auto planted = GeneratePlantedClustering(
      config.n, config.k, config.noise, seed,
      EdgeProbabilityForDensity(config.n, config.delta_exp));
  if (!planted.ok()) return planted.status();
  return AnyGraph(std::move(planted->graph));
}

absl::StatusOr<TrialOutput> RunTrial(const ExperimentConfig& config,
                                     int trial) {
  TrialOutput out;
  const uint64_t seed = TrialSeed(config.rng_seed, trial);
  out.row.trial = trial;
  out.row.seed = seed;
  out.timing.trial = trial;

  auto start = std::chrono::steady_clock::now();
  auto g = GenerateInput(config, DeriveSeed(seed, 0));
  if (!g.ok()) return g.status();
  out.timing.generate_ms = MillisSince(start);
  out.row.graph_edges =
      std::visit([](const auto& x) { return x.num_edges(); }, *g);
  out.row.avg_degree = AvgDegree(*g);

  SolveOptions solve;
  solve.kind = config.solver;
  solve.restarts = config.restarts;
  solve.k = config.k;
  solve.epsilon = config.epsilon;
  solve.seed = DeriveSeed(seed, 3);

  start = std::chrono::steady_clock::now();
  auto baseline = SolveGraph(*g, solve);
  if (!baseline.ok()) return baseline.status();
  out.row.baseline_value = *baseline;
  out.timing.baseline_ms = MillisSince(start);

  ImportanceParams params;
  params.epsilon = config.epsilon;
  params.c_const = config.c_const;
  params.problem = config.problem;
  params.n = config.n;

  start = std::chrono::steady_clock::now();
  if (config.pipeline == PipelineKind::kOffline) {
    OfflineOptions offline;
    offline.params = params;
    offline.p_factor = config.p_factor;
    offline.edge_options = {config.edge_rule, 8.0, 0};
    offline.seed = DeriveSeed(seed, 2);
    auto coreset = BuildOfflineCoreset(*g, offline);
    if (!coreset.ok()) return coreset.status();
    out.row.coreset_vertices = coreset->num_vertices();
    out.row.coreset_edges = coreset->num_edges();
    out.row.stored_items = out.row.coreset_vertices + out.row.coreset_edges;
    if (coreset->num_vertices() > 0) {
      auto value = SolveCoreset(*coreset, solve);
      if (!value.ok()) return value.status();
      out.row.pipeline_value = *value;
    }
  } else {
    const EdgeStream stream = std::visit(
        [&](const auto& x) {
          return ToStream(x, config.stream_order, DeriveSeed(seed, 1));
        },
        *g);
    StreamingParams sp;
    sp.importance = params;
    sp.importance.delta = MeasureAverageDegree(stream);
    sp.c_r = config.c_r;
    sp.mapping = config.mapping;
    sp.backend = config.backend;
    sp.pass2 = {config.pass2_rule, 8.0, 0};
    sp.seed = DeriveSeed(seed, 2);
    auto report = TwoPassRun(stream, sp, solve);
    if (!report.ok()) return report.status();
    out.row.coreset_vertices = report->kept_vertices;
    out.row.coreset_edges = report->kept_edges;
    out.row.pass1_items = report->pass1_items;
    out.row.pass2_items = report->pass2_items;
    out.row.stored_items = report->pass1_items + report->pass2_items;
    out.row.pipeline_value = report->value;
  }
  out.timing.pipeline_ms = MillisSince(start);
  out.row.ratio = Ratio(out.row.pipeline_value, out.row.baseline_value);
  return out;
}

}  // namespace

absl::StatusOr<PipelineKind> ParsePipelineKind(absl::string_view name) {
  if (name == "offline") return PipelineKind::kOffline;
  if (name == "streaming") return PipelineKind::kStreaming;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown pipeline '", name, "' (expected offline or streaming)"));
}

const char* PipelineKindName(PipelineKind kind) {
  return kind == PipelineKind::kOffline ? "offline" : "streaming";
}

const std::vector<std::string>& ConfigKeys() {
  static const auto* keys = [] {
    auto* k = new std::vector<std::string>;
    for (const Field& f : Fields()) k->push_back(f.key);
    return k;
  }();
  return *keys;
}

absl::Status SetConfigValue(ExperimentConfig& config, absl::string_view key,
                            absl::string_view value) {
  const Field* field = FindField(key);
  if (field == nullptr) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown config key '", key, "'"));
  }
  return field->set(config, value);
}

absl::StatusOr<std::string> GetConfigValue(const ExperimentConfig& config,
                                           absl::string_view key) {
  const Field* field = FindField(key);
  if (field == nullptr) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown config key '", key, "'"));
  }
  return field->get(config);
}

absl::Status ValidateConfig(const ExperimentConfig& c) {
  auto range = [](bool ok, absl::string_view what) {
    return ok ? absl::OkStatus()
              : absl::OutOfRangeError(absl::StrCat(what, " out of range"));
  };
  for (absl::Status s : {
           range(c.n >= 2 && c.n <= (1 << 24), "n (2 .. 2^24)"),
           range(c.delta_exp > 0.0 && c.delta_exp <= 1.0, "delta_exp (0, 1]"),
           range(c.epsilon > 0.0 && c.epsilon < 1.0, "epsilon (0, 1)"),
           range(c.c_const > 0.0 && std::isfinite(c.c_const), "c_const > 0"),
           range(c.trials >= 1 && c.trials <= 1'000'000, "trials (1 .. 1e6)"),
           range(c.restarts >= 1, "restarts >= 1"),
           range(c.k >= 1 && c.k <= c.n, "k (1 .. n)"),
           range(c.noise >= 0.0 && c.noise <= 1.0, "noise [0, 1]"),
           range(c.p_factor > 0.0 && std::isfinite(c.p_factor),
                 "p_factor > 0"),
           range(c.c_r > 0.0 && std::isfinite(c.c_r), "c_r > 0"),
           range(c.threads >= 1 && c.threads <= 256, "threads (1 .. 256)"),
       }) {
    if (!s.ok()) return s;
  }
  return absl::OkStatus();
}

absl::Status ParseConfigText(absl::string_view text, ExperimentConfig& config) {
  int number = 0;
  for (absl::string_view raw : absl::StrSplit(text, '\n')) {
    ++number;
    if (const size_t hash = raw.find('#'); hash != absl::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    raw = absl::StripAsciiWhitespace(raw);
    if (raw.empty()) continue;
    const size_t eq = raw.find('=');
    if (eq == absl::string_view::npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("config line ", number, ": expected key = value"));
    }
    const absl::string_view key = absl::StripAsciiWhitespace(raw.substr(0, eq));
    const absl::string_view value =
        absl::StripAsciiWhitespace(raw.substr(eq + 1));
    if (auto s = SetConfigValue(config, key, value); !s.ok()) {
      return absl::Status(s.code(), absl::StrCat("config line ", number, ": ",
                                                 s.message()));
    }
  }
  return absl::OkStatus();
}

std::string FormatConfigText(const ExperimentConfig& config) {
  std::string out;
  for (const Field& f : Fields()) {
    absl::StrAppend(&out, f.key, " = ", f.get(config), "\n");
  }
  return out;
}

uint64_t TrialSeed(uint64_t rng_seed, int trial) {
  return DeriveSeed(rng_seed, static_cast<uint64_t>(trial));
}

absl::StatusOr<ExperimentReport> RunExperiment(const ExperimentConfig& config) {
  if (auto s = ValidateConfig(config); !s.ok()) return s;
  ScopedLogBase log_base(config.log_base);

  std::vector<std::optional<absl::StatusOr<TrialOutput>>> results(
      config.trials);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < config.trials; t = next++) {
      results[t] = RunTrial(config, t);
    }
  };
  const int workers = std::min(config.threads, config.trials);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  ExperimentReport report;
  report.config = config;
  for (int t = 0; t < config.trials; ++t) {
    absl::StatusOr<TrialOutput>& r = *results[t];
    if (!r.ok()) {
      return absl::Status(r.status().code(),
                          absl::StrCat("trial ", t, ": ", r.status().message()));
    }
    report.rows.push_back(r->row);
    report.timings.push_back(r->timing);
  }
  report.aggregate = ComputeAggregate(report.rows);
  return report;
}

ExperimentAggregate ComputeAggregate(const std::vector<ExperimentRow>& rows) {
  ExperimentAggregate a;
  a.rows = static_cast<int>(rows.size());
  if (rows.empty()) return a;
  double sum = 0.0;
  a.min_ratio = std::numeric_limits<double>::infinity();
  a.max_ratio = -std::numeric_limits<double>::infinity();
  for (const ExperimentRow& r : rows) {
    sum += r.ratio;
    a.min_ratio = std::min(a.min_ratio, r.ratio);
    a.max_ratio = std::max(a.max_ratio, r.ratio);
    a.within_ten_percent += std::abs(r.ratio - 1.0) <= 0.1;
  }
  a.mean_ratio = sum / rows.size();
  return a;
}

std::string ExperimentRowsCsv(const std::vector<ExperimentRow>& rows) {
  std::string out =
      "trial,seed,graph_edges,avg_degree,coreset_vertices,coreset_edges,"
      "baseline_value,pipeline_value,ratio,stored_items,pass1_items,"
      "pass2_items\n";
  for (const ExperimentRow& r : rows) {
    absl::StrAppend(&out, r.trial, ",", r.seed, ",", r.graph_edges, ",",
                    FormatDouble(r.avg_degree), ",", r.coreset_vertices, ",",
                    r.coreset_edges, ",", FormatDouble(r.baseline_value), ",",
                    FormatDouble(r.pipeline_value), ",", FormatDouble(r.ratio),
                    ",", r.stored_items, ",", r.pass1_items, ",",
                    r.pass2_items, "\n");
  }
  return out;
}

std::string TimingsCsv(const std::vector<TrialTiming>& timings) {
  std::string out = "trial,generate_ms,baseline_ms,pipeline_ms\n";
  for (const TrialTiming& t : timings) {
    absl::StrAppend(&out, t.trial, ",", absl::StrFormat("%.3f", t.generate_ms),
                    ",", absl::StrFormat("%.3f", t.baseline_ms), ",",
                    absl::StrFormat("%.3f", t.pipeline_ms), "\n");
  }
  return out;
}

nlohmann::ordered_json ExperimentReportJson(const ExperimentReport& report) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json config;
  for (const Field& f : Fields()) config[f.key] = f.get(report.config);
  j["config"] = config;
  j["rows"] = nlohmann::ordered_json::array();
  for (const ExperimentRow& r : report.rows) {
    nlohmann::ordered_json row;
    row["trial"] = r.trial;
    row["seed"] = r.seed;
    row["graph_edges"] = r.graph_edges;
    row["avg_degree"] = r.avg_degree;
    row["coreset_vertices"] = r.coreset_vertices;
    row["coreset_edges"] = r.coreset_edges;
    row["baseline_value"] = r.baseline_value;
    row["pipeline_value"] = r.pipeline_value;
    row["ratio"] = r.ratio;
    row["stored_items"] = r.stored_items;
    row["pass1_items"] = r.pass1_items;
    row["pass2_items"] = r.pass2_items;
    j["rows"].push_back(row);
  }
  const ExperimentAggregate& a = report.aggregate;
  j["aggregate"] = {{"rows", a.rows},
                    {"mean_ratio", a.mean_ratio},
                    {"min_ratio", a.min_ratio},
                    {"max_ratio", a.max_ratio},
                    {"within_ten_percent", a.within_ten_percent}};
  j["timings"] = nlohmann::ordered_json::array();
  for (const TrialTiming& t : report.timings) {
    j["timings"].push_back({{"trial", t.trial},
                            {"generate_ms", t.generate_ms},
                            {"baseline_ms", t.baseline_ms},
                            {"pipeline_ms", t.pipeline_ms}});
  }
  return j;
}

absl::Status WriteExperimentReport(const ExperimentReport& report) {
  const std::string& prefix = report.config.output;
  if (prefix.empty()) return absl::OkStatus();
  if (auto s = WriteStringToFile(ExperimentReportJson(report).dump(2) + "\n",
                                 prefix + ".json");
      !s.ok()) {
    return s;
  }
  if (auto s = WriteStringToFile(ExperimentRowsCsv(report.rows),
                                 prefix + ".csv");
      !s.ok()) {
    return s;
  }
  return WriteStringToFile(TimingsCsv(report.timings),
                           prefix + ".timings.csv");
}

}  // namespace coreset
