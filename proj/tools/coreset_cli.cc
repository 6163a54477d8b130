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

// Command-line front end. Exit codes: 0 ok, 1 internal error, 2 bad
// configuration or arguments, 3 I/O error, 4 verification failure.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"

#include "coreset/estimate.h"
#include "coreset/experiment.h"
#include "coreset/generators.h"
#include "coreset/graph_io.h"
#include "coreset/log_base.h"
#include "coreset/pipeline.h"
#include "coreset/sampling.h"
#include "coreset/stream.h"
#include "coreset/streaming.h"
#include "coreset/verify.h"

namespace coreset {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitVerify = 4;

// A status with the exit code it maps to.
struct Failure {
  int code;
  absl::Status status;
};

int ExitCodeFor(const absl::Status& s) {
  switch (s.code()) {
    case absl::StatusCode::kOk:
      return kExitOk;
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kOutOfRange:
    case absl::StatusCode::kFailedPrecondition:
    case absl::StatusCode::kResourceExhausted:
      return kExitConfig;
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kUnavailable:
    case absl::StatusCode::kPermissionDenied:
    case absl::StatusCode::kDataLoss:
      return kExitIo;
    default:
      return kExitInternal;
  }
}

int Report(const absl::Status& s) {
  if (s.ok()) return kExitOk;
  std::cerr << "error: " << s.message() << "\n";
  return ExitCodeFor(s);
}

// Failures while loading an input file are I/O errors whatever their cause.
int ReportInput(const absl::Status& s) {
  std::cerr << "error: " << s.message() << "\n";
  return kExitIo;
}

void PrintJson(const nlohmann::ordered_json& j) {
  std::cout << j.dump(2) << "\n";
}

void PrintSeed(const char* what, uint64_t seed) {
  std::cerr << what << " seed: " << seed << "\n";
}

struct GenerateArgs {
  std::string problem = "maxcut";
  int n = 64;
  double delta_exp = 0.5;
  double p = -1.0;
  int k = 2;
  double noise = 0.1;
  uint64_t seed = 1;
  std::string out;
  std::string stream_out;
  std::string order = "shuffled";
};

int RunGenerate(const GenerateArgs& a) {
  auto problem = ParseProblem(a.problem);
  if (!problem.ok()) return Report(problem.status());
  auto order = ParseStreamOrder(a.order);
  if (!order.ok()) return Report(order.status());
  PrintSeed("generate", a.seed);
  absl::StatusOr<AnyGraph> g;
  if (*problem == Problem::kMaxCut) {
    auto plain = a.p >= 0.0 ? GenerateGnp(a.n, a.p, a.seed)
                            : GenerateRandomGraph(a.n, a.delta_exp, a.seed);
    if (!plain.ok()) return Report(plain.status());
    g = AnyGraph(*std::move(plain));
  } else {
    const double density =
        a.p >= 0.0 ? a.p : EdgeProbabilityForDensity(a.n, a.delta_exp);
    auto planted = GeneratePlantedClustering(a.n, a.k, a.noise, a.seed, density);
    if (!planted.ok()) return Report(planted.status());
    g = AnyGraph(std::move(planted->graph));
  }
  if (!a.out.empty()) {
    absl::Status s = std::visit(
        [&](const auto& x) { return WriteEdgeList(x, a.out); }, *g);
    if (!s.ok()) return Report(s);
  }
  if (!a.stream_out.empty()) {
    const EdgeStream stream = std::visit(
        [&](const auto& x) { return ToStream(x, *order, a.seed); }, *g);
    if (auto s = WriteStreamFile(stream, a.stream_out); !s.ok()) {
      return Report(s);
    }
  }
  nlohmann::ordered_json j;
  j["problem"] = ProblemName(*problem);
  j["n"] = a.n;
  j["edges"] = std::visit([](const auto& x) { return x.num_edges(); }, *g);
  j["avg_degree"] = AvgDegree(*g);
  j["seed"] = a.seed;
  PrintJson(j);
  return kExitOk;
}

struct CoresetArgs {
  std::string in;
  std::string out;
  std::string problem = "maxcut";
  double epsilon = 0.25;
  double c_const = 0.0072;
  double p_factor = 1.0;
  bool no_edge_sample = false;
  std::string edge_rule = "rescaled";
  uint64_t seed = 1;
  std::string log_base = "natural";
};

int RunCoreset(const CoresetArgs& a) {
  auto g = ReadEdgeList(a.in);
  if (!g.ok()) return ReportInput(g.status());
  auto problem = ParseProblem(a.problem);
  if (!problem.ok()) return Report(problem.status());
  auto rule = ParseEdgeSampleRule(a.edge_rule);
  if (!rule.ok()) return Report(rule.status());
  auto base = ParseLogBase(a.log_base);
  if (!base.ok()) return Report(base.status());
  ScopedLogBase scoped(*base);
  PrintSeed("coreset", a.seed);
  OfflineOptions options;
  options.params.epsilon = a.epsilon;
  options.params.c_const = a.c_const;
  options.params.problem = *problem;
  options.p_factor = a.p_factor;
  options.edge_sample = !a.no_edge_sample;
  options.edge_options.rule = *rule;
  options.seed = a.seed;
  auto coreset = BuildOfflineCoreset(*g, options);
  if (!coreset.ok()) return Report(coreset.status());
  if (!a.out.empty()) {
    if (auto s = WriteCoreset(*coreset, a.out); !s.ok()) return Report(s);
  }
  nlohmann::ordered_json j;
  j["vertices"] = coreset->num_vertices();
  j["edges"] = coreset->num_edges();
  j["total_weight"] = coreset->total_weight();
  j["delta"] = coreset->delta;
  j["edge_sampled"] = coreset->edge_sampled;
  j["seed"] = a.seed;
  PrintJson(j);
  return kExitOk;
}

struct EstimateArgs {
  std::string in;
  double epsilon = 0.25;
  double gamma = -1.0;
  int k = 2;
  std::string mode = "exhaustive";
  int64_t samples = 10000;
  uint64_t seed = 1;
};

int RunEstimate(const EstimateArgs& a) {
  auto g = ReadEdgeList(a.in);
  if (!g.ok()) return ReportInput(g.status());
  if (a.mode != "exhaustive" && a.mode != "sampled") {
    return Report(absl::InvalidArgumentError(
        absl::StrCat("unknown mode '", a.mode, "'")));
  }
  const EstimateMode mode = a.mode == "exhaustive"
                                ? EstimateMode::Exhaustive()
                                : EstimateMode::Sampled(a.samples);
  const int n = std::visit([](const auto& x) { return x.num_vertices(); }, *g);
  const std::vector<double> gamma =
      a.gamma >= 0.0 ? std::vector<double>(n, a.gamma)
                     : GammaOriginal(n, a.epsilon, AvgDegree(*g));
  PrintSeed("estimate", a.seed);
  absl::StatusOr<EstimateResult> result;
  if (const Graph* plain = std::get_if<Graph>(&*g)) {
    result = EstimateMaxCut(*plain, gamma, a.seed, mode);
  } else {
    result = EstimateCc(std::get<SignedGraph>(*g), gamma, a.k, a.seed, mode);
  }
  if (!result.ok()) return Report(result.status());
  PrintJson(EstimateResultJson(*result));
  return kExitOk;
}

struct SolveArgs {
  std::string in;
  std::string solver = "exact";
  int k = 2;
  int restarts = 20;
  double epsilon = 0.25;
  uint64_t seed = 1;
};

int RunSolve(const SolveArgs& a) {
  auto g = ReadEdgeList(a.in);
  if (!g.ok()) return ReportInput(g.status());
  auto kind = ParseSolverKind(a.solver);
  if (!kind.ok()) return Report(kind.status());
  SolveOptions options;
  options.kind = *kind;
  options.k = a.k;
  options.restarts = a.restarts;
  options.epsilon = a.epsilon;
  options.seed = a.seed;
  if (*kind != SolverKind::kExact) PrintSeed("solve", a.seed);
  auto solution = SolveGraphWithAssignment(*g, options);
  if (!solution.ok()) return Report(solution.status());
  nlohmann::ordered_json j;
  j["assignment"] = solution->assignment;
  j["value"] = solution->value;
  j["solver"] = SolverKindName(*kind);
  j["seed"] = a.seed;
  PrintJson(j);
  return kExitOk;
}

struct StreamArgs {
  std::string in;
  std::string graph;
  std::string order = "shuffled";
  std::string problem = "maxcut";
  double epsilon = 0.25;
  double c_const = 0.0072;
  double delta = 0.0;
  double c_r = 2.0;
  std::string mapping = "inclusion";
  std::string backend = "auto";
  std::string edge_rule = "logn";
  std::string solver = "local-search";
  int k = 2;
  int restarts = 20;
  uint64_t seed = 1;
  std::string out;
  std::string log_base = "natural";
};

int RunStream(const StreamArgs& a) {
  if (a.in.empty() == a.graph.empty()) {
    return Report(absl::InvalidArgumentError(
        "give exactly one of --in (stream file) or --graph (edge list)"));
  }
  auto order = ParseStreamOrder(a.order);
  if (!order.ok()) return Report(order.status());
  EdgeStream stream;
  if (!a.in.empty()) {
    auto s = ReadStreamFile(a.in);
    if (!s.ok()) return ReportInput(s.status());
    stream = *std::move(s);
  } else {
    auto g = ReadEdgeList(a.graph);
    if (!g.ok()) return ReportInput(g.status());
    stream = std::visit(
        [&](const auto& x) { return ToStream(x, *order, a.seed); }, *g);
  }
  auto problem = ParseProblem(a.problem);
  auto mapping = ParseScoreMapping(a.mapping);
  auto backend = ParseSamplerBackend(a.backend);
  auto rule = ParseEdgeSampleRule(a.edge_rule);
  auto solver = ParseSolverKind(a.solver);
  auto base = ParseLogBase(a.log_base);
  for (const absl::Status& s :
       {problem.status(), mapping.status(), backend.status(), rule.status(),
        solver.status(), base.status()}) {
    if (!s.ok()) return Report(s);
  }
  ScopedLogBase scoped(*base);
  PrintSeed("stream", a.seed);
  StreamingParams params;
  params.importance.epsilon = a.epsilon;
  params.importance.c_const = a.c_const;
  params.importance.problem = *problem;
  params.importance.n = stream.n;
  params.importance.delta =
      a.delta > 0.0 ? a.delta : MeasureAverageDegree(stream);
  params.c_r = a.c_r;
  params.mapping = *mapping;
  params.backend = *backend;
  params.pass2.rule = *rule;
  params.seed = a.seed;
  SolveOptions solve;
  solve.kind = *solver;
  solve.k = a.k;
  solve.restarts = a.restarts;
  solve.epsilon = a.epsilon;
  solve.seed = a.seed;
  auto report = TwoPassRun(stream, params, solve);
  if (!report.ok()) return Report(report.status());
  nlohmann::ordered_json j = StreamReportJson(*report);
  j["delta"] = params.importance.delta;
  j["seed"] = a.seed;
  if (!a.out.empty()) {
    if (auto s = WriteStringToFile(j.dump(2) + "\n", a.out); !s.ok()) {
      return Report(s);
    }
  }
  PrintJson(j);
  return kExitOk;
}

int RunExperimentCommand(const std::string& config_path,
                         const std::map<std::string, std::string>& overrides,
                         bool print_config) {
  ExperimentConfig config;
  if (!config_path.empty()) {
    auto text = ReadFileToString(config_path);
    if (!text.ok()) return ReportInput(text.status());
    if (auto s = ParseConfigText(*text, config); !s.ok()) return Report(s);
  }
  for (const auto& [key, value] : overrides) {
    if (auto s = SetConfigValue(config, key, value); !s.ok()) return Report(s);
  }
  if (auto s = ValidateConfig(config); !s.ok()) return Report(s);
  if (print_config) {
    std::cout << FormatConfigText(config);
    return kExitOk;
  }
  PrintSeed("experiment", config.rng_seed);
  auto report = RunExperiment(config);
  if (!report.ok()) return Report(report.status());
  if (auto s = WriteExperimentReport(*report); !s.ok()) return Report(s);
  PrintJson(ExperimentReportJson(*report));
  return kExitOk;
}

int RunVerifyCommand(const VerifyOptions& options) {
  PrintSeed("verify", options.seed);
  bool all = true;
  for (const CheckResult& r : RunVerify(options)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail
              << "\n";
    all = all && r.passed;
  }
  return all ? kExitOk : kExitVerify;
}

int Main(int argc, char** argv) {
  CLI::App app{"Core-set construction and two-pass streaming for MaxCut and "
               "correlation clustering"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Write a random graph");
  generate->add_option("--problem", gen.problem, "maxcut or cc");
  generate->add_option("--n", gen.n, "Number of vertices");
  generate->add_option("--delta-exp", gen.delta_exp,
                       "Density exponent: average degree about n^delta_exp");
  generate->add_option("--p", gen.p, "Explicit edge probability");
  generate->add_option("--k", gen.k, "Planted clusters (cc)");
  generate->add_option("--noise", gen.noise, "Sign-flip probability (cc)");
  generate->add_option("--seed", gen.seed);
  generate->add_option("--out", gen.out, "Edge-list output path");
  generate->add_option("--stream-out", gen.stream_out,
                       "Also write the graph as an edge stream");
  generate->add_option("--order", gen.order,
                       "Stream order: sorted, shuffled, insert-delete-mix");

  CoresetArgs cs;
  CLI::App* coreset = app.add_subcommand("coreset", "Build a core-set");
  coreset->add_option("--in", cs.in, "Input edge list")->required();
  coreset->add_option("--out", cs.out,
                      "Output edge list (metadata goes to <out>.json)");
  coreset->add_option("--problem", cs.problem);
  coreset->add_option("--epsilon", cs.epsilon);
  coreset->add_option("--c-const", cs.c_const);
  coreset->add_option("--p-factor", cs.p_factor,
                      "Vertex probabilities are min(1, p_factor h_i)");
  coreset->add_flag("--no-edge-sample", cs.no_edge_sample);
  coreset->add_option("--edge-rule", cs.edge_rule, "logn or rescaled");
  coreset->add_option("--seed", cs.seed);
  coreset->add_option("--log-base", cs.log_base, "natural or binary");

  EstimateArgs est;
  CLI::App* estimate =
      app.add_subcommand("estimate", "Run the LP-based value estimator");
  estimate->add_option("--in", est.in, "Input edge list")->required();
  estimate->add_option("--epsilon", est.epsilon);
  estimate->add_option("--gamma", est.gamma,
                       "Uniform seed probability (default from epsilon)");
  estimate->add_option("--k", est.k, "Clusters (signed input)");
  estimate->add_option("--mode", est.mode, "exhaustive or sampled");
  estimate->add_option("--samples", est.samples);
  estimate->add_option("--seed", est.seed);

  SolveArgs sv;
  CLI::App* solve = app.add_subcommand("solve", "Solve a graph");
  solve->add_option("--in", sv.in, "Input edge list")->required();
  solve->add_option("--solver", sv.solver, "exact, local-search or est");
  solve->add_option("--k", sv.k, "Clusters (signed input)");
  solve->add_option("--restarts", sv.restarts);
  solve->add_option("--epsilon", sv.epsilon, "Estimator accuracy");
  solve->add_option("--seed", sv.seed);

  StreamArgs st;
  CLI::App* stream = app.add_subcommand("stream", "Two-pass streaming run");
  stream->add_option("--in", st.in, "Input stream file");
  stream->add_option("--graph", st.graph, "Edge list to stream instead");
  stream->add_option("--order", st.order, "Order used with --graph");
  stream->add_option("--problem", st.problem);
  stream->add_option("--epsilon", st.epsilon);
  stream->add_option("--c-const", st.c_const);
  stream->add_option("--delta", st.delta,
                     "Average degree (default: measured from the stream)");
  stream->add_option("--c-r", st.c_r, "Sampler count constant");
  stream->add_option("--mapping", st.mapping, "inclusion or importance");
  stream->add_option("--backend", st.backend, "auto, exact or sketch");
  stream->add_option("--edge-rule", st.edge_rule, "logn or rescaled");
  stream->add_option("--solver", st.solver);
  stream->add_option("--k", st.k);
  stream->add_option("--restarts", st.restarts);
  stream->add_option("--seed", st.seed);
  stream->add_option("--out", st.out, "Report JSON path");
  stream->add_option("--log-base", st.log_base, "natural or binary");

  std::string config_path;
  bool print_config = false;
  std::map<std::string, std::string> flag_values;
  CLI::App* experiment =
      app.add_subcommand("experiment", "Core-set versus full-graph trials");
  experiment->add_option("--config", config_path, "key = value config file");
  experiment->add_flag("--print-config", print_config,
                       "Print the effective config and exit");
  for (const std::string& key : ConfigKeys()) {
    experiment->add_option("--" + key, flag_values[key],
                           "Overrides '" + key + "' in the config");
  }

  VerifyOptions verify_options;
  CLI::App* verify =
      app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--fixtures", verify_options.fixtures_dir,
                     "Directory with manifest.txt");
  verify->add_option("--seed", verify_options.seed);
  verify->add_option("--scale", verify_options.scale,
                     "Multiplier on instances per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (*generate) return RunGenerate(gen);
  if (*coreset) return RunCoreset(cs);
  if (*estimate) return RunEstimate(est);
  if (*solve) return RunSolve(sv);
  if (*stream) return RunStream(st);
  if (*experiment) {
    std::map<std::string, std::string> overrides;
    for (const std::string& key : ConfigKeys()) {
      if (experiment->count("--" + key) > 0) overrides[key] = flag_values[key];
    }
    return RunExperimentCommand(config_path, overrides, print_config);
  }
  if (*verify) return RunVerifyCommand(verify_options);
  return kExitInternal;
}

}  // namespace
}  // namespace coreset

int main(int argc, char** argv) { return coreset::Main(argc, argv); }
