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


#include "coreset/pipeline.h"

#include <vector>

#include "absl/strings/str_cat.h"

#include "coreset/random.h"
#include "coreset/solvers.h"

namespace coreset {
namespace {

absl::StatusOr<Solution> Solve(const AnyGraph& g, const SolveOptions& options,
                               const std::vector<double>& gamma) {
  if (const Graph* plain = std::get_if<Graph>(&g)) {
    absl::StatusOr<CutSolution> cut;
    switch (options.kind) {
      case SolverKind::kExact:
        cut = MaxCutExact(*plain);
        break;
      case SolverKind::kLocalSearch:
        cut = MaxCutLocalSearch(*plain, options.restarts, options.seed);
        break;
      case SolverKind::kEst: {
        auto est = EstimateMaxCut(*plain, gamma, options.seed, options.est_mode);
        if (!est.ok()) return est.status();
        return Solution{est->value, {}};
      }
    }
    if (!cut.ok()) return cut.status();
    return Solution{cut->value,
                    std::vector<int>(cut->side.begin(), cut->side.end())};
  }
  const SignedGraph& sg = std::get<SignedGraph>(g);
  absl::StatusOr<ClusteringSolution> cl;
  switch (options.kind) {
    case SolverKind::kExact:
      cl = CcExact(sg, options.k);
      break;
    case SolverKind::kLocalSearch:
      cl = CcLocalSearch(sg, options.k, options.restarts, options.seed);
      break;
    case SolverKind::kEst: {
      auto est =
          EstimateCc(sg, gamma, options.k, options.seed, options.est_mode);
      if (!est.ok()) return est.status();
      return Solution{est->value, {}};
    }
  }
  if (!cl.ok()) return cl.status();
  return Solution{cl->value, std::move(cl->labels)};
}

}  // namespace

absl::StatusOr<SolverKind> ParseSolverKind(absl::string_view name) {
  if (name == "exact") return SolverKind::kExact;
  if (name == "local-search" || name == "local") {
    return SolverKind::kLocalSearch;
  }
  if (name == "est") return SolverKind::kEst;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown solver '", name, "' (expected exact, local-search or est)"));
}

const char* SolverKindName(SolverKind kind) {
  switch (kind) {
    case SolverKind::kExact:
      return "exact";
    case SolverKind::kLocalSearch:
      return "local-search";
    case SolverKind::kEst:
      return "est";
  }
  return "?";
}

absl::StatusOr<Solution> SolveGraphWithAssignment(
    const AnyGraph& g, const SolveOptions& options) {
  std::vector<double> gamma;
  if (options.kind == SolverKind::kEst) {
    const int n = std::visit([](const auto& x) { return x.num_vertices(); }, g);
    const double delta = AvgDegree(g);
    gamma = delta > 0.0 && n >= 2 ? GammaOriginal(n, options.epsilon, delta)
                                  : std::vector<double>(n, 1.0);
  }
  return Solve(g, options, gamma);
}

absl::StatusOr<double> SolveGraph(const AnyGraph& g,
                                  const SolveOptions& options) {
  auto solution = SolveGraphWithAssignment(g, options);
  if (!solution.ok()) return solution.status();
  return solution->value;
}

absl::StatusOr<double> SolveCoreset(const CoresetGraph& coreset,
                                    const SolveOptions& options) {
  std::vector<double> gamma;
  if (options.kind == SolverKind::kEst) {
    gamma = GammaCoreset(coreset, options.epsilon, coreset.delta,
                         coreset.original_n);
  }
  auto value = Solve(coreset.graph, options, gamma);
  if (!value.ok()) return value.status();
  return coreset.delta * coreset.delta * value->value;
}

absl::StatusOr<CoresetGraph> BuildOfflineCoreset(const AnyGraph& g,
                                                 OfflineOptions options) {
  ImportanceParams& params = options.params;
  if (params.n == 0) {
    params.n = std::visit([](const auto& x) { return x.num_vertices(); }, g);
  }
  if (params.delta == 0.0) params.delta = AvgDegree(g);
  if (auto s = ValidateImportanceParams(params); !s.ok()) return s;
  if (!(options.p_factor >= 1.0)) {
    return absl::InvalidArgumentError("p_factor must be at least 1");
  }
  const std::vector<double> scores = ImportanceScores(g, params);
  const std::vector<double> p = ScaleProbabilities(scores, options.p_factor);
  auto coreset = VertexSample(g, p, params, DeriveSeed(options.seed, 0),
                              options.p_factor <= 2.0 ? BandCheck::kChecked
                                                      : BandCheck::kUnchecked);
  if (!coreset.ok() || !options.edge_sample || coreset->num_vertices() == 0) {
    return coreset;
  }
  return EdgeSample(*coreset, params.epsilon, DeriveSeed(options.seed, 1),
                    options.edge_options);
}

}  // namespace coreset
