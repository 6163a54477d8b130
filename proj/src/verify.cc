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

#include "coreset/verify.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

#include "coreset/count_min.h"
#include "coreset/estimate.h"
#include "coreset/estimation_lp.h"
#include "coreset/generators.h"
#include "coreset/graph_io.h"
#include "coreset/internal/line_parser.h"
#include "coreset/l1_sampler.h"
#include "coreset/random.h"
#include "coreset/sampling.h"
#include "coreset/simplex.h"
#include "coreset/solvers.h"

namespace coreset {
namespace {

SignedGraph RandomSignedGraph(int n, double density, Rng& rng) {
  std::vector<SignedEdge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!rng.Bernoulli(density)) continue;
      const double w = 0.1 + 0.9 * rng.Uniform();
      edges.push_back(rng.Bernoulli(0.5) ? SignedEdge{i, j, w, 0.0}
                                         : SignedEdge{i, j, 0.0, w});
    }
  }
  return *SignedGraph::Create(n, std::move(edges));
}

std::vector<double> RandomRho(const Graph& g, Rng& rng) {
  std::vector<double> rho(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) {
    rho[i] = rng.Uniform() * (g.degree(i) + 1.0);
  }
  return rho;
}

absl::StatusOr<double> LpOptimum(const LpModel& model) {
  auto sol = SolveLp(model);
  if (!sol.ok()) return sol.status();
  if (sol->status != LpStatus::kOptimal) {
    return absl::InternalError("LP not solved to optimality");
  }
  return sol->objective;
}

CheckResult Fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

CheckResult PairSampling(uint64_t seed, int instances) {
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < instances; ++t) {
    const int n = 1 + static_cast<int>(rng.UniformInt(8));
    std::vector<double> p(n), q(n);
    for (int i = 0; i < n; ++i) {
      p[i] = rng.Uniform();
      q[i] = p[i] * rng.Uniform();
    }
    auto a = PairDistributionExact(PairStrategy::kA, p, q);
    auto b = PairDistributionExact(PairStrategy::kB, p, q);
    if (!a.ok() || !b.ok()) return Fail("pair_sampling", "table failed");
    worst = std::max(worst, MaxAbsDifference(*a, *b));
  }
  return {"pair_sampling", worst <= 1e-12,
          absl::StrFormat("%d instances, max |A - B| = %.3g", instances,
                          worst)};
}

CheckResult LpSoundness(uint64_t seed, int instances) {
  Rng rng(seed);
  int violations = 0;
  for (int t = 0; t < instances; ++t) {
    const int n = 2 + t % 9;
    auto g = GenerateGnp(n, 0.5, rng.Next());
    if (!g.ok()) return Fail("lp_soundness", std::string(g.status().message()));
    auto lp = BuildMaxCutLp(*g, RandomRho(*g, rng));
    auto opt = lp.ok() ? LpOptimum(lp->model) : lp.status();
    auto exact = MaxCutExact(*g);
    if (!opt.ok() || !exact.ok()) return Fail("lp_soundness", "solver failed");
    violations += *opt > exact->value + 1e-6;
  }
  for (int t = 0; t < instances / 2; ++t) {
    const int n = 2 + t % 5;
    const int k = 1 + t % 3;
    SignedGraph g = RandomSignedGraph(n, 0.7, rng);
    std::vector<double> rho(n * k);
    for (double& r : rho) r = rng.Uniform() * 4 - 2;
    auto lp = BuildCcLp(g, k, rho);
    auto opt = lp.ok() ? LpOptimum(lp->model) : lp.status();
    auto exact = CcExact(g, k);
    if (!opt.ok() || !exact.ok()) return Fail("lp_soundness", "solver failed");
    violations += *opt > exact->value + 1e-6;
  }
  return {"lp_soundness", violations == 0,
          absl::StrFormat("%d max-cut and %d clustering instances, %d above "
                          "the exact optimum",
                          instances, instances / 2, violations)};
}

CheckResult FullSeedExactness(uint64_t seed, int instances) {
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < instances; ++t) {
    const int n = 3 + t % 6;
    auto g = GenerateGnp(n, 0.5, rng.Next());
    if (!g.ok()) return Fail("full_seed_exactness", "generator failed");
    std::vector<double> gamma(n, 1.0);
    auto est = EstimateMaxCut(*g, gamma, rng.Next(), EstimateMode::Exhaustive());
    auto exact = MaxCutExact(*g);
    if (!est.ok() || !exact.ok()) {
      return Fail("full_seed_exactness", "solver failed");
    }
    worst = std::max(worst, std::abs(est->value - exact->value));
  }
  return {"full_seed_exactness", worst <= 1e-6,
          absl::StrFormat("%d graphs, max |est - exact| = %.3g", instances,
                          worst)};
}

CheckResult StrongDuality(uint64_t seed, int instances) {
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < instances; ++t) {
    const int n = 2 + t % 11;
    auto g = GenerateGnp(n, 0.5, rng.Next());
    if (!g.ok()) return Fail("strong_duality", "generator failed");
    std::vector<Edge> edges(g->edges().begin(), g->edges().end());
    for (Edge& e : edges) e.w = 0.5 + rng.Uniform();
    auto weighted = Graph::Create(n, std::move(edges));
    const std::vector<double> rho = RandomRho(*weighted, rng);
    auto primal = BuildMaxCutLp(*weighted, rho);
    auto dual = BuildMaxCutDual(*weighted, rho);
    if (!primal.ok() || !dual.ok()) return Fail("strong_duality", "build failed");
    auto p = LpOptimum(primal->model);
    auto d = LpOptimum(*dual);
    if (!p.ok() || !d.ok()) return Fail("strong_duality", "solve failed");
    worst = std::max(worst, std::abs(*p - *d));
  }
  return {"strong_duality", worst <= 1e-6,
          absl::StrFormat("%d instances, max |primal - dual| = %.3g",
                          instances, worst)};
}

// A vertex-sampled sparse random graph with 6 to 16 vertices.
absl::StatusOr<CoresetGraph> SmallCoreset(Rng& rng) {
  constexpr int kN = 150;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto g = GenerateGnp(kN, 0.15, rng.Next());
    if (!g.ok()) return g.status();
    ImportanceParams params;
    params.n = kN;
    params.delta = g->avg_degree();
    std::vector<double> p(kN);
    for (double& x : p) x = 0.05 + 0.1 * rng.Uniform();
    auto cs = VertexSample(AnyGraph(*g), p, params, rng.Next(),
                           BandCheck::kUnchecked);
    if (!cs.ok()) return cs.status();
    if (cs->num_vertices() >= 6 && cs->num_vertices() <= 16 &&
        cs->num_edges() > 0) {
      return cs;
    }
  }
  return absl::InternalError("no small core-set found");
}

CheckResult EdgeSampleCuts(uint64_t seed, int trials) {
  constexpr double kEps = 0.25;
  Rng rng(seed);
  int good = 0;
  for (int t = 0; t < trials; ++t) {
    auto cs = SmallCoreset(rng);
    if (!cs.ok()) return Fail("edge_sample_cuts", "no core-set");
    auto out = EdgeSample(*cs, kEps, rng.Next());
    if (!out.ok()) return Fail("edge_sample_cuts", "edge sampling failed");
    const Graph& a = std::get<Graph>(cs->graph);
    const Graph& b = std::get<Graph>(out->graph);
    const int n = a.num_vertices();
    const double bound = kEps * cs->total_weight();
    bool ok = true;
    std::vector<uint8_t> side(n);
    for (uint32_t mask = 0; mask < (1u << (n - 1)) && ok; ++mask) {
      for (int i = 0; i < n; ++i) side[i] = (mask >> i) & 1;
      ok = std::abs(CutValue(a, side) - CutValue(b, side)) <= bound;
    }
    good += ok;
  }
  return {"edge_sample_cuts", good >= 0.95 * trials,
          absl::StrFormat("%d/%d trials with every cut within eps W", good,
                          trials)};
}

CheckResult CountMinBound(uint64_t seed, int trials) {
  constexpr int kN = 5000;
  constexpr double kK = 50;
  int within = 0;
  for (int t = 0; t < trials; ++t) {
    auto cm = CountMinSketch::ForAccuracy(kN, kK, 0.01, DeriveSeed(seed, t));
    if (!cm.ok()) return Fail("count_min_bound", "sketch failed");
    Rng rng(DeriveSeed(seed ^ 0x9e37, t));
    std::vector<double> x(kN);
    double total = 0.0;
    for (int i = 0; i < kN; ++i) {
      x[i] = i < 5 ? 200.0 : std::floor(1 + 3 * rng.Uniform());
      total += x[i];
      (void)cm->Update(i, x[i]);
    }
    const int64_t q = rng.UniformInt(kN);
    within += *cm->Query(q) - x[q] <= total / kK;
  }
  return {"count_min_bound", within >= 0.99 * trials,
          absl::StrFormat("%d/%d queries within |x|_1/k", within, trials)};
}

double TotalVariation(const std::vector<double>& counts, double draws) {
  const double p = 1.0 / counts.size();
  double tv = 0.0;
  for (double c : counts) tv += std::abs(c / draws - p);
  return tv / 2.0;
}

CheckResult L1Samplers(uint64_t seed, int draws) {
  constexpr int kDim = 100;
  std::vector<double> exact_counts(kDim, 0.0), sketch_counts(kDim, 0.0);
  ExactL1Sampler exact(seed);
  for (int i = 0; i < kDim; ++i) exact.Update(i, 1.0);
  int failures = 0;
  for (int t = 0; t < draws; ++t) {
    ++exact_counts[exact.SampleWithSeed(DeriveSeed(seed, t))->index];
    auto s = SketchL1Sampler::Create(DeriveSeed(seed + 1, t),
                                     SketchL1Options::ForMass(kDim));
    if (!s.ok()) return Fail("l1_samplers", "sketch failed");
    // Churn half the coordinates: insert twice, delete once.
    for (int i = 0; i < kDim; ++i) {
      s->Insert(i, i, 1.0);
      if (i % 2 == 0) {
        s->Insert(i, kDim + i, 1.0);
        s->Delete(i, kDim + i, 1.0);
      }
    }
    auto draw = s->SampleAtom();
    if (!draw) {
      ++failures;
      continue;
    }
    ++sketch_counts[draw->index];
  }
  const double tv_exact = TotalVariation(exact_counts, draws);
  const double tv_sketch = TotalVariation(sketch_counts, draws - failures);
  const bool ok = tv_exact <= 0.05 && tv_sketch <= 0.05 &&
                  failures <= draws / 50;
  return {"l1_samplers", ok,
          absl::StrFormat("TV exact %.4f, sketch %.4f, %d/%d sketch failures",
                          tv_exact, tv_sketch, failures, draws)};
}

CheckResult ClusterBound(uint64_t seed, int instances) {
  Rng rng(seed);
  int violations = 0;
  for (int t = 0; t < instances; ++t) {
    const int n = 2 + t % 6;
    SignedGraph g = RandomSignedGraph(n, 0.7, rng);
    auto r = KRestrictionCheck(g, 1.0 / 3.0);
    if (!r.ok()) return Fail("cluster_bound", "check failed");
    violations += r->opt_k < (2.0 / 3.0) * r->opt_unrestricted - 1e-9;
    violations += r->opt_unrestricted <
                  std::max(g.c_plus_total(), g.c_minus_total()) - 1e-9;
  }
  return {"cluster_bound", violations == 0,
          absl::StrFormat("%d signed graphs, %d violations", instances,
                          violations)};
}

}  // namespace

absl::StatusOr<CheckResult> VerifyFixtures(const std::string& dir) {
  const std::filesystem::path root(dir);
  auto manifest = ReadFileToString((root / "manifest.txt").string());
  if (!manifest.ok()) return manifest.status();
  int checked = 0;
  std::vector<std::string> failures;
  for (const internal::Line& line : internal::SplitLines(*manifest)) {
    const bool cc = line.tokens.size() == 4 && line.tokens[1] == "cc";
    const bool maxcut = line.tokens.size() == 3 && line.tokens[1] == "maxcut";
    int k = 0;
    double expected = 0.0;
    if ((!cc && !maxcut) ||
        (cc && !absl::SimpleAtoi(line.tokens[2], &k)) ||
        !absl::SimpleAtod(line.tokens.back(), &expected)) {
      return internal::LineError(line, "expected '<file> maxcut <value>' or "
                                       "'<file> cc <k> <value>'");
    }
    const std::string file(line.tokens[0]);
    auto g = ReadEdgeList((root / file).string());
    if (!g.ok()) return g.status();
    ++checked;
    double value = 0.0;
    if (maxcut) {
      const Graph* plain = std::get_if<Graph>(&*g);
      if (plain == nullptr) {
        failures.push_back(absl::StrCat(file, ": not a plain graph"));
        continue;
      }
      if (auto s = plain->ValidateDegrees(); !s.ok()) {
        failures.push_back(absl::StrCat(file, ": ", s.message()));
        continue;
      }
      auto cut = MaxCutExact(*plain);
      if (!cut.ok()) return cut.status();
      value = cut->value;
    } else {
      const SignedGraph* signed_graph = std::get_if<SignedGraph>(&*g);
      if (signed_graph == nullptr) {
        failures.push_back(absl::StrCat(file, ": not a signed graph"));
        continue;
      }
      if (auto s = signed_graph->ValidateDegrees(); !s.ok()) {
        failures.push_back(absl::StrCat(file, ": ", s.message()));
        continue;
      }
      auto best = CcExact(*signed_graph, k);
      if (!best.ok()) return best.status();
      value = best->value;
    }
    if (std::abs(value - expected) > 1e-9) {
      failures.push_back(
          absl::StrCat(file, ": exact value ", value, ", expected ", expected));
    }
  }
  std::string detail = absl::StrCat(checked, " fixtures");
  for (const std::string& f : failures) absl::StrAppend(&detail, "; ", f);
  return CheckResult{"fixtures", failures.empty() && checked > 0, detail};
}

std::vector<CheckResult> RunVerify(const VerifyOptions& options) {
  const int s = std::max(1, options.scale);
  const uint64_t seed = options.seed;
  std::vector<CheckResult> results;
  results.push_back(PairSampling(DeriveSeed(seed, 1), 40 * s));
  results.push_back(LpSoundness(DeriveSeed(seed, 2), 100 * s));
  results.push_back(FullSeedExactness(DeriveSeed(seed, 3), 12 * s));
  results.push_back(StrongDuality(DeriveSeed(seed, 4), 20 * s));
  results.push_back(EdgeSampleCuts(DeriveSeed(seed, 5), 40 * s));
  results.push_back(CountMinBound(DeriveSeed(seed, 6), 200 * s));
  results.push_back(L1Samplers(DeriveSeed(seed, 7), 20000 * s));
  results.push_back(ClusterBound(DeriveSeed(seed, 8), 100 * s));
  if (!options.fixtures_dir.empty()) {
    auto fixtures = VerifyFixtures(options.fixtures_dir);
    results.push_back(fixtures.ok()
                          ? *fixtures
                          : Fail("fixtures",
                                 std::string(fixtures.status().message())));
  }
  return results;
}

}  // namespace coreset
