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


#include "coreset/estimate.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <type_traits>

#include "absl/strings/str_cat.h"

#include "coreset/estimation_lp.h"
#include "coreset/log_base.h"
#include "coreset/random.h"
#include "coreset/simplex.h"
#include "coreset/solvers.h"

namespace coreset {
namespace {

constexpr double kTieTolerance = 1e-9;

absl::Status CheckSeed(int n, const SeedSet& seed,
                       std::span<const int> labels) {
  if (static_cast<int>(seed.gamma.size()) != n) {
    return absl::InvalidArgumentError("gamma does not match the view");
  }
  if (labels.size() != seed.ids.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "got ", labels.size(), " labels for ", seed.ids.size(), " seed ids"));
  }
  for (VertexId j : seed.ids) {
    if (j < 0 || j >= n) {
      return absl::OutOfRangeError(absl::StrCat("seed id ", j, " out of range"));
    }
    if (!(seed.gamma[j] > 0.0)) {
      return absl::InternalError(
          absl::StrCat("seed member ", j, " has gamma 0"));
    }
  }
  return absl::OkStatus();
}

// Keeps the best (value, labels) pair under the documented tie rule.
struct Best {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<int> labels;

  void Offer(double v, const std::vector<int>& l) {
    const bool better = v > value + kTieTolerance;
    const bool tie_smaller = v >= value - kTieTolerance && l < labels;
    if (better || tie_smaller) {
      value = v;
      labels = l;
    }
  }
};

// Relabels so that labels appear in order of first occurrence.
void Canonicalize(std::vector<int>& labels) {
  std::vector<int> rename;
  for (int& l : labels) {
    auto it = std::find(rename.begin(), rename.end(), l);
    if (it == rename.end()) {
      rename.push_back(l);
      l = static_cast<int>(rename.size()) - 1;
    } else {
      l = static_cast<int>(it - rename.begin());
    }
  }
}

// Visits every canonical labeling of `size` items with at most k labels in
// lexicographic order.
template <typename Fn>
void ForEachCanonicalLabeling(int size, int k, Fn&& fn) {
  std::vector<int> labels(size, 0);
  if (size == 0) {
    fn(labels);
    return;
  }
  std::vector<int> used(size + 1, 0);
  used[1] = 1;
  int depth = 1;
  if (size > 1) labels[1] = -1;
  while (depth >= 1) {
    if (depth == size) {
      fn(labels);
      --depth;
      continue;
    }
    const int next = labels[depth] + 1;
    if (next > std::min(k - 1, used[depth])) {
      labels[depth] = -1;
      --depth;
      continue;
    }
    labels[depth] = next;
    used[depth + 1] = std::max(used[depth], next + 1);
    ++depth;
    if (depth < size) labels[depth] = -1;
  }
}

absl::StatusOr<double> SolveObjective(const LpModel& model) {
  auto solution = SolveLp(model);
  if (!solution.ok()) return solution.status();
  if (solution->status != LpStatus::kOptimal) {
    return absl::InternalError(absl::StrCat(
        "estimation program is ", LpStatusName(solution->status)));
  }
  return solution->objective;
}

// Shared driver. `evaluate` maps a label vector to an LP optimum; `space`
// enumerates the exhaustive space; `draw` produces one random canonical
// label vector.
template <typename Evaluate, typename Space, typename Draw>
absl::StatusOr<EstimateResult> Run(const SeedSet& seed, uint64_t rng_seed,
                                   EstimateMode mode, Evaluate&& evaluate,
                                   Space&& space, Draw&& draw) {
  EstimateResult result;
  result.mode = mode;
  result.rng_seed = rng_seed;
  Best best;
  absl::Status error = absl::OkStatus();
  auto visit = [&](const std::vector<int>& labels) {
    if (!error.ok()) return;
    auto value = evaluate(labels);
    if (!value.ok()) {
      error = value.status();
      return;
    }
    ++result.partitions_evaluated;
    best.Offer(*value, labels);
  };
  if (mode.kind == EstimateMode::kExhaustive) {
    space(visit);
  } else {
    if (mode.samples < 1) {
      return absl::InvalidArgumentError("sampled mode needs at least 1 draw");
    }
    Rng rng(DeriveSeed(rng_seed, 1));
    std::set<std::vector<int>> seen;
    for (int64_t t = 0; t < mode.samples; ++t) {
      std::vector<int> labels = draw(rng);
      if (seen.insert(labels).second) visit(labels);
    }
  }
  if (!error.ok()) return error;
  result.value = best.value;
  result.best_partition = std::move(best.labels);
  result.seed = seed;
  return result;
}

}  // namespace

absl::StatusOr<SeedSet> DrawSeed(std::span<const double> gamma,
                                 uint64_t seed) {
  SeedSet out;
  out.gamma.assign(gamma.begin(), gamma.end());
  Rng rng(seed);
  for (size_t i = 0; i < gamma.size(); ++i) {
    if (!(gamma[i] >= 0.0 && gamma[i] <= 1.0)) {
      return absl::OutOfRangeError(
          absl::StrCat("gamma[", i, "] = ", gamma[i], " is not a probability"));
    }
    if (rng.Uniform() < gamma[i]) out.ids.push_back(static_cast<VertexId>(i));
  }
  return out;
}

absl::StatusOr<std::vector<double>> RhoFromPartition(
    const Graph& view, const SeedSet& seed, std::span<const int> labels) {
  if (auto s = CheckSeed(view.num_vertices(), seed, labels); !s.ok()) return s;
  std::vector<double> rho(view.num_vertices(), 0.0);
  for (size_t t = 0; t < seed.ids.size(); ++t) {
    if (labels[t] != 1) continue;
    const VertexId j = seed.ids[t];
    for (const Neighbor& nb : view.neighbors(j)) {
      rho[nb.id] += nb.w / seed.gamma[j];
    }
  }
  return rho;
}

absl::StatusOr<std::vector<double>> RhoFromLabeling(
    const SignedGraph& view, const SeedSet& seed, std::span<const int> labels,
    int k) {
  if (k < 1) return absl::InvalidArgumentError("k must be at least 1");
  if (auto s = CheckSeed(view.num_vertices(), seed, labels); !s.ok()) return s;
  std::vector<double> rho(static_cast<size_t>(view.num_vertices()) * k, 0.0);
  for (size_t t = 0; t < seed.ids.size(); ++t) {
    const int l = labels[t];
    if (l < 0 || l >= k) {
      return absl::OutOfRangeError(absl::StrCat("label ", l, " outside [0, k)"));
    }
    const VertexId j = seed.ids[t];
    for (const Neighbor& nb : view.neighbors(j)) {
      rho[static_cast<size_t>(nb.id) * k + l] += nb.w / seed.gamma[j];
    }
  }
  return rho;
}

absl::StatusOr<EstimateResult> EstimateMaxCut(const Graph& view,
                                              std::span<const double> gamma,
                                              uint64_t rng_seed,
                                              EstimateMode mode) {
  if (static_cast<int>(gamma.size()) != view.num_vertices()) {
    return absl::InvalidArgumentError("gamma does not match the view");
  }
  auto seed = DrawSeed(gamma, DeriveSeed(rng_seed, 0));
  if (!seed.ok()) return seed.status();
  const int size = static_cast<int>(seed->ids.size());
  if (mode.kind == EstimateMode::kExhaustive &&
      size > kMaxExhaustiveMaxCutSeed) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "seed of ", size, " vertices exceeds the exhaustive limit of ",
        kMaxExhaustiveMaxCutSeed));
  }
  const SeedSet& s = *seed;
  auto evaluate = [&](const std::vector<int>& labels) -> absl::StatusOr<double> {
    auto rho = RhoFromPartition(view, s, labels);
    if (!rho.ok()) return rho.status();
    auto lp = BuildMaxCutLp(view, *rho);
    if (!lp.ok()) return lp.status();
    return SolveObjective(lp->model);
  };
  auto space = [&](auto&& visit) { ForEachCanonicalLabeling(size, 2, visit); };
  auto draw = [&](Rng& rng) {
    std::vector<int> labels(size, 0);
    for (int t = 1; t < size; ++t) labels[t] = rng.Next() >> 63;
    return labels;
  };
  return Run(*seed, rng_seed, mode, evaluate, space, draw);
}

absl::StatusOr<EstimateResult> EstimateCc(const SignedGraph& view,
                                          std::span<const double> gamma, int k,
                                          uint64_t rng_seed,
                                          EstimateMode mode) {
  if (k < 1) return absl::InvalidArgumentError("k must be at least 1");
  if (static_cast<int>(gamma.size()) != view.num_vertices()) {
    return absl::InvalidArgumentError("gamma does not match the view");
  }
  auto seed = DrawSeed(gamma, DeriveSeed(rng_seed, 0));
  if (!seed.ok()) return seed.status();
  const int size = static_cast<int>(seed->ids.size());
  if (mode.kind == EstimateMode::kExhaustive) {
    const int64_t count = CountCanonicalLabelings(size, k);
    if (count > kMaxExhaustiveLabelings) {
      return absl::ResourceExhaustedError(absl::StrCat(
          "seed of ", size, " vertices needs ", count,
          " labelings, exhaustive limit is ", kMaxExhaustiveLabelings));
    }
  }
  const SeedSet& s = *seed;
  auto evaluate = [&](const std::vector<int>& labels) -> absl::StatusOr<double> {
    auto rho = RhoFromLabeling(view, s, labels, k);
    if (!rho.ok()) return rho.status();
    auto lp = BuildCcLp(view, k, *rho);
    if (!lp.ok()) return lp.status();
    return SolveObjective(lp->model);
  };
  auto space = [&](auto&& visit) { ForEachCanonicalLabeling(size, k, visit); };
  auto draw = [&](Rng& rng) {
    std::vector<int> labels(size);
    for (int& l : labels) l = static_cast<int>(rng.UniformInt(k));
    Canonicalize(labels);
    return labels;
  };
  return Run(*seed, rng_seed, mode, evaluate, space, draw);
}

nlohmann::ordered_json EstimateResultJson(const EstimateResult& result) {
  nlohmann::ordered_json j;
  j["value"] = result.value;
  j["best_partition"] = result.best_partition;
  j["seed_ids"] = result.seed.ids;
  j["seed_size"] = result.seed.ids.size();
  j["partitions_evaluated"] = result.partitions_evaluated;
  j["rng_seed"] = result.rng_seed;
  j["mode"] =
      result.mode.kind == EstimateMode::kExhaustive ? "exhaustive" : "sampled";
  if (result.mode.kind == EstimateMode::kSampled) {
    j["samples"] = result.mode.samples;
  }
  return j;
}

std::vector<double> GammaOriginal(int n, double epsilon, double delta) {
  const double g = std::min(1.0, 16.0 * Log(n) / (epsilon * epsilon * delta));
  return std::vector<double>(n, g);
}

std::vector<double> GammaCoreset(const CoresetGraph& coreset, double epsilon,
                                 double delta, int n) {
  const double base = 16.0 * Log(n) / (epsilon * epsilon * delta);
  std::vector<double> gamma(coreset.p.size());
  for (size_t i = 0; i < gamma.size(); ++i) {
    gamma[i] = std::min(1.0, base / coreset.p[i]);
  }
  return gamma;
}

ConditionReport CheckCondition(const AnyGraph& view,
                               std::span<const double> gamma, double epsilon,
                               int k, int log_n) {
  ConditionReport report;
  std::visit(
      [&](const auto& g) {
        double gamma_sum = 0.0;
        for (double x : gamma) gamma_sum += x;
        const int n = log_n > 0 ? log_n : g.num_vertices();
        const double scale = g.total_weight() * epsilon * epsilon /
                             (8.0 * k * k * Log(n)) / gamma_sum;
        for (const auto& e : g.edges()) {
          double w;
          if constexpr (std::is_same_v<std::decay_t<decltype(e)>, Edge>) {
            w = e.w;
          } else {
            w = std::abs(e.eta());
          }
          const double bound = scale * gamma[e.u] * gamma[e.v];
          const double ratio = bound > 0.0 ? w / bound : (w > 0.0 ? kInfinity : 0.0);
          report.worst_ratio = std::max(report.worst_ratio, ratio);
          if (w > bound && report.holds) {
            report.holds = false;
            report.u = e.u;
            report.v = e.v;
          }
        }
      },
      view);
  return report;
}

}  // namespace coreset
