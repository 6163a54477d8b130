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


#include "coreset/sampling.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <type_traits>
#include <variant>

#include "absl/strings/str_cat.h"
#include "json.hpp"

#include "coreset/graph_io.h"
#include "coreset/log_base.h"
#include "coreset/random.h"

namespace coreset {
namespace {

constexpr double kBandSlack = 1e-12;

absl::Status CheckPair(double p, double q) {
  if (!(q >= 0.0 && q <= p && p <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("need 0 <= q <= p <= 1, got p=", p, " q=", q));
  }
  return absl::OkStatus();
}

absl::Status CheckPairVectors(std::span<const double> p,
                              std::span<const double> q) {
  if (p.size() != q.size()) {
    return absl::InvalidArgumentError("p and q differ in length");
  }
  for (size_t v = 0; v < p.size(); ++v) {
    if (auto s = CheckPair(p[v], q[v]); !s.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("vertex ", v, ": ", s.message()));
    }
  }
  return absl::OkStatus();
}

// Per-vertex law of (in S, in S'): {P(out, out), P(out, in), P(in, in)}.
absl::StatusOr<std::array<double, 3>> VertexLaw(PairStrategy strategy,
                                                double p, double q,
                                                PStarForm form) {
  if (strategy == PairStrategy::kA) {
    if (p == 0.0) return std::array<double, 3>{1.0, 0.0, 0.0};
    const double ratio = q / p;
    return std::array<double, 3>{1.0 - p, p * (1.0 - ratio), p * ratio};
  }
  auto p_star = PStar(p, q, form);
  if (!p_star.ok()) return p_star.status();
  if (*p_star < 0.0 || *p_star > 1.0) {
    return absl::OutOfRangeError(absl::StrCat(
        "p* = ", *p_star, " is not a probability (p=", p, " q=", q, ")"));
  }
  return std::array<double, 3>{(1.0 - q) * (1.0 - *p_star),
                               (1.0 - q) * *p_star, q};
}

}  // namespace

absl::StatusOr<Problem> ParseProblem(absl::string_view name) {
  if (name == "maxcut") return Problem::kMaxCut;
  if (name == "cc") return Problem::kCorrelationClustering;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown problem '", name, "' (expected maxcut or cc)"));
}

const char* ProblemName(Problem problem) {
  return problem == Problem::kMaxCut ? "maxcut" : "cc";
}

double ImportanceParams::alpha() const {
  const double e2 = epsilon * epsilon;
  const double e4 = e2 * e2;
  const double power = problem == Problem::kMaxCut ? e4 : e4 * e4;
  return power / (c_const * Log(n));
}

absl::Status ValidateImportanceParams(const ImportanceParams& params) {
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0)) {
    return absl::InvalidArgumentError("epsilon must lie in (0, 1)");
  }
  if (!(params.c_const > 0.0) || !std::isfinite(params.c_const)) {
    return absl::InvalidArgumentError("C must be positive");
  }
  if (params.n < 2) {
    return absl::InvalidArgumentError("n must be at least 2");
  }
  if (!(params.delta > 0.0) || !std::isfinite(params.delta)) {
    return absl::InvalidArgumentError("average degree must be positive");
  }
  if (!(params.floor_divisor >= 1.0)) {
    return absl::InvalidArgumentError("floor divisor must be at least 1");
  }
  return absl::OkStatus();
}

double ImportanceScore(double degree, const ImportanceParams& params) {
  const double floor = params.epsilon * params.delta / params.floor_divisor;
  return std::min(1.0, std::max(degree, floor) / params.saturation_degree());
}

std::vector<double> ImportanceScores(const AnyGraph& g,
                                     const ImportanceParams& params) {
  return std::visit(
      [&params](const auto& graph) {
        std::vector<double> scores(graph.num_vertices());
        for (VertexId i = 0; i < graph.num_vertices(); ++i) {
          scores[i] = ImportanceScore(graph.degree(i), params);
        }
        return scores;
      },
      g);
}

std::vector<double> ScaleProbabilities(std::span<const double> scores,
                                       double factor) {
  std::vector<double> p(scores.size());
  for (size_t i = 0; i < scores.size(); ++i) {
    p[i] = std::min(1.0, factor * scores[i]);
  }
  return p;
}

absl::Status CheckProbabilityBand(std::span<const double> p,
                                  std::span<const double> scores) {
  if (p.size() != scores.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "got ", p.size(), " probabilities for ", scores.size(), " vertices"));
  }
  for (size_t i = 0; i < p.size(); ++i) {
    const double lo = scores[i];
    const double hi = std::min(1.0, 2.0 * scores[i]);
    if (p[i] < lo - kBandSlack || p[i] > hi + kBandSlack) {
      return absl::OutOfRangeError(absl::StrCat(
          "p[", i, "] = ", p[i], " outside [", lo, ", ", hi, "]"));
    }
  }
  return absl::OkStatus();
}

int64_t CoresetGraph::num_edges() const {
  return std::visit([](const auto& g) { return g.num_edges(); }, graph);
}

double CoresetGraph::total_weight() const {
  return std::visit([](const auto& g) { return g.total_weight(); }, graph);
}

absl::StatusOr<CoresetGraph> VertexSample(const AnyGraph& g,
                                          std::span<const double> p,
                                          const ImportanceParams& params,
                                          uint64_t seed, BandCheck check) {
  if (auto s = ValidateImportanceParams(params); !s.ok()) return s;
  const int n = std::visit([](const auto& x) { return x.num_vertices(); }, g);
  if (static_cast<int>(p.size()) != n) {
    return absl::InvalidArgumentError(
        absl::StrCat("got ", p.size(), " probabilities for ", n, " vertices"));
  }
  for (size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0.0 && p[i] <= 1.0)) {
      return absl::OutOfRangeError(
          absl::StrCat("p[", i, "] = ", p[i], " is not a probability"));
    }
  }
  if (check == BandCheck::kChecked) {
    if (auto s = CheckProbabilityBand(p, ImportanceScores(g, params));
        !s.ok()) {
      return s;
    }
  }

  CoresetGraph out;
  out.original_n = n;
  out.delta = params.delta;
  out.epsilon = params.epsilon;
  out.c_const = params.c_const;
  out.seed = seed;
  std::vector<VertexId> local(n, -1);
  Rng rng(seed);
  for (VertexId i = 0; i < n; ++i) {
    if (rng.Uniform() < p[i]) {
      local[i] = out.num_vertices();
      out.original_ids.push_back(i);
      out.p.push_back(p[i]);
    }
  }
  const double d2 = params.delta * params.delta;
  auto scale = [&](VertexId u, VertexId v) {
    return 1.0 / (p[u] * p[v] * d2);
  };
  if (const Graph* plain = std::get_if<Graph>(&g)) {
    std::vector<Edge> edges;
    for (const Edge& e : plain->edges()) {
      if (local[e.u] < 0 || local[e.v] < 0) continue;
      edges.push_back({local[e.u], local[e.v], e.w * scale(e.u, e.v)});
    }
    auto built = Graph::Create(out.num_vertices(), std::move(edges));
    if (!built.ok()) return built.status();
    out.graph = *std::move(built);
  } else {
    std::vector<SignedEdge> edges;
    for (const SignedEdge& e : std::get<SignedGraph>(g).edges()) {
      if (local[e.u] < 0 || local[e.v] < 0) continue;
      const double s = scale(e.u, e.v);
      edges.push_back({local[e.u], local[e.v], e.c_plus * s, e.c_minus * s});
    }
    auto built = SignedGraph::CreateWeighted(out.num_vertices(),
                                             std::move(edges));
    if (!built.ok()) return built.status();
    out.graph = *std::move(built);
  }
  return out;
}

absl::Status ValidateVertexSampleWeights(const CoresetGraph& coreset,
                                         const AnyGraph& original,
                                         double tolerance) {
  const double d2 = coreset.delta * coreset.delta;
  auto close = [tolerance](double got, double want) {
    return std::abs(got - want) <= tolerance * std::max(1.0, std::abs(want));
  };
  auto report = [&](int64_t k, double got, double want) {
    return absl::InternalError(absl::StrCat("core-set edge ", k, " has weight ",
                                            got, ", expected ", want));
  };
  auto recompute = [&](const auto& cg, const auto& og) -> absl::Status {
    // Original edges keyed by pair for lookup.
    std::map<uint64_t, size_t> index;
    for (size_t k = 0; k < og.edges().size(); ++k) {
      index[EdgeKey(og.edges()[k].u, og.edges()[k].v)] = k;
    }
    for (size_t k = 0; k < cg.edges().size(); ++k) {
      const auto& e = cg.edges()[k];
      const VertexId u = coreset.original_ids[e.u];
      const VertexId v = coreset.original_ids[e.v];
      auto it = index.find(EdgeKey(u, v));
      if (it == index.end()) {
        return absl::InternalError(
            absl::StrCat("core-set edge ", k, " is not an input edge"));
      }
      const double s = 1.0 / (coreset.p[e.u] * coreset.p[e.v] * d2);
      const auto& o = og.edges()[it->second];
      if constexpr (std::is_same_v<std::decay_t<decltype(e)>, Edge>) {
        if (!close(e.w, o.w * s)) return report(k, e.w, o.w * s);
      } else {
        if (!close(e.c_plus, o.c_plus * s)) {
          return report(k, e.c_plus, o.c_plus * s);
        }
        if (!close(e.c_minus, o.c_minus * s)) {
          return report(k, e.c_minus, o.c_minus * s);
        }
      }
    }
    return absl::OkStatus();
  };
  if (coreset.graph.index() != original.index()) {
    return absl::InvalidArgumentError("core-set and input differ in kind");
  }
  if (coreset.is_signed()) {
    return recompute(std::get<SignedGraph>(coreset.graph),
                     std::get<SignedGraph>(original));
  }
  return recompute(std::get<Graph>(coreset.graph), std::get<Graph>(original));
}

absl::StatusOr<EdgeSampleRule> ParseEdgeSampleRule(absl::string_view name) {
  if (name == "rescaled") return EdgeSampleRule::kRescaled;
  if (name == "logn") return EdgeSampleRule::kLogN;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown edge sample rule '", name, "' (expected rescaled or logn)"));
}

const char* EdgeSampleRuleName(EdgeSampleRule rule) {
  return rule == EdgeSampleRule::kRescaled ? "rescaled" : "logn";
}

double EdgeKeepProbability(double w, double epsilon, double scale,
                           const EdgeSampleOptions& options, int log_n) {
  const double e2 = epsilon * epsilon;
  if (options.rule == EdgeSampleRule::kRescaled) {
    return std::min(1.0, options.constant * scale * w / e2);
  }
  return std::min(1.0, w * Log(log_n) / e2);
}

absl::StatusOr<CoresetGraph> EdgeSample(const CoresetGraph& coreset,
                                        double epsilon, uint64_t seed,
                                        const EdgeSampleOptions& options) {
  if (coreset.num_vertices() == 0) {
    return absl::InvalidArgumentError("edge sampling needs a nonempty core-set");
  }
  if (!(epsilon > 0.0)) {
    return absl::InvalidArgumentError("epsilon must be positive");
  }
  CoresetGraph out = coreset;
  out.edge_sampled = true;
  const double total = coreset.total_weight();
  if (total <= 0.0) return out;
  const double scale = coreset.num_vertices() / total;
  const int log_n = options.log_n > 0 ? options.log_n : coreset.original_n;
  Rng rng(seed);
  if (const Graph* plain = std::get_if<Graph>(&coreset.graph)) {
    std::vector<Edge> edges;
    for (const Edge& e : plain->edges()) {
      const double pe = EdgeKeepProbability(e.w, epsilon, scale, options, log_n);
      if (rng.Uniform() < pe) edges.push_back({e.u, e.v, e.w / pe});
    }
    auto built = Graph::Create(plain->num_vertices(), std::move(edges));
    if (!built.ok()) return built.status();
    out.graph = *std::move(built);
  } else {
    const SignedGraph& sg = std::get<SignedGraph>(coreset.graph);
    std::vector<SignedEdge> edges;
    for (const SignedEdge& e : sg.edges()) {
      const double magnitude = e.c_plus + e.c_minus;
      const double pe =
          EdgeKeepProbability(magnitude, epsilon, scale, options, log_n);
      if (rng.Uniform() < pe) {
        edges.push_back({e.u, e.v, e.c_plus / pe, e.c_minus / pe});
      }
    }
    auto built = SignedGraph::CreateWeighted(sg.num_vertices(), std::move(edges));
    if (!built.ok()) return built.status();
    out.graph = *std::move(built);
  }
  return out;
}

std::string CoresetMetadataJson(const CoresetGraph& coreset) {
  nlohmann::ordered_json j;
  j["original_n"] = coreset.original_n;
  j["signed"] = coreset.is_signed();
  j["delta"] = coreset.delta;
  j["epsilon"] = coreset.epsilon;
  j["c_const"] = coreset.c_const;
  j["seed"] = coreset.seed;
  j["edge_sampled"] = coreset.edge_sampled;
  j["num_vertices"] = coreset.num_vertices();
  j["num_edges"] = coreset.num_edges();
  j["total_weight"] = coreset.total_weight();
  j["original_ids"] = coreset.original_ids;
  j["p"] = coreset.p;
  return j.dump(2) + "\n";
}

absl::Status WriteCoreset(const CoresetGraph& coreset,
                          const std::string& path) {
  const std::string text =
      std::visit([](const auto& g) { return FormatEdgeList(g); }, coreset.graph);
  if (auto s = WriteStringToFile(text, path); !s.ok()) return s;
  return WriteStringToFile(CoresetMetadataJson(coreset), path + ".json");
}

absl::StatusOr<double> PStar(double p, double q, PStarForm form) {
  if (auto s = CheckPair(p, q); !s.ok()) return s;
  if (p == 1.0) return 1.0;
  if (form == PStarForm::kConditional) return (p - q) / (1.0 - q);
  return (p - q) / (1.0 - p);
}

absl::StatusOr<PairSample> DoubleSample(PairStrategy strategy,
                                        std::span<const double> p,
                                        std::span<const double> q,
                                        uint64_t seed, PStarForm form) {
  if (auto s = CheckPairVectors(p, q); !s.ok()) return s;
  const int n = static_cast<int>(p.size());
  Rng rng(seed);
  PairSample out;
  std::vector<bool> in_s(n, false), in_sp(n, false);
  if (strategy == PairStrategy::kA) {
    for (int v = 0; v < n; ++v) in_sp[v] = rng.Uniform() < p[v];
    for (int v = 0; v < n; ++v) {
      if (in_sp[v]) in_s[v] = rng.Uniform() < q[v] / p[v];
    }
  } else {
    std::vector<double> p_star(n);
    for (int v = 0; v < n; ++v) {
      auto ps = PStar(p[v], q[v], form);
      if (!ps.ok()) return ps.status();
      p_star[v] = *ps;
    }
    for (int v = 0; v < n; ++v) in_s[v] = rng.Uniform() < q[v];
    for (int v = 0; v < n; ++v) {
      in_sp[v] = in_s[v] || rng.Uniform() < p_star[v];
    }
  }
  for (int v = 0; v < n; ++v) {
    if (in_s[v]) out.s.push_back(v);
    if (in_sp[v]) out.s_prime.push_back(v);
  }
  return out;
}

absl::StatusOr<PairTable> PairDistributionExact(PairStrategy strategy,
                                                std::span<const double> p,
                                                std::span<const double> q,
                                                PStarForm form) {
  if (auto s = CheckPairVectors(p, q); !s.ok()) return s;
  if (p.size() > kMaxPairTableVertices) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "exact pair table limited to ", kMaxPairTableVertices, " vertices"));
  }
  PairTable table = {{{0u, 0u}, 1.0}};
  for (size_t v = 0; v < p.size(); ++v) {
    auto law = VertexLaw(strategy, p[v], q[v], form);
    if (!law.ok()) return law.status();
    const uint32_t bit = 1u << v;
    PairTable next;
    for (const auto& [key, prob] : table) {
      const auto [s, sp] = key;
      if ((*law)[0] > 0.0) next[{s, sp}] += prob * (*law)[0];
      if ((*law)[1] > 0.0) next[{s, sp | bit}] += prob * (*law)[1];
      if ((*law)[2] > 0.0) next[{s | bit, sp | bit}] += prob * (*law)[2];
    }
    table = std::move(next);
  }
  return table;
}

double MaxAbsDifference(const PairTable& a, const PairTable& b) {
  double worst = 0.0;
  for (const auto& [key, prob] : a) {
    auto it = b.find(key);
    worst = std::max(worst, std::abs(prob - (it == b.end() ? 0.0 : it->second)));
  }
  for (const auto& [key, prob] : b) {
    if (!a.contains(key)) worst = std::max(worst, std::abs(prob));
  }
  return worst;
}

}  // namespace coreset
