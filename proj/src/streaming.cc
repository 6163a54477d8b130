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


#include "coreset/streaming.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "absl/strings/str_cat.h"

#include "coreset/random.h"

namespace coreset {
namespace {

absl::Status CheckEndpoints(int n, const StreamEvent& e) {
  if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
    return absl::InvalidArgumentError(absl::StrCat(
        "stream event (", e.u, ", ", e.v, ") has invalid endpoints for n = ",
        n));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<ScoreMapping> ParseScoreMapping(absl::string_view name) {
  if (name == "inclusion") return ScoreMapping::kInclusion;
  if (name == "importance") return ScoreMapping::kImportance;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown score mapping '", name, "' (expected inclusion or importance)"));
}

const char* ScoreMappingName(ScoreMapping mapping) {
  return mapping == ScoreMapping::kInclusion ? "inclusion" : "importance";
}

absl::StatusOr<SamplerBackend> ParseSamplerBackend(absl::string_view name) {
  if (name == "auto") return SamplerBackend::kAuto;
  if (name == "exact") return SamplerBackend::kExact;
  if (name == "sketch") return SamplerBackend::kSketch;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown sampler backend '", name, "' (expected auto, exact or sketch)"));
}

const char* SamplerBackendName(SamplerBackend backend) {
  switch (backend) {
    case SamplerBackend::kAuto:
      return "auto";
    case SamplerBackend::kExact:
      return "exact";
    case SamplerBackend::kSketch:
      return "sketch";
  }
  return "?";
}

absl::StatusOr<int64_t> NumSamplers(const StreamingParams& params) {
  if (!(params.c_r > 0.0)) {
    return absl::InvalidArgumentError("c_r must be positive");
  }
  const ImportanceParams& ip = params.importance;
  const double r = std::ceil(params.c_r * ip.n / (ip.delta * ip.alpha()));
  if (r > 1e7) {
    return absl::ResourceExhaustedError(
        absl::StrCat("Pass 1 would need ", r, " samplers"));
  }
  return std::max<int64_t>(1, static_cast<int64_t>(r));
}

absl::StatusOr<std::vector<double>> ExactDegreeInclusion(
    std::span<const double> degrees, const StreamingParams& params) {
  if (auto s = ValidateImportanceParams(params.importance); !s.ok()) return s;
  auto r = NumSamplers(params);
  if (!r.ok()) return r.status();
  const ImportanceParams& ip = params.importance;
  const double low = ImportanceScore(0.0, ip);
  const double heavy = (1.0 - ip.alpha()) * ip.saturation_degree();
  double total = 0.0;
  for (double d : degrees) total += d;
  std::vector<double> p(degrees.size());
  for (size_t i = 0; i < degrees.size(); ++i) {
    const double q = total > 0.0 ? degrees[i] / total : 0.0;
    p[i] = degrees[i] >= heavy
               ? 1.0
               : 1.0 - (1.0 - low) * std::pow(1.0 - q, static_cast<double>(*r));
  }
  return p;
}

absl::StatusOr<Pass1State> Pass1State::Create(const StreamingParams& params,
                                              SamplerBackend backend) {
  if (auto s = ValidateImportanceParams(params.importance); !s.ok()) return s;
  if (backend == SamplerBackend::kAuto) {
    return absl::InvalidArgumentError("Pass 1 needs a resolved backend");
  }
  auto r = NumSamplers(params);
  if (!r.ok()) return r.status();
  const ImportanceParams& ip = params.importance;
  const int n = ip.n;
  const double alpha = ip.alpha();
  const double zeta = alpha;

  Pass1State state;
  state.params_ = params;
  state.backend_ = backend;
  state.low_score_ = ImportanceScore(0.0, ip);
  state.heavy_threshold_ = (1.0 - zeta) * ip.saturation_degree();

  Rng low_rng(DeriveSeed(params.seed, 1));
  for (VertexId i = 0; i < n; ++i) {
    if (low_rng.Uniform() < state.low_score_) state.low_set_.push_back(i);
  }

  // CountMin with error |x|_1 / k for k = n / (delta zeta^2).
  const double k = n / (ip.delta * zeta * zeta);
  const double width =
      std::min<double>(kMaxCountMinWidth, std::ceil(std::numbers::e * k));
  const int depth = static_cast<int>(
      std::max(1.0, std::ceil(std::log(1.0 / params.delta_fail))));
  auto cm = CountMinSketch::Create(n, static_cast<int>(width), depth,
                                   DeriveSeed(params.seed, 2));
  if (!cm.ok()) return cm.status();
  state.cm_ = *std::move(cm);

  state.r_ = *r;
  for (int64_t j = 0; j < state.r_; ++j) {
    state.draw_seeds_.push_back(DeriveSeed(params.seed, 1000 + j));
  }
  if (backend == SamplerBackend::kExact) {
    state.exact_.emplace(params.seed);
  } else {
    const SketchL1Options options = SketchL1Options::ForMass(n * ip.delta);
    state.sketches_.reserve(state.r_);
    for (uint64_t s : state.draw_seeds_) {
      auto sampler = SketchL1Sampler::Create(s, options);
      if (!sampler.ok()) return sampler.status();
      state.sketches_.push_back(*std::move(sampler));
    }
  }
  return state;
}

absl::Status Pass1State::Feed(const StreamEvent& event) {
  if (auto s = CheckEndpoints(params_.importance.n, event); !s.ok()) return s;
  const double m = event.magnitude();
  if (m == 0.0) return absl::OkStatus();
  const bool insert = event.op == StreamOp::kInsert;
  const double signed_m = insert ? m : -m;
  if (auto s = cm_.Update(event.u, signed_m); !s.ok()) return s;
  if (auto s = cm_.Update(event.v, signed_m); !s.ok()) return s;
  total_mass_ += 2.0 * signed_m;
  if (exact_) {
    exact_->Update(event.u, signed_m);
    exact_->Update(event.v, signed_m);
    return absl::OkStatus();
  }
  // One atom per (edge, endpoint).
  const uint64_t atom = EdgeKey(event.u, event.v) << 1;
  const VertexId lo = std::min(event.u, event.v);
  const VertexId hi = std::max(event.u, event.v);
  for (SketchL1Sampler& s : sketches_) {
    if (insert) {
      s.Insert(lo, atom, m);
      s.Insert(hi, atom | 1, m);
    } else {
      s.Delete(lo, atom, m);
      s.Delete(hi, atom | 1, m);
    }
  }
  return absl::OkStatus();
}

Pass1Output Pass1State::Finalize() const {
  const ImportanceParams& ip = params_.importance;
  Pass1Output out;
  out.total_mass = total_mass_;

  // Sampled degrees: the largest estimate per vertex.
  std::map<VertexId, double> sampled;
  for (int64_t j = 0; j < r_; ++j) {
    std::optional<L1Sample> draw =
        exact_ ? exact_->SampleWithSeed(draw_seeds_[j]) : sketches_[j].Sample(cm_);
    if (!draw) {
      ++out.sampler_failures;
      continue;
    }
    const VertexId id = static_cast<VertexId>(draw->index);
    auto [it, inserted] = sampled.try_emplace(id, draw->value);
    if (!inserted) it->second = std::max(it->second, draw->value);
  }
  std::vector<VertexId> heavy;
  for (VertexId i = 0; i < ip.n; ++i) {
    if (*cm_.Query(i) >= heavy_threshold_) heavy.push_back(i);
  }
  out.low_count = static_cast<int64_t>(low_set_.size());
  out.sampled_count = static_cast<int64_t>(sampled.size());
  out.heavy_count = static_cast<int64_t>(heavy.size());

  std::map<VertexId, double> merged;
  auto merge = [&merged](VertexId id, double score) {
    auto [it, inserted] = merged.try_emplace(id, score);
    if (!inserted) it->second = std::max(it->second, score);
  };
  if (params_.mapping == ScoreMapping::kImportance) {
    for (VertexId id : low_set_) merge(id, low_score_);
    for (const auto& [id, v] : sampled) {
      merge(id, ImportanceScore(std::max(v, 0.0), ip));
    }
  } else {
    const double total = std::max(total_mass_, 0.0);
    const double r = static_cast<double>(r_);
    auto inclusion = [&](double degree) {
      const double q =
          total > 0.0 ? std::clamp(degree / total, 0.0, 1.0) : 0.0;
      return 1.0 - (1.0 - low_score_) * std::pow(1.0 - q, r);
    };
    for (VertexId id : low_set_) {
      auto it = sampled.find(id);
      merge(id, inclusion(it != sampled.end() ? it->second : *cm_.Query(id)));
    }
    for (const auto& [id, v] : sampled) merge(id, inclusion(v));
  }
  for (VertexId id : heavy) merge(id, 1.0);

  out.entries.reserve(merged.size());
  for (const auto& [id, score] : merged) {
    out.entries.push_back({id, std::clamp(score, 1e-300, 1.0)});
  }
  return out;
}

int64_t Pass1State::StoredItems() const {
  int64_t items = static_cast<int64_t>(low_set_.size()) + cm_.num_counters();
  if (exact_) {
    items += exact_->StoredItems();
  } else {
    for (const SketchL1Sampler& s : sketches_) items += s.StoredItems();
  }
  return items;
}

absl::StatusOr<Pass2State> Pass2State::Create(const StreamingParams& params,
                                              const Pass1Output& pass1,
                                              bool is_signed) {
  if (auto s = ValidateImportanceParams(params.importance); !s.ok()) return s;
  Pass2State state;
  state.params_ = params;
  state.is_signed_ = is_signed;
  for (const ScoredVertex& e : pass1.entries) {
    if (!(e.score > 0.0 && e.score <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("vertex ", e.id, " has score ", e.score));
    }
    if (!state.ids_.empty() && e.id <= state.ids_.back()) {
      return absl::InvalidArgumentError("Pass 1 entries must be sorted");
    }
    state.local_.emplace(e.id, static_cast<int32_t>(state.ids_.size()));
    state.ids_.push_back(e.id);
    state.scores_.push_back(e.score);
  }
  const double d2 = params.importance.delta * params.importance.delta;
  const double expected_weight = pass1.total_mass / 2.0 / d2;
  state.scale_ = expected_weight > 0.0 ? state.ids_.size() / expected_weight
                                       : 0.0;
  state.coin_seed_ = DeriveSeed(params.seed, 3);
  return state;
}

absl::Status Pass2State::Feed(const StreamEvent& event) {
  if (auto s = CheckEndpoints(params_.importance.n, event); !s.ok()) return s;
  auto iu = local_.find(event.u);
  if (iu == local_.end()) return absl::OkStatus();
  auto iv = local_.find(event.v);
  if (iv == local_.end()) return absl::OkStatus();
  const uint64_t key = EdgeKey(event.u, event.v);
  if (event.op == StreamOp::kDelete) {
    kept_.erase(key);
    return absl::OkStatus();
  }
  const ImportanceParams& ip = params_.importance;
  const double factor =
      1.0 / (scores_[iu->second] * scores_[iv->second] * ip.delta * ip.delta);
  const double magnitude = event.magnitude() * factor;
  if (magnitude == 0.0) return absl::OkStatus();
  const int log_n = params_.pass2.log_n > 0 ? params_.pass2.log_n : ip.n;
  const double pe =
      EdgeKeepProbability(magnitude, ip.epsilon, scale_, params_.pass2, log_n);
  if (HashUniform(coin_seed_, key) >= pe) return absl::OkStatus();
  kept_[key] = {iu->second, iv->second, event.w * factor / pe,
                event.c_minus * factor / pe};
  peak_kept_ = std::max(peak_kept_, static_cast<int64_t>(kept_.size()));
  return absl::OkStatus();
}

absl::StatusOr<CoresetGraph> Pass2State::Finalize() const {
  const ImportanceParams& ip = params_.importance;
  CoresetGraph out;
  out.original_n = ip.n;
  out.delta = ip.delta;
  out.original_ids = ids_;
  out.p = scores_;
  out.epsilon = ip.epsilon;
  out.c_const = ip.c_const;
  out.seed = params_.seed;
  out.edge_sampled = true;
  const int n = static_cast<int>(ids_.size());
  if (is_signed_) {
    std::vector<SignedEdge> edges;
    edges.reserve(kept_.size());
    for (const auto& [key, e] : kept_) {
      edges.push_back({e.u, e.v, e.c_plus, e.c_minus});
    }
    auto g = SignedGraph::CreateWeighted(n, std::move(edges));
    if (!g.ok()) return g.status();
    out.graph = *std::move(g);
  } else {
    std::vector<Edge> edges;
    edges.reserve(kept_.size());
    for (const auto& [key, e] : kept_) edges.push_back({e.u, e.v, e.c_plus});
    auto g = Graph::Create(n, std::move(edges));
    if (!g.ok()) return g.status();
    out.graph = *std::move(g);
  }
  return out;
}

double MeasureAverageDegree(const EdgeStream& stream) {
  if (stream.n == 0) return 0.0;
  double mass = 0.0;
  for (const StreamEvent& e : stream.events) {
    mass += (e.op == StreamOp::kInsert ? 2.0 : -2.0) * e.magnitude();
  }
  return mass / stream.n;
}

absl::StatusOr<StreamReport> TwoPassRun(const EdgeStream& stream,
                                        const StreamingParams& params,
                                        const SolveOptions& solve) {
  if (params.importance.n != stream.n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "stream has n = ", stream.n, ", parameters say ", params.importance.n));
  }
  SamplerBackend backend = params.backend;
  if (backend == SamplerBackend::kAuto) {
    const bool deletes =
        std::any_of(stream.events.begin(), stream.events.end(),
                    [](const StreamEvent& e) { return e.op == StreamOp::kDelete; });
    backend = deletes ? SamplerBackend::kSketch : SamplerBackend::kExact;
  }
  auto pass1 = Pass1State::Create(params, backend);
  if (!pass1.ok()) return pass1.status();
  for (const StreamEvent& e : stream.events) {
    if (auto s = pass1->Feed(e); !s.ok()) return s;
  }
  const Pass1Output out1 = pass1->Finalize();

  auto pass2 = Pass2State::Create(params, out1, stream.is_signed);
  if (!pass2.ok()) return pass2.status();
  for (const StreamEvent& e : stream.events) {
    if (auto s = pass2->Feed(e); !s.ok()) return s;
  }
  auto coreset = pass2->Finalize();
  if (!coreset.ok()) return coreset.status();

  StreamReport report;
  report.backend = backend;
  report.num_samplers = pass1->num_samplers();
  report.kept_vertices = coreset->num_vertices();
  report.low_count = out1.low_count;
  report.sampled_count = out1.sampled_count;
  report.heavy_count = out1.heavy_count;
  report.sampler_failures = out1.sampler_failures;
  report.kept_edges = coreset->num_edges();
  report.count_min_counters = pass1->count_min().num_counters();
  report.pass1_items = pass1->StoredItems();
  report.pass2_items = pass2->StoredItems();
  if (coreset->num_vertices() > 0) {
    auto value = SolveCoreset(*coreset, solve);
    if (!value.ok()) return value.status();
    report.value = *value;
  }
  report.coreset = *std::move(coreset);
  return report;
}

nlohmann::ordered_json StreamReportJson(const StreamReport& report) {
  nlohmann::ordered_json j;
  j["value"] = report.value;
  j["backend"] = SamplerBackendName(report.backend);
  j["num_samplers"] = report.num_samplers;
  j["kept_vertices"] = report.kept_vertices;
  j["low_count"] = report.low_count;
  j["sampled_count"] = report.sampled_count;
  j["heavy_count"] = report.heavy_count;
  j["sampler_failures"] = report.sampler_failures;
  j["kept_edges"] = report.kept_edges;
  j["count_min_counters"] = report.count_min_counters;
  j["pass1_items"] = report.pass1_items;
  j["pass2_items"] = report.pass2_items;
  return j;
}

}  // namespace coreset
