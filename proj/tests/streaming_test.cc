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
#include <vector>

#include "gtest/gtest.h"

#include "coreset/generators.h"
#include "coreset/log_base.h"
#include "coreset/stream.h"
#include "test_graphs.h"

namespace coreset {
namespace {

using namespace ::coreset::test_graphs;

// Parameters with a chosen alpha; c_const is solved for.
StreamingParams ParamsWithAlpha(int n, double delta, double alpha,
                                uint64_t seed = 0) {
  StreamingParams p;
  p.importance.epsilon = 0.25;
  p.importance.n = n;
  p.importance.delta = delta;
  p.importance.c_const = std::pow(0.25, 4) / (alpha * Log(n));
  p.seed = seed;
  return p;
}

Pass1Output RunPass1(const EdgeStream& stream, const StreamingParams& params,
                     SamplerBackend backend) {
  auto state = Pass1State::Create(params, backend);
  EXPECT_TRUE(state.ok()) << state.status();
  for (const StreamEvent& e : stream.events) {
    EXPECT_TRUE(state->Feed(e).ok());
  }
  return state->Finalize();
}

std::map<VertexId, double> AsMap(const Pass1Output& out) {
  std::map<VertexId, double> m;
  for (const ScoredVertex& e : out.entries) m[e.id] = e.score;
  return m;
}

void ExpectSameOutput(const Pass1Output& a, const Pass1Output& b) {
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (size_t k = 0; k < a.entries.size(); ++k) {
    EXPECT_EQ(a.entries[k].id, b.entries[k].id);
    EXPECT_EQ(a.entries[k].score, b.entries[k].score);
  }
  EXPECT_EQ(a.sampler_failures, b.sampler_failures);
}

Graph Star(int n, int leaves) {
  std::vector<Edge> edges;
  for (int j = 1; j <= leaves; ++j) edges.push_back({0, j, 1.0});
  return Make(n, edges);
}

TEST(StreamingNamesTest, ParseRoundTrip) {
  for (ScoreMapping m : {ScoreMapping::kInclusion, ScoreMapping::kImportance}) {
    EXPECT_EQ(*ParseScoreMapping(ScoreMappingName(m)), m);
  }
  for (SamplerBackend b : {SamplerBackend::kAuto, SamplerBackend::kExact,
                           SamplerBackend::kSketch}) {
    EXPECT_EQ(*ParseSamplerBackend(SamplerBackendName(b)), b);
  }
  EXPECT_FALSE(ParseScoreMapping("max").ok());
  EXPECT_FALSE(ParseSamplerBackend("reservoir").ok());
}

TEST(Pass1Test, CreateValidates) {
  StreamingParams p = ParamsWithAlpha(50, 5.0, 0.1);
  EXPECT_FALSE(Pass1State::Create(p, SamplerBackend::kAuto).ok());
  p.c_r = 0.0;
  EXPECT_FALSE(Pass1State::Create(p, SamplerBackend::kExact).ok());
  p = ParamsWithAlpha(50, 5.0, 0.1);
  p.importance.delta = 0.0;
  EXPECT_FALSE(Pass1State::Create(p, SamplerBackend::kExact).ok());
}

TEST(Pass1Test, SizesFollowParameters) {
  StreamingParams p = ParamsWithAlpha(100, 5.0, 0.1);
  auto state = Pass1State::Create(p, SamplerBackend::kExact);
  ASSERT_TRUE(state.ok());
  // 2 * 100 / (5 * 0.1), up to rounding of alpha.
  EXPECT_NEAR(state->num_samplers(), 400, 1);
  EXPECT_EQ(*NumSamplers(p), state->num_samplers());
  EXPECT_NEAR(state->low_score(), 0.25 / (5.0 * 0.1), 1e-12);
  EXPECT_NEAR(state->heavy_threshold(), 0.9 * 25 * 0.1, 1e-12);
  // k = 100 / (5 * 0.01) = 2000; width = ceil(e k); depth = ceil(ln 100).
  EXPECT_EQ(state->count_min().width(), 5437);
  EXPECT_EQ(state->count_min().depth(), 5);
}

TEST(Pass1Test, EmptyStreamOutputsLowSet) {
  const EdgeStream empty{200, false, {}};
  for (ScoreMapping mapping :
       {ScoreMapping::kInclusion, ScoreMapping::kImportance}) {
    for (SamplerBackend backend :
         {SamplerBackend::kExact, SamplerBackend::kSketch}) {
      StreamingParams p = ParamsWithAlpha(200, 10.0, 0.1, 7);
      p.mapping = mapping;
      auto state = Pass1State::Create(p, backend);
      ASSERT_TRUE(state.ok());
      const Pass1Output out = state->Finalize();
      ASSERT_EQ(out.entries.size(), state->low_set().size());
      EXPECT_GT(out.entries.size(), 0u);
      for (size_t k = 0; k < out.entries.size(); ++k) {
        EXPECT_EQ(out.entries[k].id, state->low_set()[k]);
        EXPECT_NEAR(out.entries[k].score, state->low_score(), 1e-15);
      }
      EXPECT_EQ(out.sampler_failures, state->num_samplers());
      EXPECT_EQ(out.heavy_count, 0);
    }
  }
}

TEST(Pass1Test, LowSetIndependentOfStream) {
  StreamingParams p = ParamsWithAlpha(80, 8.0, 0.1, 11);
  auto a = Pass1State::Create(p, SamplerBackend::kExact);
  auto b = Pass1State::Create(p, SamplerBackend::kSketch);
  ASSERT_TRUE(a.ok() && b.ok());
  for (const StreamEvent& e :
       ToStream(*GenerateGnp(80, 0.1, 1), StreamOrder::kShuffled, 2).events) {
    ASSERT_TRUE(a->Feed(e).ok());
  }
  EXPECT_EQ(a->low_set(), b->low_set());
  const std::map<VertexId, double> out = AsMap(a->Finalize());
  for (VertexId id : a->low_set()) {
    ASSERT_TRUE(out.contains(id));
    EXPECT_GE(out.at(id), a->low_score());
  }
}

TEST(Pass1Test, RejectsBadEndpoints) {
  auto state = Pass1State::Create(ParamsWithAlpha(10, 2.0, 0.2),
                                  SamplerBackend::kExact);
  ASSERT_TRUE(state.ok());
  EXPECT_FALSE(state->Feed({StreamOp::kInsert, 0, 10, 1.0, 0.0}).ok());
  EXPECT_FALSE(state->Feed({StreamOp::kInsert, 3, 3, 1.0, 0.0}).ok());
}

TEST(Pass1Test, StarCenterIsHeavy) {
  const int n = 400;
  StreamingParams p = ParamsWithAlpha(n, 8.0, 0.5);
  const double sat = p.importance.saturation_degree();  // 32
  const Graph star = Star(n, static_cast<int>(std::ceil(2 * sat)));
  int hits = 0;
  for (int seed = 0; seed < 100; ++seed) {
    p.seed = seed;
    const EdgeStream s = ToStream(star, StreamOrder::kShuffled, seed);
    const std::map<VertexId, double> out =
        AsMap(RunPass1(s, p, SamplerBackend::kExact));
    hits += out.contains(0) && out.at(0) == 1.0;
  }
  EXPECT_GE(hits, 99);
}

TEST(Pass1Test, InsertThenDeleteRestoresCountMin) {
  StreamingParams p = ParamsWithAlpha(30, 4.0, 0.2, 3);
  for (SamplerBackend backend :
       {SamplerBackend::kExact, SamplerBackend::kSketch}) {
    auto state = Pass1State::Create(p, backend);
    ASSERT_TRUE(state.ok());
    for (const StreamEvent& e :
         ToStream(*GenerateGnp(30, 0.2, 4), StreamOrder::kSorted, 0).events) {
      ASSERT_TRUE(state->Feed(e).ok());
    }
    const CountMinSketch before = state->count_min();
    const Pass1Output out_before = state->Finalize();
    ASSERT_TRUE(state->Feed({StreamOp::kInsert, 5, 29, 1.0, 0.0}).ok());
    EXPECT_FALSE(state->count_min() == before);
    ASSERT_TRUE(state->Feed({StreamOp::kDelete, 5, 29, 1.0, 0.0}).ok());
    EXPECT_TRUE(state->count_min() == before);
    ExpectSameOutput(state->Finalize(), out_before);
  }
}

TEST(Pass1Test, LowAndHeavyMergeToOne) {
  // Low score 0.5; the first pre-drawn vertex becomes a star center.
  const int n = 400;
  StreamingParams p = ParamsWithAlpha(n, 4.0, 0.125, 5);
  ASSERT_NEAR(ImportanceScore(0.0, p.importance), 0.5, 1e-12);
  auto probe = Pass1State::Create(p, SamplerBackend::kExact);
  ASSERT_TRUE(probe.ok());
  ASSERT_FALSE(probe->low_set().empty());
  const VertexId center = probe->low_set().front();
  std::vector<Edge> edges;
  for (VertexId j = 0; j < n && static_cast<int>(edges.size()) < 10; ++j) {
    if (j != center) edges.push_back({center, j, 1.0});
  }
  const EdgeStream s = ToStream(Make(n, edges), StreamOrder::kSorted, 0);
  for (ScoreMapping mapping :
       {ScoreMapping::kInclusion, ScoreMapping::kImportance}) {
    p.mapping = mapping;
    const Pass1Output out = RunPass1(s, p, SamplerBackend::kExact);
    int seen = 0;
    for (const ScoredVertex& e : out.entries) {
      if (e.id == center) {
        ++seen;
        EXPECT_EQ(e.score, 1.0);
      }
    }
    EXPECT_EQ(seen, 1);
    for (size_t k = 1; k < out.entries.size(); ++k) {
      EXPECT_LT(out.entries[k - 1].id, out.entries[k].id);
    }
    for (const ScoredVertex& e : out.entries) {
      EXPECT_GT(e.score, 0.0);
      EXPECT_LE(e.score, 1.0);
    }
  }
}

TEST(Pass1Test, ImportanceMappingUsesExactDegrees) {
  const Graph g = *GenerateGnp(60, 0.2, 9);
  StreamingParams p = ParamsWithAlpha(60, g.avg_degree(), 0.1, 2);
  p.mapping = ScoreMapping::kImportance;
  const Pass1Output out =
      RunPass1(ToStream(g, StreamOrder::kShuffled, 1), p, SamplerBackend::kExact);
  const double low = ImportanceScore(0.0, p.importance);
  EXPECT_GT(out.sampled_count, 0);
  for (const ScoredVertex& e : out.entries) {
    const double h = ImportanceScore(g.degree(e.id), p.importance);
    const bool matches = std::abs(e.score - h) < 1e-12 ||
                         std::abs(e.score - low) < 1e-12 || e.score == 1.0;
    EXPECT_TRUE(matches) << e.id << " " << e.score;
    EXPECT_GE(e.score, std::min(h, low) - 1e-12);
  }
}

TEST(Pass1Test, InclusionMappingMatchesExactLaw) {
  const Graph g = *GenerateGnp(60, 0.2, 9);
  StreamingParams p = ParamsWithAlpha(60, g.avg_degree(), 0.1, 2);
  const std::vector<double> law = *ExactDegreeInclusion(g.degrees(), p);
  const Pass1Output out =
      RunPass1(ToStream(g, StreamOrder::kShuffled, 1), p, SamplerBackend::kExact);
  int exact = 0;
  for (const ScoredVertex& e : out.entries) {
    // CountMin only overestimates, which can only raise a score.
    EXPECT_GE(e.score, law[e.id] - 1e-12);
    exact += std::abs(e.score - law[e.id]) < 1e-12;
  }
  EXPECT_GE(exact, 0.95 * out.entries.size());
}

TEST(Pass1Test, MembershipFrequencyMatchesExactLaw) {
  const Graph g = *GenerateGnp(60, 0.2, 9);
  StreamingParams p = ParamsWithAlpha(60, g.avg_degree(), 0.1);
  const std::vector<double> law = *ExactDegreeInclusion(g.degrees(), p);
  const EdgeStream s = ToStream(g, StreamOrder::kShuffled, 1);
  const int trials = 400;
  std::vector<int> count(60, 0);
  for (int t = 0; t < trials; ++t) {
    p.seed = 1000 + t;
    for (const ScoredVertex& e : RunPass1(s, p, SamplerBackend::kExact).entries) {
      ++count[e.id];
    }
  }
  for (int i = 0; i < 60; ++i) {
    const double sigma = std::sqrt(law[i] * (1 - law[i]) / trials);
    EXPECT_NEAR(count[i] / static_cast<double>(trials), law[i],
                4 * sigma + 0.01)
        << "vertex " << i << " degree " << g.degree(i);
  }
}

TEST(Pass1Test, OrderIndependentForInsertOnlyStreams) {
  const Graph g = *GenerateGnp(50, 0.2, 13);
  for (ScoreMapping mapping :
       {ScoreMapping::kInclusion, ScoreMapping::kImportance}) {
    StreamingParams p = ParamsWithAlpha(50, g.avg_degree(), 0.1, 4);
    p.mapping = mapping;
    for (SamplerBackend backend :
         {SamplerBackend::kExact, SamplerBackend::kSketch}) {
      const Pass1Output sorted =
          RunPass1(ToStream(g, StreamOrder::kSorted, 0), p, backend);
      for (uint64_t s = 1; s <= 3; ++s) {
        ExpectSameOutput(
            RunPass1(ToStream(g, StreamOrder::kShuffled, s), p, backend),
            sorted);
      }
    }
  }
}

TEST(Pass1Test, ChurnMatchesNetGraph) {
  const Graph g = *GenerateGnp(50, 0.2, 17);
  const EdgeStream mix = ToStream(g, StreamOrder::kInsertDeleteMix, 3);
  const EdgeStream net = ToStream(g, StreamOrder::kSorted, 0);
  StreamingParams p = ParamsWithAlpha(50, g.avg_degree(), 0.1, 6);
  for (SamplerBackend backend :
       {SamplerBackend::kExact, SamplerBackend::kSketch}) {
    ExpectSameOutput(RunPass1(mix, p, backend), RunPass1(net, p, backend));
  }
}

TEST(ExactDegreeInclusionTest, Shape) {
  StreamingParams p = ParamsWithAlpha(100, 20.0, 0.1);
  const double low = ImportanceScore(0.0, p.importance);
  const std::vector<double> degrees = {0, 1, 2, 4, 36.5, 50};
  const std::vector<double> law = *ExactDegreeInclusion(degrees, p);
  EXPECT_NEAR(law[0], low, 1e-15);
  for (size_t i = 1; i < 4; ++i) EXPECT_GT(law[i], law[i - 1]);
  EXPECT_LT(law[3], 1.0);
  EXPECT_EQ(law[4], 1.0);  // threshold 0.9 * 400 * 0.1
  EXPECT_EQ(law[5], 1.0);
  const double r = static_cast<double>(*NumSamplers(p)), total = 93.5;
  EXPECT_NEAR(law[2], 1 - (1 - low) * std::pow(1 - 2 / total, r), 1e-12);
}

StreamingParams KeepAllParams(int n) {
  // delta = 2 puts every kept weight at 1/4, whose keep probability
  // min(1, ln(n) / (4 eps^2)) is 1.
  StreamingParams p = ParamsWithAlpha(n, 2.0, 0.2);
  return p;
}

Pass1Output AllVertices(int n, double score) {
  Pass1Output out;
  for (int i = 0; i < n; ++i) out.entries.push_back({i, score});
  return out;
}

TEST(Pass2Test, KeepAllRegimeReweights) {
  const Graph g = *GenerateGnp(12, 0.5, 1);
  const StreamingParams p = KeepAllParams(12);
  auto state = Pass2State::Create(p, AllVertices(12, 1.0), false);
  ASSERT_TRUE(state.ok());
  for (const StreamEvent& e : ToStream(g, StreamOrder::kShuffled, 2).events) {
    ASSERT_TRUE(state->Feed(e).ok());
  }
  auto coreset = state->Finalize();
  ASSERT_TRUE(coreset.ok());
  const Graph& h = std::get<Graph>(coreset->graph);
  ASSERT_EQ(h.num_edges(), g.num_edges());
  for (const Edge& e : h.edges()) EXPECT_DOUBLE_EQ(e.w, 0.25);
  EXPECT_TRUE(coreset->edge_sampled);
  EXPECT_EQ(coreset->original_n, 12);
}

TEST(Pass2Test, IgnoresEdgesOutsideKeptSet) {
  StreamingParams p = KeepAllParams(6);
  Pass1Output kept;
  kept.entries = {{1, 1.0}, {3, 0.5}, {4, 1.0}};
  auto state = Pass2State::Create(p, kept, false);
  ASSERT_TRUE(state.ok());
  ASSERT_TRUE(state->Feed({StreamOp::kInsert, 1, 3, 1.0, 0.0}).ok());
  ASSERT_TRUE(state->Feed({StreamOp::kInsert, 0, 3, 1.0, 0.0}).ok());
  ASSERT_TRUE(state->Feed({StreamOp::kInsert, 3, 4, 2.0, 0.0}).ok());
  EXPECT_EQ(state->num_kept_edges(), 2);
  auto coreset = state->Finalize();
  ASSERT_TRUE(coreset.ok());
  EXPECT_EQ(coreset->original_ids, (std::vector<VertexId>{1, 3, 4}));
  const Graph& h = std::get<Graph>(coreset->graph);
  ASSERT_EQ(h.num_edges(), 2);
  // 1 / (1 * 0.5 * 4) and 2 / (0.5 * 1 * 4).
  EXPECT_DOUBLE_EQ(h.edges()[0].w, 0.5);
  EXPECT_DOUBLE_EQ(h.edges()[1].w, 1.0);
}

TEST(Pass2Test, DeleteOfKeptEdgeRemovesIt) {
  auto state = Pass2State::Create(KeepAllParams(4), AllVertices(4, 1.0), false);
  ASSERT_TRUE(state.ok());
  ASSERT_TRUE(state->Feed({StreamOp::kInsert, 0, 1, 1.0, 0.0}).ok());
  ASSERT_TRUE(state->Feed({StreamOp::kInsert, 2, 1, 1.0, 0.0}).ok());
  ASSERT_TRUE(state->Feed({StreamOp::kDelete, 1, 0, 1.0, 0.0}).ok());
  ASSERT_TRUE(state->Feed({StreamOp::kDelete, 2, 3, 1.0, 0.0}).ok());
  EXPECT_EQ(state->num_kept_edges(), 1);
  EXPECT_EQ(state->peak_kept_edges(), 2);
  EXPECT_EQ(state->StoredItems(), 4 + 2);
}

TEST(Pass2Test, ConsistentDecisionsUnderChurn) {
  // Low scores make the keep probability fractional.
  const Graph g = *GenerateGnp(40, 0.5, 21);
  StreamingParams p = ParamsWithAlpha(40, 60.0, 0.1, 8);
  const Pass1Output all = AllVertices(40, 0.3);
  auto run = [&](const EdgeStream& s) {
    auto state = Pass2State::Create(p, all, false);
    EXPECT_TRUE(state.ok());
    for (const StreamEvent& e : s.events) EXPECT_TRUE(state->Feed(e).ok());
    return *state->Finalize();
  };
  const CoresetGraph net = run(ToStream(g, StreamOrder::kSorted, 0));
  const Graph& kept = std::get<Graph>(net.graph);
  EXPECT_GT(kept.num_edges(), 0);
  EXPECT_LT(kept.num_edges(), g.num_edges());
  for (uint64_t s = 1; s <= 3; ++s) {
    const CoresetGraph churn = run(ToStream(g, StreamOrder::kInsertDeleteMix, s));
    const Graph& h = std::get<Graph>(churn.graph);
    ASSERT_EQ(h.num_edges(), kept.num_edges());
    for (int64_t k = 0; k < h.num_edges(); ++k) {
      EXPECT_EQ(h.edges()[k].u, kept.edges()[k].u);
      EXPECT_EQ(h.edges()[k].v, kept.edges()[k].v);
      EXPECT_EQ(h.edges()[k].w, kept.edges()[k].w);
    }
  }
}

TEST(Pass2Test, SignedEdgesKeepBothWeights) {
  StreamingParams p = KeepAllParams(3);
  auto state = Pass2State::Create(p, AllVertices(3, 1.0), true);
  ASSERT_TRUE(state.ok());
  ASSERT_TRUE(state->Feed({StreamOp::kInsert, 0, 1, 1.0, 0.0}).ok());
  ASSERT_TRUE(state->Feed({StreamOp::kInsert, 1, 2, 0.0, 1.0}).ok());
  auto coreset = state->Finalize();
  ASSERT_TRUE(coreset.ok());
  const SignedGraph& h = std::get<SignedGraph>(coreset->graph);
  ASSERT_EQ(h.num_edges(), 2);
  EXPECT_DOUBLE_EQ(h.edges()[0].c_plus, 0.25);
  EXPECT_DOUBLE_EQ(h.edges()[1].c_minus, 0.25);
}

TEST(Pass2Test, RejectsMalformedPass1Output) {
  StreamingParams p = KeepAllParams(4);
  Pass1Output bad;
  bad.entries = {{2, 0.5}, {1, 0.5}};
  EXPECT_FALSE(Pass2State::Create(p, bad, false).ok());
  bad.entries = {{1, 0.0}};
  EXPECT_FALSE(Pass2State::Create(p, bad, false).ok());
}

TEST(MeasureAverageDegreeTest, MatchesNetGraph) {
  const Graph g = *GenerateGnp(70, 0.15, 5);
  for (StreamOrder order : {StreamOrder::kSorted, StreamOrder::kInsertDeleteMix}) {
    EXPECT_NEAR(MeasureAverageDegree(ToStream(g, order, 9)), g.avg_degree(),
                1e-9);
  }
  EXPECT_EQ(MeasureAverageDegree(EdgeStream{0, false, {}}), 0.0);
}

TEST(TwoPassRunTest, EmptyStream) {
  StreamingParams p = ParamsWithAlpha(200, 10.0, 0.1, 3);
  SolveOptions solve;
  auto report = TwoPassRun(EdgeStream{200, false, {}}, p, solve);
  ASSERT_TRUE(report.ok()) << report.status();
  EXPECT_EQ(report->value, 0.0);
  EXPECT_EQ(report->kept_vertices, report->low_count);
  EXPECT_GT(report->kept_vertices, 0);
  EXPECT_EQ(report->kept_edges, 0);
  EXPECT_EQ(report->backend, SamplerBackend::kExact);
}

TEST(TwoPassRunTest, ChecksVertexCount) {
  StreamingParams p = ParamsWithAlpha(20, 3.0, 0.1);
  EXPECT_FALSE(TwoPassRun(EdgeStream{21, false, {}}, p, SolveOptions{}).ok());
}

TEST(TwoPassRunTest, AutoBackendAndReport) {
  const Graph g = *GenerateGnp(60, 0.2, 3);
  StreamingParams p = ParamsWithAlpha(60, g.avg_degree(), 0.1, 1);
  SolveOptions solve;
  solve.seed = 4;
  auto plain = TwoPassRun(ToStream(g, StreamOrder::kShuffled, 1), p, solve);
  auto mix = TwoPassRun(ToStream(g, StreamOrder::kInsertDeleteMix, 1), p, solve);
  ASSERT_TRUE(plain.ok() && mix.ok());
  EXPECT_EQ(plain->backend, SamplerBackend::kExact);
  EXPECT_EQ(mix->backend, SamplerBackend::kSketch);
  for (const StreamReport* r : {&*plain, &*mix}) {
    EXPECT_GT(r->value, 0.0);
    EXPECT_EQ(r->kept_vertices, r->coreset.num_vertices());
    EXPECT_GE(r->pass1_items, r->count_min_counters);
    EXPECT_GE(r->pass2_items, r->kept_vertices + r->kept_edges);
  }
  const nlohmann::ordered_json j = StreamReportJson(*mix);
  EXPECT_EQ(j["backend"], "sketch");
  EXPECT_EQ(j["kept_vertices"], mix->kept_vertices);
  EXPECT_TRUE(j.contains("pass1_items"));
  EXPECT_TRUE(j.contains("sampler_failures"));

  auto again = TwoPassRun(ToStream(g, StreamOrder::kShuffled, 1), p, solve);
  EXPECT_EQ(again->value, plain->value);
}

}  // namespace
}  // namespace coreset
