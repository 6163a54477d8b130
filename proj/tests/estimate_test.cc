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

#include <cmath>
#include <cstdint>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

#include "coreset/generators.h"
#include "coreset/log_base.h"
#include "coreset/random.h"
#include "coreset/solvers.h"
#include "test_graphs.h"

namespace coreset {
namespace {

using namespace ::coreset::test_graphs;
using ::testing::ElementsAre;

Graph Path3() { return Make(3, {{0, 1, 1.0}, {1, 2, 1.0}}); }

TEST(DrawSeedTest, ExtremesAndErrors) {
  auto all = DrawSeed(std::vector<double>(5, 1.0), 7);
  ASSERT_TRUE(all.ok());
  EXPECT_THAT(all->ids, ElementsAre(0, 1, 2, 3, 4));
  auto none = DrawSeed(std::vector<double>(5, 0.0), 7);
  ASSERT_TRUE(none.ok());
  EXPECT_TRUE(none->ids.empty());
  EXPECT_EQ(DrawSeed(std::vector<double>{0.5, 1.5}, 1).status().code(),
            absl::StatusCode::kOutOfRange);
}

TEST(DrawSeedTest, ExpectedSizeWithinThreeSigma) {
  std::vector<double> gamma(50);
  double mean = 0.0, var = 0.0;
  for (int i = 0; i < 50; ++i) {
    gamma[i] = (i + 1) / 60.0;
    mean += gamma[i];
    var += gamma[i] * (1.0 - gamma[i]);
  }
  constexpr int kDraws = 10000;
  double total = 0.0;
  for (int t = 0; t < kDraws; ++t) {
    auto s = DrawSeed(gamma, DeriveSeed(99, t));
    ASSERT_TRUE(s.ok());
    total += s->ids.size();
  }
  EXPECT_NEAR(total / kDraws, mean, 3.0 * std::sqrt(var / kDraws));
}

TEST(RhoTest, HandValues) {
  const Graph p3 = Path3();
  SeedSet middle{{1}, {1.0, 0.5, 1.0}};
  auto rho = RhoFromPartition(p3, middle, std::vector<int>{1});
  ASSERT_TRUE(rho.ok());
  EXPECT_THAT(*rho, ElementsAre(2.0, 0.0, 2.0));
  auto empty = RhoFromPartition(p3, middle, std::vector<int>{0});
  ASSERT_TRUE(empty.ok());
  EXPECT_THAT(*empty, ElementsAre(0.0, 0.0, 0.0));
}

TEST(RhoTest, FullSeedMatchesExactCrossingMass) {
  const Graph g = RandomWeighted(10, 0.5, 3);
  auto cut = MaxCutExact(g);
  ASSERT_TRUE(cut.ok());
  SeedSet seed{{}, std::vector<double>(10, 1.0)};
  std::vector<int> labels;
  for (int i = 0; i < 10; ++i) {
    seed.ids.push_back(i);
    labels.push_back(cut->side[i]);
  }
  auto rho = RhoFromPartition(g, seed, labels);
  ASSERT_TRUE(rho.ok());
  std::vector<double> expected(10, 0.0);
  for (const Edge& e : g.edges()) {
    if (cut->side[e.v]) expected[e.u] += e.w;
    if (cut->side[e.u]) expected[e.v] += e.w;
  }
  for (int i = 0; i < 10; ++i) EXPECT_NEAR((*rho)[i], expected[i], 1e-12);
}

TEST(RhoTest, UnbiasedOverSeedDraws) {
  const Graph g = RandomWeighted(12, 0.6, 5);
  const std::vector<double> gamma(12, 0.5);
  std::vector<double> target(12, 0.0), var(12, 0.0);
  for (const Edge& e : g.edges()) {
    // A = multiples of three.
    if (e.v % 3 == 0) {
      target[e.u] += e.w;
      var[e.u] += e.w * e.w;
    }
    if (e.u % 3 == 0) {
      target[e.v] += e.w;
      var[e.v] += e.w * e.w;
    }
  }
  constexpr int kDraws = 4000;
  std::vector<double> mean(12, 0.0);
  for (int t = 0; t < kDraws; ++t) {
    auto seed = DrawSeed(gamma, DeriveSeed(17, t));
    ASSERT_TRUE(seed.ok());
    std::vector<int> labels;
    for (VertexId j : seed->ids) labels.push_back(j % 3 == 0);
    auto rho = RhoFromPartition(g, *seed, labels);
    ASSERT_TRUE(rho.ok());
    for (int i = 0; i < 12; ++i) mean[i] += (*rho)[i] / kDraws;
  }
  // Var(w / gamma * Bernoulli(gamma)) = w^2 (1 - gamma) / gamma.
  for (int i = 0; i < 12; ++i) {
    EXPECT_NEAR(mean[i], target[i], 5.0 * std::sqrt(var[i] / kDraws)) << i;
  }
}

TEST(RhoTest, Errors) {
  const Graph p3 = Path3();
  SeedSet zero{{1}, {1.0, 0.0, 1.0}};
  EXPECT_FALSE(RhoFromPartition(p3, zero, std::vector<int>{1}).ok());
  SeedSet ok{{1}, {1.0, 1.0, 1.0}};
  EXPECT_FALSE(RhoFromPartition(p3, ok, std::vector<int>{1, 0}).ok());
}

TEST(RhoTest, SignedLabelingHandValue) {
  const SignedGraph g =
      MakeSigned(3, {{0, 1, 1.0, 0.0}, {1, 2, 1.0, 0.0}, {0, 2, 0.0, 1.0}});
  SeedSet seed{{0, 1}, {0.5, 1.0, 1.0}};
  auto rho = RhoFromLabeling(g, seed, std::vector<int>{0, 1}, 2);
  ASSERT_TRUE(rho.ok());
  // Vertex 2: label 0 gets eta_20 / 0.5 = -2, label 1 gets eta_21 = 1.
  EXPECT_THAT(*rho, ElementsAre(0.0, 1.0, 2.0, 0.0, -2.0, 1.0));
  EXPECT_FALSE(RhoFromLabeling(g, seed, std::vector<int>{0, 2}, 2).ok());
}

TEST(EstimateMaxCutTest, HandValues) {
  auto p3 = EstimateMaxCut(Path3(), std::vector<double>(3, 1.0), 1,
                           EstimateMode::Exhaustive());
  ASSERT_TRUE(p3.ok()) << p3.status();
  EXPECT_NEAR(p3->value, 2.0, 1e-9);
  EXPECT_EQ(p3->partitions_evaluated, 4);
  EXPECT_EQ(p3->best_partition.front(), 0);
  auto empty = EstimateMaxCut(Make(4, {}), std::vector<double>(4, 1.0), 1,
                              EstimateMode::Exhaustive());
  ASSERT_TRUE(empty.ok());
  EXPECT_NEAR(empty->value, 0.0, 1e-12);
}

TEST(EstimateMaxCutTest, FullSeedEqualsExactOptimum) {
  for (int t = 0; t < 20; ++t) {
    const int n = 3 + t % 7;
    const Graph g = RandomWeighted(n, 0.5, 100 + t);
    auto est = EstimateMaxCut(g, std::vector<double>(n, 1.0), t,
                              EstimateMode::Exhaustive());
    ASSERT_TRUE(est.ok());
    EXPECT_NEAR(est->value, NaiveMaxCut(g), 1e-6) << t;
    EXPECT_EQ(est->partitions_evaluated, int64_t{1} << (n - 1));
  }
}

TEST(EstimateMaxCutTest, NeverExceedsOptimum) {
  for (int t = 0; t < 30; ++t) {
    const int n = 4 + t % 8;
    const Graph g = RandomWeighted(n, 0.4 + 0.02 * t, 200 + t);
    Rng rng(t);
    std::vector<double> gamma(n);
    for (double& x : gamma) x = 0.2 + 0.8 * rng.Uniform();
    const double opt = NaiveMaxCut(g);
    auto exhaustive = EstimateMaxCut(g, gamma, t, EstimateMode::Exhaustive());
    auto sampled = EstimateMaxCut(g, gamma, t, EstimateMode::Sampled(5));
    ASSERT_TRUE(exhaustive.ok());
    ASSERT_TRUE(sampled.ok());
    EXPECT_LE(exhaustive->value, opt + 1e-6);
    EXPECT_LE(sampled->value, exhaustive->value + 1e-9);
    EXPECT_EQ(sampled->seed.ids, exhaustive->seed.ids);
  }
}

TEST(EstimateMaxCutTest, DeterministicAndLimited) {
  const Graph g = RandomWeighted(9, 0.5, 8);
  const std::vector<double> gamma(9, 0.6);
  auto a = EstimateMaxCut(g, gamma, 42, EstimateMode::Exhaustive());
  auto b = EstimateMaxCut(g, gamma, 42, EstimateMode::Exhaustive());
  ASSERT_TRUE(a.ok());
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(a->value, b->value);
  EXPECT_EQ(a->best_partition, b->best_partition);

  const Graph big = Make(23, {});
  EXPECT_EQ(EstimateMaxCut(big, std::vector<double>(23, 1.0), 1,
                           EstimateMode::Exhaustive())
                .status()
                .code(),
            absl::StatusCode::kResourceExhausted);
  auto sampled = EstimateMaxCut(big, std::vector<double>(23, 1.0), 1,
                                EstimateMode::Sampled(10));
  ASSERT_TRUE(sampled.ok());
  EXPECT_EQ(sampled->partitions_evaluated, 10);
  EXPECT_FALSE(EstimateMaxCut(big, std::vector<double>(23, 1.0), 1,
                              EstimateMode::Sampled(0))
                   .ok());
}

TEST(EstimateMaxCutTest, JsonFields) {
  auto est = EstimateMaxCut(Path3(), std::vector<double>(3, 1.0), 5,
                            EstimateMode::Exhaustive());
  ASSERT_TRUE(est.ok());
  const auto j = EstimateResultJson(*est);
  EXPECT_EQ(j["mode"], "exhaustive");
  EXPECT_EQ(j["partitions_evaluated"], 4);
  EXPECT_EQ(j["seed_ids"].size(), 3u);
  EXPECT_EQ(j["best_partition"].size(), 3u);
  EXPECT_EQ(j["rng_seed"], 5u);
}

// Seeds of moderate density at gamma = 0.7 keep the error well below eps W
// at eps = 0.25 in most runs.
TEST(EstimateMaxCutTest, AccuracyAtPartialSeed) {
  const Graph g = RandomWeighted(10, 0.7, 77);
  const double opt = NaiveMaxCut(g);
  const double w = g.total_weight();
  constexpr double kEps = 0.25;
  int within_eps = 0, within_4eps = 0;
  for (int t = 0; t < 50; ++t) {
    auto est = EstimateMaxCut(g, std::vector<double>(10, 0.7), 1000 + t,
                              EstimateMode::Exhaustive());
    ASSERT_TRUE(est.ok());
    const double err = std::abs(est->value - opt);
    within_eps += err <= kEps * w;
    within_4eps += err <= 4 * kEps * w;
  }
  EXPECT_GE(within_eps, 45);
  EXPECT_GE(within_4eps, 45);
}

TEST(EstimateCcTest, HandValues) {
  const SignedGraph pair = MakeSigned(2, {{0, 1, 1.0, 0.0}});
  auto one = EstimateCc(pair, std::vector<double>(2, 1.0), 2, 1,
                        EstimateMode::Exhaustive());
  ASSERT_TRUE(one.ok());
  EXPECT_NEAR(one->value, 1.0, 1e-9);
  const SignedGraph tri =
      MakeSigned(3, {{0, 1, 1.0, 0.0}, {1, 2, 1.0, 0.0}, {0, 2, 0.0, 1.0}});
  auto two = EstimateCc(tri, std::vector<double>(3, 1.0), 2, 1,
                        EstimateMode::Exhaustive());
  ASSERT_TRUE(two.ok());
  EXPECT_NEAR(two->value, 2.0, 1e-9);
  EXPECT_EQ(two->partitions_evaluated, CountCanonicalLabelings(3, 2));
}

TEST(EstimateCcTest, FullSeedEqualsExactOptimum) {
  for (int t = 0; t < 12; ++t) {
    const int n = 2 + t % 5;
    const int k = 2 + t % 2;
    const SignedGraph g = RandomSigned(n, 0.7, 300 + t);
    auto est = EstimateCc(g, std::vector<double>(n, 1.0), k, t,
                          EstimateMode::Exhaustive());
    ASSERT_TRUE(est.ok());
    EXPECT_NEAR(est->value, NaiveCc(g, k), 1e-6) << t;
  }
}

TEST(EstimateCcTest, NeverExceedsOptimumAndSampledIsDominated) {
  for (int t = 0; t < 20; ++t) {
    const int n = 3 + t % 5;
    const SignedGraph g = RandomSigned(n, 0.6, 400 + t);
    std::vector<double> gamma(n, 0.5);
    const double opt = NaiveCc(g, 3);
    auto exhaustive = EstimateCc(g, gamma, 3, t, EstimateMode::Exhaustive());
    auto sampled = EstimateCc(g, gamma, 3, t, EstimateMode::Sampled(4));
    ASSERT_TRUE(exhaustive.ok());
    ASSERT_TRUE(sampled.ok());
    EXPECT_LE(exhaustive->value, opt + 1e-6);
    EXPECT_LE(sampled->value, exhaustive->value + 1e-9);
  }
}

TEST(EstimateCcTest, LabelingLimit) {
  const SignedGraph g = MakeSigned(14, {});
  EXPECT_EQ(EstimateCc(g, std::vector<double>(14, 1.0), 5, 1,
                       EstimateMode::Exhaustive())
                .status()
                .code(),
            absl::StatusCode::kResourceExhausted);
  EXPECT_FALSE(EstimateCc(g, std::vector<double>(14, 1.0), 0, 1,
                          EstimateMode::Exhaustive())
                   .ok());
}

TEST(GammaTest, HandValues) {
  EXPECT_THAT(GammaOriginal(4, 0.25, 10.0), ElementsAre(1.0, 1.0, 1.0, 1.0));
  EXPECT_EQ(GammaOriginal(1000000, 0.2, 1000.0).front(), 1.0);
  const double g = GammaOriginal(1000000, 0.5, 1e4).front();
  EXPECT_NEAR(g, 16.0 * std::log(1e6) / 2500.0, 1e-12);
  EXPECT_NEAR(g, 0.0884, 5e-5);
}

TEST(GammaTest, CoresetScalesInverselyWithP) {
  CoresetGraph c;
  c.p = {1.0, 0.5, 0.25, 0.1};
  c.graph = Make(4, {});
  const int n = 1000000;
  const double eps = 0.5, delta = 1e5;
  const std::vector<double> gamma = GammaCoreset(c, eps, delta, n);
  EXPECT_EQ(gamma.front(), GammaOriginal(n, eps, delta).front());
  for (int i = 1; i < 4; ++i) {
    EXPECT_NEAR(gamma[i] * c.p[i], gamma[0] * c.p[0], 1e-15);
  }
  // Uniform p = q: the seed is the whole core-set.
  c.p.assign(4, GammaOriginal(n, eps, delta).front());
  EXPECT_THAT(GammaCoreset(c, eps, delta, n),
              ElementsAre(1.0, 1.0, 1.0, 1.0));
}

TEST(CheckConditionTest, DenseUnitGraphHolds) {
  const Graph g = Complete(200);
  const ConditionReport r =
      CheckCondition(AnyGraph(g), std::vector<double>(200, 1.0), 0.9);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.u, -1);
  // w / bound = 8 n log n / (W eps^2) for unit weights and gamma = 1.
  const double expected =
      8.0 * 200 * std::log(200.0) / (g.total_weight() * 0.81);
  EXPECT_NEAR(r.worst_ratio, expected, 1e-9);
}

TEST(CheckConditionTest, HeavyEdgeViolatesAndKTightens) {
  const Graph g = Make(4, {{0, 1, 1.0}, {1, 2, 50.0}, {2, 3, 1.0}});
  std::vector<double> gamma = {1.0, 0.01, 0.01, 1.0};
  const ConditionReport r = CheckCondition(AnyGraph(g), gamma, 0.5);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.u, 0);
  EXPECT_EQ(r.v, 1);

  const ConditionReport one = CheckCondition(AnyGraph(Complete(200)),
                                             std::vector<double>(200, 1.0),
                                             0.9, 1);
  const ConditionReport three = CheckCondition(AnyGraph(Complete(200)),
                                               std::vector<double>(200, 1.0),
                                               0.9, 3);
  EXPECT_NEAR(three.worst_ratio, 9.0 * one.worst_ratio, 1e-9);
  EXPECT_FALSE(three.holds);
}

TEST(CheckConditionTest, EmptyAndSigned) {
  EXPECT_TRUE(CheckCondition(AnyGraph(Make(5, {})),
                             std::vector<double>(5, 0.1), 0.5)
                  .holds);
  const SignedGraph g = MakeSigned(3, {{0, 1, 0.0, 1.0}});
  const ConditionReport r =
      CheckCondition(AnyGraph(g), std::vector<double>(3, 1.0), 0.5);
  EXPECT_FALSE(r.holds);
  EXPECT_GT(r.worst_ratio, 1.0);
}

// At sizes where the seed can be enumerated, the condition needs eps > 1:
// its unit-weight complete-graph slack (n - 1) eps^2 gamma / (16 log n) stays
// below 1 for n <= 22.
TEST(CheckConditionTest, UnsatisfiableAtEnumerableSizes) {
  for (int n = 3; n <= 22; ++n) {
    EXPECT_FALSE(CheckCondition(AnyGraph(Complete(n)),
                                std::vector<double>(n, 1.0), 0.999)
                     .holds)
        << n;
  }
}

}  // namespace
}  // namespace coreset
