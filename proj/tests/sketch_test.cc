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


#include <cmath>
#include <cstdint>
#include <vector>

#include "gtest/gtest.h"

#include "coreset/count_min.h"
#include "coreset/l1_sampler.h"
#include "coreset/random.h"

namespace coreset {
namespace {

CountMinSketch MakeCm(int64_t n, int width, int depth, uint64_t seed) {
  auto cm = CountMinSketch::Create(n, width, depth, seed);
  EXPECT_TRUE(cm.ok());
  return *std::move(cm);
}

double QueryOk(const CountMinSketch& cm, int64_t i) {
  auto q = cm.Query(i);
  EXPECT_TRUE(q.ok());
  return *q;
}

TEST(CountMinTest, HandValues) {
  CountMinSketch cm = MakeCm(10, 4, 3, 1);
  ASSERT_TRUE(cm.Update(5, 3.0).ok());
  EXPECT_EQ(QueryOk(cm, 5), 3.0);
  ASSERT_TRUE(cm.Update(7, 2.0).ok());
  ASSERT_TRUE(cm.Update(7, -2.0).ok());
  EXPECT_EQ(QueryOk(cm, 7), 0.0);
  EXPECT_EQ(cm.Update(10, 1.0).code(), absl::StatusCode::kOutOfRange);
  EXPECT_EQ(cm.Query(-1).status().code(), absl::StatusCode::kOutOfRange);
}

TEST(CountMinTest, InsertDeleteRestoresCounters) {
  CountMinSketch cm = MakeCm(100, 16, 4, 2);
  for (int i = 0; i < 100; i += 3) ASSERT_TRUE(cm.Update(i, 1.0).ok());
  const CountMinSketch before = cm;
  ASSERT_TRUE(cm.Update(41, 1.0).ok());
  ASSERT_TRUE(cm.Update(41, -1.0).ok());
  EXPECT_EQ(cm, before);
}

TEST(CountMinTest, DimensionsForAccuracy) {
  auto cm = CountMinSketch::ForAccuracy(1000, 100, 0.01, 3);
  ASSERT_TRUE(cm.ok());
  EXPECT_EQ(cm->width(), 272);  // ceil(e * 100)
  EXPECT_EQ(cm->depth(), 5);    // ceil(ln 100)
  EXPECT_FALSE(CountMinSketch::ForAccuracy(10, 0, 0.1, 1).ok());
  EXPECT_FALSE(CountMinSketch::ForAccuracy(10, 5, 1.0, 1).ok());
  EXPECT_FALSE(CountMinSketch::Create(0, 1, 1, 1).ok());
}

TEST(CountMinTest, NeverUnderestimatesInsertOnly) {
  Rng rng(4);
  CountMinSketch cm = MakeCm(500, 20, 3, 4);
  std::vector<double> x(500, 0.0);
  for (int t = 0; t < 5000; ++t) {
    const int64_t i = rng.UniformInt(500);
    const double w = 0.5 + rng.Uniform();
    x[i] += w;
    ASSERT_TRUE(cm.Update(i, w).ok());
  }
  for (int i = 0; i < 500; ++i) EXPECT_GE(QueryOk(cm, i), x[i] - 1e-9);
}

TEST(CountMinTest, LinearUnderConcatenation) {
  CountMinSketch a = MakeCm(300, 32, 4, 9);
  CountMinSketch b = MakeCm(300, 32, 4, 9);
  CountMinSketch both = MakeCm(300, 32, 4, 9);
  Rng rng(10);
  for (int t = 0; t < 2000; ++t) {
    const int64_t i = rng.UniformInt(300);
    const double w = static_cast<double>(rng.UniformInt(5)) - 1.0;
    ASSERT_TRUE((t < 1000 ? a : b).Update(i, w).ok());
    ASSERT_TRUE(both.Update(i, w).ok());
  }
  ASSERT_TRUE(a.Merge(b).ok());
  EXPECT_EQ(a, both);
  EXPECT_FALSE(a.Merge(MakeCm(300, 32, 4, 11)).ok());
}

TEST(CountMinTest, SerializationRoundTripAndCorruption) {
  CountMinSketch cm = MakeCm(50, 8, 3, 12);
  for (int i = 0; i < 50; ++i) ASSERT_TRUE(cm.Update(i, i * 0.25 - 3).ok());
  const std::string blob = cm.Serialize();
  EXPECT_EQ(blob.substr(0, 4), "CMS1");
  EXPECT_EQ(blob.size(), 4 + 4 + 8 + 4 + 4 + 3 * 16 + 24 * 8u);
  auto back = CountMinSketch::Deserialize(blob);
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(*back, cm);
  EXPECT_FALSE(CountMinSketch::Deserialize("XMS1").ok());
  EXPECT_FALSE(CountMinSketch::Deserialize(blob.substr(0, blob.size() - 1)).ok());
  EXPECT_FALSE(CountMinSketch::Deserialize(blob + "x").ok());
  std::string bad_version = blob;
  bad_version[4] = 2;
  EXPECT_FALSE(CountMinSketch::Deserialize(bad_version).ok());
}

// Heavy-tailed stream: the overestimate of a random light item stays within
// |x|_1 / k in nearly every trial.
TEST(CountMinTest, AdditiveErrorBound) {
  constexpr int kTrials = 200;
  int within = 0;
  for (int t = 0; t < kTrials; ++t) {
    auto cm = CountMinSketch::ForAccuracy(10000, 100, 0.01, DeriveSeed(5, t));
    ASSERT_TRUE(cm.ok());
    Rng rng(DeriveSeed(6, t));
    std::vector<double> x(10000, 0.0);
    double total = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const double w = i < 10 ? 500.0 : 1.0;
      x[i] = w;
      total += w;
      ASSERT_TRUE(cm->Update(i, w).ok());
    }
    const int64_t q = 10 + rng.UniformInt(9990);
    within += QueryOk(*cm, q) - x[q] <= total / 100;
  }
  EXPECT_GE(within, 0.99 * kTrials);
}

double TotalVariation(const std::vector<double>& counts,
                      const std::vector<double>& p, double draws) {
  double tv = 0.0;
  for (size_t i = 0; i < p.size(); ++i) tv += std::abs(counts[i] / draws - p[i]);
  return tv / 2.0;
}

TEST(ExactL1SamplerTest, Basics) {
  ExactL1Sampler s(1);
  EXPECT_FALSE(s.Sample().has_value());
  s.Update(7, 2.5);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    auto draw = s.SampleWithSeed(seed);
    ASSERT_TRUE(draw.has_value());
    EXPECT_EQ(draw->index, 7);
    EXPECT_EQ(draw->value, 2.5);
  }
  s.Update(7, -2.5);
  EXPECT_FALSE(s.Sample().has_value());
  EXPECT_EQ(s.StoredItems(), 0);
}

TEST(ExactL1SamplerTest, MatchesDistribution) {
  ExactL1Sampler s(2);
  std::vector<double> p(20);
  double total = 0.0;
  for (int i = 0; i < 20; ++i) {
    s.Update(i, i + 1.0);
    total += i + 1.0;
  }
  for (int i = 0; i < 20; ++i) p[i] = (i + 1.0) / total;
  std::vector<double> counts(20, 0.0);
  constexpr int kDraws = 100000;
  for (int t = 0; t < kDraws; ++t) ++counts[s.SampleWithSeed(t)->index];
  EXPECT_LE(TotalVariation(counts, p, kDraws), 0.02);
}

TEST(SketchL1SamplerTest, SingleIndexAndEmpty) {
  auto s = SketchL1Sampler::Create(3, SketchL1Options{});
  ASSERT_TRUE(s.ok());
  CountMinSketch cm = MakeCm(100, 8, 2, 3);
  EXPECT_FALSE(s->SampleAtom().has_value());
  for (uint64_t a = 0; a < 5; ++a) {
    s->Insert(42, a, 1.0);
    ASSERT_TRUE(cm.Update(42, 1.0).ok());
  }
  auto draw = s->Sample(cm);
  ASSERT_TRUE(draw.has_value());
  EXPECT_EQ(draw->index, 42);
  EXPECT_EQ(draw->value, 5.0);
  for (uint64_t a = 0; a < 5; ++a) s->Delete(42, a, 1.0);
  EXPECT_FALSE(s->SampleAtom().has_value());
}

TEST(SketchL1SamplerTest, DeleteOfAbsentAtomFails) {
  auto s = SketchL1Sampler::Create(4, SketchL1Options{});
  ASSERT_TRUE(s.ok());
  s->Delete(3, 99, 1.0);
  EXPECT_FALSE(s->SampleAtom().has_value());
  EXPECT_FALSE(SketchL1Sampler::Create(1, {0, 1.0, 12}).ok());
  EXPECT_FALSE(SketchL1Sampler::Create(1, {4, 1.0, 2}).ok());
}

TEST(SketchL1SamplerTest, ChurnLeavesTheSameState) {
  auto plain = SketchL1Sampler::Create(5, SketchL1Options::ForMass(60));
  auto churned = SketchL1Sampler::Create(5, SketchL1Options::ForMass(60));
  ASSERT_TRUE(plain.ok());
  ASSERT_TRUE(churned.ok());
  for (uint64_t a = 0; a < 60; ++a) plain->Insert(a % 7, a, 1.0 + a % 3);
  for (uint64_t a = 0; a < 200; ++a) churned->Insert(a % 7, a, 1.0 + a % 3);
  for (uint64_t a = 60; a < 200; ++a) churned->Delete(a % 7, a, 1.0 + a % 3);
  auto x = plain->SampleAtom();
  auto y = churned->SampleAtom();
  ASSERT_TRUE(x.has_value());
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ(x->atom, y->atom);
  EXPECT_EQ(x->index, y->index);
}

// Independent samplers over a weighted vector; every index is two atoms.
TEST(SketchL1SamplerTest, MatchesWeightedDistribution) {
  constexpr int kDim = 30;
  std::vector<double> p(kDim);
  double total = 0.0;
  for (int i = 0; i < kDim; ++i) total += 2.0 * (1 + i % 5);
  for (int i = 0; i < kDim; ++i) p[i] = 2.0 * (1 + i % 5) / total;
  std::vector<double> counts(kDim, 0.0);
  int failures = 0;
  constexpr int kDraws = 20000;
  for (int t = 0; t < kDraws; ++t) {
    auto s = SketchL1Sampler::Create(DeriveSeed(7, t),
                                     SketchL1Options::ForMass(total));
    ASSERT_TRUE(s.ok());
    for (int i = 0; i < kDim; ++i) {
      s->Insert(i, 2 * i, 1 + i % 5);
      s->Insert(i, 2 * i + 1, 1 + i % 5);
    }
    auto draw = s->SampleAtom();
    if (!draw) {
      ++failures;
      continue;
    }
    ++counts[draw->index];
  }
  EXPECT_LE(failures, kDraws / 100);
  EXPECT_LE(TotalVariation(counts, p, kDraws - failures), 0.03);
}

}  // namespace
}  // namespace coreset
