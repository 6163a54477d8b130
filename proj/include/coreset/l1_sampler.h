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


#ifndef CORESET_L1_SAMPLER_H_
#define CORESET_L1_SAMPLER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"

#include "coreset/count_min.h"

namespace coreset {

struct L1Sample {
  int64_t index = 0;
  // Estimate of x_index.
  double value = 0.0;
};

// Stores the vector exactly and draws index i with probability
// |x_i| / |x|_1. Space grows with the support.
class ExactL1Sampler {
 public:
  explicit ExactL1Sampler(uint64_t seed) : seed_(seed) {}

  void Update(int64_t i, double w);

  // Draw determined by the construction seed; the value is x_i exactly.
  std::optional<L1Sample> Sample() const { return SampleWithSeed(seed_); }
  std::optional<L1Sample> SampleWithSeed(uint64_t seed) const;

  double Get(int64_t i) const;
  int64_t StoredItems() const { return static_cast<int64_t>(x_.size()); }

 private:
  uint64_t seed_;
  std::map<int64_t, double> x_;
};

struct SketchL1Options {
  // Level l keeps atoms whose key is at most top_threshold * 2^-l.
  int levels = 48;
  double top_threshold = 65536.0;
  // Cells per level, split evenly over three hash positions.
  int cells_per_level = 24;

  // Levels sized for a vector whose l1 mass is about `mass`: level 0 holds
  // about eight atoms in expectation.
  static SketchL1Options ForMass(double mass);
};

// One atom recovered by SketchL1Sampler.
struct AtomSample {
  int64_t index = 0;
  uint64_t atom = 0;
  double weight = 0.0;
};

// Turnstile l1 sampler for vectors built from positive atoms. An atom is an
// (index, id, weight) triple; a delete must repeat the id, index and weight
// of the insert it cancels. Every atom gets the key -ln(1 - u) / weight with
// u a hash of its id, so the atom of minimum key is drawn with probability
// weight / total weight and its index with probability x_i / |x|_1. Levels
// of geometrically shrinking key thresholds each hold an invertible Bloom
// lookup table; a draw decodes the deepest nonempty level, which contains
// the minimum.
class SketchL1Sampler {
 public:
  static absl::StatusOr<SketchL1Sampler> Create(uint64_t seed,
                                                SketchL1Options options);

  void Insert(int64_t index, uint64_t atom, double weight) {
    Apply(index, atom, weight, +1);
  }
  void Delete(int64_t index, uint64_t atom, double weight) {
    Apply(index, atom, weight, -1);
  }

  // Empty when the vector is zero, the deepest nonempty level does not
  // decode, or the stream deleted an atom it never inserted.
  std::optional<AtomSample> SampleAtom() const;

  // SampleAtom with the value read from a CountMin over the same vector.
  std::optional<L1Sample> Sample(const CountMinSketch& values) const;

  int64_t StoredItems() const { return static_cast<int64_t>(cells_.size()); }

 private:
  struct Cell {
    int64_t count = 0;
    uint64_t atom_sum = 0;
    uint64_t index_sum = 0;
    uint64_t weight_sum = 0;
    uint64_t check_sum = 0;

    bool empty() const {
      return count == 0 && atom_sum == 0 && index_sum == 0 &&
             weight_sum == 0 && check_sum == 0;
    }
  };

  SketchL1Sampler(uint64_t seed, SketchL1Options options);

  void Apply(int64_t index, uint64_t atom, double weight, int sign);
  double Key(uint64_t atom, double weight) const;
  size_t Position(int level, int j, uint64_t atom) const;
  uint64_t Check(uint64_t atom, uint64_t index, uint64_t weight_bits) const;

  uint64_t seed_;
  SketchL1Options options_;
  int width_;
  std::vector<Cell> cells_;
  // Cache of the inclusion bound on u for the last weight seen.
  double cached_weight_ = -1.0;
  double cached_u_bound_ = 0.0;
};

}  // namespace coreset

#endif  // CORESET_L1_SAMPLER_H_
