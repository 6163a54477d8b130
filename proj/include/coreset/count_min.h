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


#ifndef CORESET_COUNT_MIN_H_
#define CORESET_COUNT_MIN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace coreset {

// CountMin sketch over indices [0, n) with real-valued signed updates. Row r
// hashes index i to ((a_r i + b_r) mod (2^61 - 1)) mod width. A query returns
// the minimum over rows, which never underestimates when every coordinate is
// nonnegative.
class CountMinSketch {
 public:
  CountMinSketch() = default;

  static absl::StatusOr<CountMinSketch> Create(int64_t n, int width, int depth,
                                               uint64_t seed);

  // Width ceil(e k) and depth ceil(ln(1 / delta_fail)): a query exceeds x_i
  // by more than |x|_1 / k with probability at most delta_fail.
  static absl::StatusOr<CountMinSketch> ForAccuracy(int64_t n, double k,
                                                    double delta_fail,
                                                    uint64_t seed);

  absl::Status Update(int64_t i, double w);
  absl::StatusOr<double> Query(int64_t i) const;

  // Adds the counters of a sketch with the same dimensions and hashes.
  absl::Status Merge(const CountMinSketch& other);

  // Little-endian layout: "CMS1", u32 version, u64 n, u32 width, u32 depth,
  // then (a, b) as u64 per row, then width * depth f64 counters row-major.
  std::string Serialize() const;
  static absl::StatusOr<CountMinSketch> Deserialize(absl::string_view bytes);

  int64_t n() const { return n_; }
  int width() const { return width_; }
  int depth() const { return depth_; }
  int64_t num_counters() const {
    return static_cast<int64_t>(counters_.size());
  }

  friend bool operator==(const CountMinSketch&, const CountMinSketch&) =
      default;

 private:
  size_t Cell(int row, uint64_t i) const;

  int64_t n_ = 0;
  int width_ = 0;
  int depth_ = 0;
  std::vector<uint64_t> a_;
  std::vector<uint64_t> b_;
  std::vector<double> counters_;
};

inline constexpr int64_t kMaxCountMinCounters = int64_t{1} << 26;

}  // namespace coreset

#endif  // CORESET_COUNT_MIN_H_
