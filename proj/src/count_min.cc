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


#include "coreset/count_min.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <numbers>
#include <type_traits>

#include "absl/strings/str_cat.h"

#include "coreset/random.h"

namespace coreset {
namespace {

constexpr uint64_t kPrime = (uint64_t{1} << 61) - 1;
constexpr char kMagic[4] = {'C', 'M', 'S', '1'};
constexpr uint32_t kVersion = 1;

uint64_t MulMod(uint64_t a, uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  uint64_t r = static_cast<uint64_t>(p & kPrime) + static_cast<uint64_t>(p >> 61);
  if (r >= kPrime) r -= kPrime;
  return r;
}

template <typename T>
void Put(std::string& out, T value) {
  uint64_t bits;
  if constexpr (std::is_same_v<T, double>) {
    bits = std::bit_cast<uint64_t>(value);
  } else {
    bits = static_cast<uint64_t>(value);
  }
  for (size_t k = 0; k < sizeof(T); ++k) {
    out.push_back(static_cast<char>((bits >> (8 * k)) & 0xff));
  }
}

class Reader {
 public:
  explicit Reader(absl::string_view bytes) : bytes_(bytes) {}

  template <typename T>
  bool Get(T& value) {
    if (bytes_.size() - pos_ < sizeof(T)) return false;
    uint64_t bits = 0;
    for (size_t k = 0; k < sizeof(T); ++k) {
      bits |= static_cast<uint64_t>(static_cast<uint8_t>(bytes_[pos_ + k]))
              << (8 * k);
    }
    pos_ += sizeof(T);
    if constexpr (std::is_same_v<T, double>) {
      value = std::bit_cast<double>(bits);
    } else {
      value = static_cast<T>(bits);
    }
    return true;
  }

  bool done() const { return pos_ == bytes_.size(); }

 private:
  absl::string_view bytes_;
  size_t pos_ = 0;
};

absl::Status CheckShape(int64_t n, int64_t width, int64_t depth) {
  if (n < 1 || width < 1 || depth < 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "CountMin needs n, width, depth >= 1 (got ", n, ", ", width, ", ",
        depth, ")"));
  }
  if (width * depth > kMaxCountMinCounters) {
    return absl::ResourceExhaustedError(
        absl::StrCat("CountMin with ", width, " x ", depth, " counters"));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<CountMinSketch> CountMinSketch::Create(int64_t n, int width,
                                                      int depth,
                                                      uint64_t seed) {
  if (auto s = CheckShape(n, width, depth); !s.ok()) return s;
  CountMinSketch cm;
  cm.n_ = n;
  cm.width_ = width;
  cm.depth_ = depth;
  Rng rng(seed);
  for (int r = 0; r < depth; ++r) {
    cm.a_.push_back(1 + rng.UniformInt(kPrime - 1));
    cm.b_.push_back(rng.UniformInt(kPrime));
  }
  cm.counters_.assign(static_cast<size_t>(width) * depth, 0.0);
  return cm;
}

absl::StatusOr<CountMinSketch> CountMinSketch::ForAccuracy(int64_t n, double k,
                                                           double delta_fail,
                                                           uint64_t seed) {
  if (!(k > 0.0) || !(delta_fail > 0.0 && delta_fail < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("CountMin needs k > 0 and delta in (0, 1), got k = ", k,
                     ", delta = ", delta_fail));
  }
  const double width = std::ceil(std::numbers::e * k);
  const double depth = std::max(1.0, std::ceil(std::log(1.0 / delta_fail)));
  if (width > static_cast<double>(kMaxCountMinCounters)) {
    return absl::ResourceExhaustedError(
        absl::StrCat("CountMin width ", width, " too large"));
  }
  return Create(n, static_cast<int>(width), static_cast<int>(depth), seed);
}

size_t CountMinSketch::Cell(int row, uint64_t i) const {
  const uint64_t h = MulMod(a_[row], i) + b_[row];
  const uint64_t reduced = h >= kPrime ? h - kPrime : h;
  return static_cast<size_t>(row) * width_ + reduced % width_;
}

absl::Status CountMinSketch::Update(int64_t i, double w) {
  if (i < 0 || i >= n_) {
    return absl::OutOfRangeError(
        absl::StrCat("CountMin index ", i, " outside [0, ", n_, ")"));
  }
  for (int r = 0; r < depth_; ++r) counters_[Cell(r, i)] += w;
  return absl::OkStatus();
}

absl::StatusOr<double> CountMinSketch::Query(int64_t i) const {
  if (i < 0 || i >= n_) {
    return absl::OutOfRangeError(
        absl::StrCat("CountMin index ", i, " outside [0, ", n_, ")"));
  }
  double best = counters_[Cell(0, i)];
  for (int r = 1; r < depth_; ++r) best = std::min(best, counters_[Cell(r, i)]);
  return best;
}

absl::Status CountMinSketch::Merge(const CountMinSketch& other) {
  if (n_ != other.n_ || width_ != other.width_ || depth_ != other.depth_ ||
      a_ != other.a_ || b_ != other.b_) {
    return absl::InvalidArgumentError(
        "CountMin merge needs identical dimensions and hashes");
  }
  for (size_t k = 0; k < counters_.size(); ++k) {
    counters_[k] += other.counters_[k];
  }
  return absl::OkStatus();
}

std::string CountMinSketch::Serialize() const {
  std::string out(kMagic, 4);
  Put<uint32_t>(out, kVersion);
  Put<uint64_t>(out, n_);
  Put<uint32_t>(out, width_);
  Put<uint32_t>(out, depth_);
  for (int r = 0; r < depth_; ++r) {
    Put<uint64_t>(out, a_[r]);
    Put<uint64_t>(out, b_[r]);
  }
  for (double c : counters_) Put<double>(out, c);
  return out;
}

absl::StatusOr<CountMinSketch> CountMinSketch::Deserialize(
    absl::string_view bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    return absl::InvalidArgumentError("not a CountMin blob (bad magic)");
  }
  Reader in(bytes.substr(4));
  uint32_t version = 0, width = 0, depth = 0;
  uint64_t n = 0;
  if (!in.Get(version) || !in.Get(n) || !in.Get(width) || !in.Get(depth)) {
    return absl::InvalidArgumentError("truncated CountMin header");
  }
  if (version != kVersion) {
    return absl::InvalidArgumentError(
        absl::StrCat("unsupported CountMin version ", version));
  }
  if (auto s = CheckShape(static_cast<int64_t>(n), width, depth); !s.ok()) {
    return s;
  }
  CountMinSketch cm;
  cm.n_ = static_cast<int64_t>(n);
  cm.width_ = static_cast<int>(width);
  cm.depth_ = static_cast<int>(depth);
  cm.a_.resize(depth);
  cm.b_.resize(depth);
  for (uint32_t r = 0; r < depth; ++r) {
    if (!in.Get(cm.a_[r]) || !in.Get(cm.b_[r])) {
      return absl::InvalidArgumentError("truncated CountMin hashes");
    }
    if (cm.a_[r] == 0 || cm.a_[r] >= kPrime || cm.b_[r] >= kPrime) {
      return absl::InvalidArgumentError("CountMin hash outside the field");
    }
  }
  cm.counters_.resize(static_cast<size_t>(width) * depth);
  for (double& c : cm.counters_) {
    if (!in.Get(c)) return absl::InvalidArgumentError("truncated counters");
  }
  if (!in.done()) return absl::InvalidArgumentError("trailing CountMin bytes");
  return cm;
}

}  // namespace coreset
