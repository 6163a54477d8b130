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


#include "coreset/l1_sampler.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "absl/strings/str_cat.h"

#include "coreset/random.h"

namespace coreset {

void ExactL1Sampler::Update(int64_t i, double w) {
  auto [it, inserted] = x_.try_emplace(i, w);
  if (!inserted) {
    it->second += w;
    if (it->second == 0.0) x_.erase(it);
  } else if (w == 0.0) {
    x_.erase(it);
  }
}

double ExactL1Sampler::Get(int64_t i) const {
  auto it = x_.find(i);
  return it == x_.end() ? 0.0 : it->second;
}

std::optional<L1Sample> ExactL1Sampler::SampleWithSeed(uint64_t seed) const {
  double total = 0.0;
  for (const auto& [i, v] : x_) total += std::abs(v);
  if (!(total > 0.0)) return std::nullopt;
  const double target = Rng(seed).Uniform() * total;
  double acc = 0.0;
  for (const auto& [i, v] : x_) {
    acc += std::abs(v);
    if (target < acc) return L1Sample{i, v};
  }
  // Rounding left target at the very top; return the last nonzero entry.
  const auto& [i, v] = *x_.rbegin();
  return L1Sample{i, v};
}

SketchL1Options SketchL1Options::ForMass(double mass) {
  SketchL1Options o;
  o.top_threshold = 8.0 / std::max(mass, 1e-12);
  o.levels = 12;
  return o;
}

absl::StatusOr<SketchL1Sampler> SketchL1Sampler::Create(
    uint64_t seed, SketchL1Options options) {
  if (options.levels < 1 || options.levels > 64 ||
      options.cells_per_level < 3 || !(options.top_threshold > 0.0) ||
      !std::isfinite(options.top_threshold)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "sketch sampler needs 1..64 levels, >= 3 cells and a positive "
        "threshold (got ",
        options.levels, ", ", options.cells_per_level, ", ",
        options.top_threshold, ")"));
  }
  return SketchL1Sampler(seed, options);
}

SketchL1Sampler::SketchL1Sampler(uint64_t seed, SketchL1Options options)
    : seed_(seed),
      options_(options),
      width_(options.cells_per_level / 3),
      cells_(static_cast<size_t>(options.levels) * 3 * width_) {}

double SketchL1Sampler::Key(uint64_t atom, double weight) const {
  const double u = HashUniform(seed_, atom);
  return -std::log1p(-u) / weight;
}

size_t SketchL1Sampler::Position(int level, int j, uint64_t atom) const {
  const uint64_t h = Mix64(atom ^ Mix64(seed_ + 0x51ed27 * (level * 3 + j + 1)));
  return (static_cast<size_t>(level) * 3 + j) * width_ + h % width_;
}

uint64_t SketchL1Sampler::Check(uint64_t atom, uint64_t index,
                                uint64_t weight_bits) const {
  return Mix64(Mix64(atom ^ seed_) ^ Mix64(index + 0x9e37) ^
               Mix64(weight_bits ^ 0x7f4a));
}

void SketchL1Sampler::Apply(int64_t index, uint64_t atom, double weight,
                            int sign) {
  if (!(weight > 0.0)) return;
  // key <= top iff u <= 1 - exp(-weight * top).
  if (weight != cached_weight_) {
    cached_weight_ = weight;
    cached_u_bound_ = -std::expm1(-weight * options_.top_threshold);
  }
  const double u = HashUniform(seed_, atom);
  if (u > cached_u_bound_) return;
  const double key = -std::log1p(-u) / weight;
  int deepest = options_.levels - 1;
  if (key > 0.0) {
    deepest = std::min<double>(deepest,
                               std::floor(std::log2(options_.top_threshold / key)));
  }
  const uint64_t idx = static_cast<uint64_t>(index);
  const uint64_t wbits = std::bit_cast<uint64_t>(weight);
  const uint64_t check = Check(atom, idx, wbits);
  const uint64_t s = static_cast<uint64_t>(static_cast<int64_t>(sign));
  for (int level = 0; level <= deepest; ++level) {
    for (int j = 0; j < 3; ++j) {
      Cell& c = cells_[Position(level, j, atom)];
      c.count += sign;
      c.atom_sum += s * atom;
      c.index_sum += s * idx;
      c.weight_sum += s * wbits;
      c.check_sum += s * check;
    }
  }
}

std::optional<AtomSample> SketchL1Sampler::SampleAtom() const {
  const size_t per_level = static_cast<size_t>(3) * width_;
  int level = options_.levels - 1;
  for (; level >= 0; --level) {
    const auto begin = cells_.begin() + level * per_level;
    if (std::any_of(begin, begin + per_level,
                    [](const Cell& c) { return !c.empty(); })) {
      break;
    }
  }
  if (level < 0) return std::nullopt;

  // Peel pure cells of this level.
  std::vector<Cell> cells(cells_.begin() + level * per_level,
                          cells_.begin() + (level + 1) * per_level);
  std::vector<AtomSample> atoms;
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t k = 0; k < cells.size(); ++k) {
      const Cell c = cells[k];
      if (c.count != 1 && c.count != -1) continue;
      const uint64_t s = static_cast<uint64_t>(c.count);
      const uint64_t atom = s * c.atom_sum;
      const uint64_t idx = s * c.index_sum;
      const uint64_t wbits = s * c.weight_sum;
      if (s * c.check_sum != Check(atom, idx, wbits)) continue;
      if (c.count == -1) return std::nullopt;
      atoms.push_back({static_cast<int64_t>(idx), atom,
                       std::bit_cast<double>(wbits)});
      for (int j = 0; j < 3; ++j) {
        Cell& t = cells[Position(level, j, atom) - level * per_level];
        t.count -= c.count;
        t.atom_sum -= s * atom;
        t.index_sum -= s * idx;
        t.weight_sum -= s * wbits;
        t.check_sum -= s * Check(atom, idx, wbits);
      }
      progress = true;
    }
  }
  if (!std::all_of(cells.begin(), cells.end(),
                   [](const Cell& c) { return c.empty(); })) {
    return std::nullopt;
  }
  const AtomSample* best = nullptr;
  double best_key = 0.0;
  for (const AtomSample& a : atoms) {
    const double key = Key(a.atom, a.weight);
    if (best == nullptr || key < best_key ||
        (key == best_key && a.atom < best->atom)) {
      best = &a;
      best_key = key;
    }
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

std::optional<L1Sample> SketchL1Sampler::Sample(
    const CountMinSketch& values) const {
  auto atom = SampleAtom();
  if (!atom) return std::nullopt;
  auto value = values.Query(atom->index);
  if (!value.ok()) return std::nullopt;
  return L1Sample{atom->index, *value};
}

}  // namespace coreset
