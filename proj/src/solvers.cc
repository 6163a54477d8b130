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


#include "coreset/solvers.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"

#include "coreset/random.h"

namespace coreset {
namespace {

constexpr double kStrictGain = 1e-12;

// Sum of weights to same-side neighbors minus weights to other-side ones:
// the change in cut value if v is flipped.
double FlipGain(const Graph& g, std::span<const uint8_t> side, VertexId v) {
  double gain = 0.0;
  for (const Neighbor& nb : g.neighbors(v)) {
    gain += side[nb.id] == side[v] ? nb.w : -nb.w;
  }
  return gain;
}

// Score change per target label for relabeling v: out[l] is the eta mass
// from v to neighbors currently labeled l.
void LabelMass(const SignedGraph& g, std::span<const int> labels, VertexId v,
               std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (const Neighbor& nb : g.neighbors(v)) out[labels[nb.id]] += nb.w;
}

}  // namespace

double CutValue(const Graph& g, std::span<const uint8_t> side) {
  double value = 0.0;
  for (const Edge& e : g.edges()) {
    if (side[e.u] != side[e.v]) value += e.w;
  }
  return value;
}

absl::StatusOr<CutSolution> MaxCutExact(const Graph& g, int limit) {
  const int n = g.num_vertices();
  if (n > limit) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "exact max cut limited to ", limit, " vertices, got ", n));
  }
  CutSolution best;
  best.side.assign(n, 0);
  if (n <= 1) return best;

  std::vector<uint8_t> side(n, 0);
  double value = 0.0;
  uint64_t mask = 0;
  uint64_t best_mask = 0;
  double best_value = 0.0;
  const uint64_t states = uint64_t{1} << (n - 1);
  for (uint64_t t = 1; t < states; ++t) {
    const VertexId v = 1 + std::countr_zero(t);
    value += FlipGain(g, side, v);
    side[v] ^= 1;
    mask ^= uint64_t{1} << v;
    if (value > best_value + 1e-9 ||
        (value > best_value - 1e-9 && mask < best_mask)) {
      best_value = std::max(value, best_value);
      best_mask = mask;
    }
  }
  for (int i = 0; i < n; ++i) best.side[i] = (best_mask >> i) & 1;
  best.value = CutValue(g, best.side);
  return best;
}

CutSolution MaxCutLocalSearch(const Graph& g, int restarts, uint64_t seed) {
  const int n = g.num_vertices();
  CutSolution best;
  best.side.assign(n, 0);
  best.value = -1.0;
  std::vector<uint8_t> side(n);
  std::vector<double> gain(n);
  for (int r = 0; r < std::max(1, restarts); ++r) {
    Rng rng(DeriveSeed(seed, r));
    for (int i = 0; i < n; ++i) side[i] = rng.Next() >> 63;
    for (int i = 0; i < n; ++i) gain[i] = FlipGain(g, side, i);
    double value = CutValue(g, side);
    bool improved = true;
    while (improved) {
      improved = false;
      for (VertexId v = 0; v < n; ++v) {
        if (gain[v] <= kStrictGain) continue;
        value += gain[v];
        side[v] ^= 1;
        gain[v] = -gain[v];
        for (const Neighbor& nb : g.neighbors(v)) {
          gain[nb.id] += side[nb.id] == side[v] ? 2 * nb.w : -2 * nb.w;
        }
        improved = true;
      }
    }
    if (value > best.value + kStrictGain) {
      best.side = side;
      best.value = value;
    }
  }
  best.value = CutValue(g, best.side);
  return best;
}

bool IsFlipLocalOptimum(const Graph& g, std::span<const uint8_t> side,
                        double tolerance) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (FlipGain(g, side, v) > tolerance) return false;
  }
  return true;
}

double CcValue(const SignedGraph& g, std::span<const int> labels) {
  double value = g.c_minus_total();
  for (const SignedEdge& e : g.edges()) {
    if (labels[e.u] == labels[e.v]) value += e.eta();
  }
  return value;
}

int64_t CountCanonicalLabelings(int n, int k) {
  if (n == 0) return 1;
  k = std::min(k, n);
  if (k <= 0) return 0;
  // Stirling numbers of the second kind, row by row, saturating.
  constexpr int64_t kMax = std::numeric_limits<int64_t>::max();
  std::vector<int64_t> row(k + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      const __int128 next = static_cast<__int128>(j) * row[j] + row[j - 1];
      row[j] = next > kMax ? kMax : static_cast<int64_t>(next);
    }
    row[0] = 0;
  }
  __int128 total = 0;
  for (int j = 1; j <= k; ++j) total += row[j];
  return total > kMax ? kMax : static_cast<int64_t>(total);
}

absl::StatusOr<ClusteringSolution> CcExact(const SignedGraph& g, int k,
                                           int64_t limit) {
  if (k < 1) return absl::InvalidArgumentError("k must be at least 1");
  const int n = g.num_vertices();
  const int64_t count = CountCanonicalLabelings(n, k);
  if (count > limit) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "exact clustering needs ", count, " labelings, limit is ", limit));
  }
  ClusteringSolution best;
  best.labels.assign(n, 0);
  if (n == 0) {
    best.value = 0.0;
    return best;
  }
  // Neighbors with smaller ids, so a partial labeling's score is known.
  std::vector<std::vector<Neighbor>> earlier(n);
  for (const SignedEdge& e : g.edges()) earlier[e.v].push_back({e.u, e.eta()});

  std::vector<int> labels(n, 0);
  std::vector<int> used(n + 1, 0);  // used[i]: labels in use among 0..i-1
  std::vector<double> partial(n + 1, 0.0);
  double best_value = -std::numeric_limits<double>::infinity();
  used[1] = 1;
  // Iterative depth-first search in lexicographic order.
  int depth = 1;
  labels[0] = 0;
  if (n > 1) labels[1] = -1;
  while (depth >= 1) {
    if (depth == n) {
      if (partial[n] > best_value + kStrictGain) {
        best_value = partial[n];
        best.labels = labels;
      }
      --depth;
      continue;
    }
    const int next = labels[depth] + 1;
    const int max_label = std::min(k - 1, used[depth]);
    if (next > max_label) {
      labels[depth] = -1;
      --depth;
      continue;
    }
    labels[depth] = next;
    double gain = 0.0;
    for (const Neighbor& nb : earlier[depth]) {
      if (labels[nb.id] == next) gain += nb.w;
    }
    partial[depth + 1] = partial[depth] + gain;
    used[depth + 1] = std::max(used[depth], next + 1);
    ++depth;
    if (depth < n) labels[depth] = -1;
  }
  best.value = CcValue(g, best.labels);
  return best;
}

ClusteringSolution CcLocalSearch(const SignedGraph& g, int k, int restarts,
                                 uint64_t seed) {
  const int n = g.num_vertices();
  k = std::max(1, k);
  ClusteringSolution best;
  best.labels.assign(n, 0);
  best.value = -std::numeric_limits<double>::infinity();
  std::vector<int> labels(n);
  std::vector<double> mass(k);
  for (int r = 0; r < std::max(1, restarts); ++r) {
    Rng rng(DeriveSeed(seed, r));
    for (int i = 0; i < n; ++i) labels[i] = static_cast<int>(rng.UniformInt(k));
    bool improved = true;
    while (improved) {
      improved = false;
      for (VertexId v = 0; v < n; ++v) {
        LabelMass(g, labels, v, mass);
        int target = labels[v];
        for (int l = 0; l < k; ++l) {
          if (mass[l] > mass[target] + kStrictGain) target = l;
        }
        if (target != labels[v]) {
          labels[v] = target;
          improved = true;
        }
      }
    }
    const double value = CcValue(g, labels);
    if (value > best.value + kStrictGain) {
      best.labels = labels;
      best.value = value;
    }
  }
  return best;
}

bool IsRelabelLocalOptimum(const SignedGraph& g, int k,
                           std::span<const int> labels, double tolerance) {
  std::vector<double> mass(std::max(1, k));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    LabelMass(g, labels, v, mass);
    for (int l = 0; l < k; ++l) {
      if (mass[l] > mass[labels[v]] + tolerance) return false;
    }
  }
  return true;
}

absl::StatusOr<KRestrictionResult> KRestrictionCheck(const SignedGraph& g,
                                                     double epsilon,
                                                     int64_t limit) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    return absl::InvalidArgumentError("epsilon must lie in (0, 1]");
  }
  const int n = g.num_vertices();
  KRestrictionResult result;
  result.k = static_cast<int>(std::ceil(1.0 / epsilon - 1e-9));
  auto unrestricted = CcExact(g, std::max(1, n), limit);
  if (!unrestricted.ok()) return unrestricted.status();
  auto restricted = CcExact(g, std::min(result.k, std::max(1, n)), limit);
  if (!restricted.ok()) return restricted.status();
  result.opt_unrestricted = unrestricted->value;
  result.opt_k = restricted->value;
  result.ratio = result.opt_unrestricted > 0.0
                     ? result.opt_k / result.opt_unrestricted
                     : 1.0;
  return result;
}

}  // namespace coreset
