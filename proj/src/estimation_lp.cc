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


#include "coreset/estimation_lp.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace coreset {
namespace {

absl::Status CheckSize(size_t got, size_t want, const char* what) {
  if (got != want) {
    return absl::InvalidArgumentError(
        absl::StrCat(what, " has ", got, " entries, expected ", want));
  }
  return absl::OkStatus();
}

// sum_j w_ij x_j over the adjacency of i, with x strided by k at offset l.
template <typename G>
double NeighborMass(const G& view, VertexId i, std::span<const double> x,
                    int k = 1, int l = 0) {
  double mass = 0.0;
  for (const Neighbor& nb : view.neighbors(i)) mass += nb.w * x[nb.id * k + l];
  return mass;
}

bool IsIntegral(double v) { return v == 0.0 || v == 1.0; }

}  // namespace

absl::StatusOr<MaxCutLp> BuildMaxCutLp(const Graph& view,
                                       std::span<const double> rho) {
  const int n = view.num_vertices();
  if (auto s = CheckSize(rho.size(), n, "rho"); !s.ok()) return s;
  MaxCutLp lp;
  lp.n = n;
  for (int i = 0; i < n; ++i) {
    lp.model.AddVariable(absl::StrCat("x", i), 0.0, 1.0,
                         view.degree(i) - rho[i]);
  }
  for (int i = 0; i < n; ++i) {
    lp.model.AddVariable(absl::StrCat("s", i), 0.0, kInfinity, -1.0);
  }
  for (int i = 0; i < n; ++i) {
    lp.model.AddVariable(absl::StrCat("t", i), 0.0, kInfinity, -1.0);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<LpTerm> mass;
    for (const Neighbor& nb : view.neighbors(i)) mass.push_back({nb.id, nb.w});
    std::vector<LpTerm> upper = mass;
    upper.push_back({lp.s(i), -1.0});
    lp.model.AddRow(absl::StrCat("up", i), std::move(upper),
                    RowSense::kLessEqual, rho[i]);
    mass.push_back({lp.t(i), 1.0});
    lp.model.AddRow(absl::StrCat("lo", i), std::move(mass),
                    RowSense::kGreaterEqual, rho[i]);
  }
  return lp;
}

absl::StatusOr<CcLp> BuildCcLp(const SignedGraph& view, int k,
                               std::span<const double> rho) {
  if (k < 1) return absl::InvalidArgumentError("k must be at least 1");
  const int n = view.num_vertices();
  if (auto s = CheckSize(rho.size(), static_cast<size_t>(n) * k, "rho");
      !s.ok()) {
    return s;
  }
  CcLp lp;
  lp.n = n;
  lp.k = k;
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < k; ++l) {
      lp.model.AddVariable(absl::StrCat("x", i, "_", l), 0.0, 1.0,
                           0.5 * (rho[i * k + l] + view.minus_degree(i)));
    }
  }
  for (const char* prefix : {"s", "t"}) {
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < k; ++l) {
        lp.model.AddVariable(absl::StrCat(prefix, i, "_", l), 0.0, kInfinity,
                             -0.5);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < k; ++l) {
      std::vector<LpTerm> mass;
      for (const Neighbor& nb : view.neighbors(i)) {
        mass.push_back({lp.x(nb.id, l), nb.w});
      }
      std::vector<LpTerm> upper = mass;
      upper.push_back({lp.s(i, l), -1.0});
      lp.model.AddRow(absl::StrCat("up", i, "_", l), std::move(upper),
                      RowSense::kLessEqual, rho[i * k + l]);
      mass.push_back({lp.t(i, l), 1.0});
      lp.model.AddRow(absl::StrCat("lo", i, "_", l), std::move(mass),
                      RowSense::kGreaterEqual, rho[i * k + l]);
    }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<LpTerm> row;
    for (int l = 0; l < k; ++l) row.push_back({lp.x(i, l), 1.0});
    lp.model.AddRow(absl::StrCat("one", i), std::move(row), RowSense::kEqual,
                    1.0);
  }
  return lp;
}

absl::StatusOr<LpModel> BuildMaxCutDual(const Graph& view,
                                        std::span<const double> rho) {
  const int n = view.num_vertices();
  if (auto s = CheckSize(rho.size(), n, "rho"); !s.ok()) return s;
  LpModel model(ObjectiveSense::kMinimize);
  for (int i = 0; i < n; ++i) {
    model.AddVariable(absl::StrCat("u", i), 0.0, kInfinity, 1.0);
  }
  for (int i = 0; i < n; ++i) {
    model.AddVariable(absl::StrCat("z", i), -1.0, 1.0, rho[i]);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<LpTerm> row = {{i, 1.0}};
    for (const Neighbor& nb : view.neighbors(i)) row.push_back({n + nb.id, nb.w});
    model.AddRow(absl::StrCat("d", i), std::move(row), RowSense::kGreaterEqual,
                 view.degree(i) - rho[i]);
  }
  return model;
}

double MaxCutLpValueAt(const Graph& view, std::span<const double> rho,
                       std::span<const double> x) {
  double value = 0.0;
  for (VertexId i = 0; i < view.num_vertices(); ++i) {
    value += x[i] * (view.degree(i) - rho[i]) -
             std::abs(rho[i] - NeighborMass(view, i, x));
  }
  return value;
}

double CcLpValueAt(const SignedGraph& view, int k, std::span<const double> rho,
                   std::span<const double> x) {
  double value = 0.0;
  for (VertexId i = 0; i < view.num_vertices(); ++i) {
    for (int l = 0; l < k; ++l) {
      value += x[i * k + l] * (rho[i * k + l] + view.minus_degree(i)) -
               std::abs(rho[i * k + l] - NeighborMass(view, i, x, k, l));
    }
  }
  return 0.5 * value;
}

double MaxCutQuadratic(const Graph& view, std::span<const double> x) {
  double value = 0.0;
  for (VertexId i = 0; i < view.num_vertices(); ++i) {
    value += x[i] * (view.degree(i) - NeighborMass(view, i, x));
  }
  return value;
}

double CcQuadratic(const SignedGraph& view, int k, std::span<const double> x) {
  double sum = 0.0;
  for (VertexId i = 0; i < view.num_vertices(); ++i) {
    for (int l = 0; l < k; ++l) {
      sum += x[i * k + l] * NeighborMass(view, i, x, k, l);
    }
  }
  return view.c_minus_total() + 0.5 * sum;
}

CutSolution RoundToCut(const Graph& view, std::span<const double> x) {
  const int n = view.num_vertices();
  std::vector<double> y(x.begin(), x.end());
  for (VertexId i = 0; i < n; ++i) {
    if (IsIntegral(y[i])) continue;
    const double slope = view.degree(i) - 2.0 * NeighborMass(view, i, y);
    y[i] = slope > 0.0 ? 1.0 : 0.0;
  }
  CutSolution cut;
  cut.side.resize(n);
  for (int i = 0; i < n; ++i) cut.side[i] = y[i] == 1.0;
  cut.value = CutValue(view, cut.side);
  return cut;
}

absl::StatusOr<ClusteringSolution> RoundToClustering(
    const SignedGraph& view, int k, std::span<const double> x) {
  if (k < 1) return absl::InvalidArgumentError("k must be at least 1");
  const int n = view.num_vertices();
  if (auto s = CheckSize(x.size(), static_cast<size_t>(n) * k, "x"); !s.ok()) {
    return s;
  }
  std::vector<double> y(x.begin(), x.end());
  ClusteringSolution result;
  result.labels.assign(n, 0);
  for (VertexId i = 0; i < n; ++i) {
    double sum = 0.0;
    int unit = -1;
    bool integral = true;
    for (int l = 0; l < k; ++l) {
      const double v = y[i * k + l];
      sum += v;
      if (v == 1.0) unit = l;
      else if (v != 0.0) integral = false;
    }
    if (std::abs(sum - 1.0) > 1e-7) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", i, " sums to ", sum, ", expected 1"));
    }
    if (integral && unit >= 0) {
      result.labels[i] = unit;
      continue;
    }
    int best = 0;
    double best_mass = NeighborMass(view, i, y, k, 0);
    for (int l = 1; l < k; ++l) {
      const double mass = NeighborMass(view, i, y, k, l);
      if (mass > best_mass) {
        best = l;
        best_mass = mass;
      }
    }
    for (int l = 0; l < k; ++l) y[i * k + l] = l == best ? 1.0 : 0.0;
    result.labels[i] = best;
  }
  result.value = CcValue(view, result.labels);
  return result;
}

}  // namespace coreset
