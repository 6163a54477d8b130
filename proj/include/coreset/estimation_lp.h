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


#ifndef CORESET_ESTIMATION_LP_H_
#define CORESET_ESTIMATION_LP_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"

#include "coreset/graph.h"
#include "coreset/lp_model.h"
#include "coreset/solvers.h"

namespace coreset {

// Linearized max-cut program for a guess rho of each vertex's weight towards
// side 1:
//
//   max  sum_i x_i (d_i - rho_i) - s_i - t_i
//   s.t. sum_j w_ij x_j - s_i <= rho_i
//        sum_j w_ij x_j + t_i >= rho_i
//        0 <= x_i <= 1,  s_i, t_i >= 0
//
// Variables are laid out as x_0..x_{n-1}, s_0.., t_0..; rows alternate the
// two constraints of each vertex.
struct MaxCutLp {
  int n = 0;
  LpModel model;

  int x(int i) const { return i; }
  int s(int i) const { return n + i; }
  int t(int i) const { return 2 * n + i; }
};

absl::StatusOr<MaxCutLp> BuildMaxCutLp(const Graph& view,
                                       std::span<const double> rho);

// Correlation-clustering program for k clusters. rho is n-by-k, row-major.
//
//   max  1/2 [ sum_{i,l} x_il (rho_il + d-_i) - s_il - t_il ]
//   s.t. sum_j eta_ij x_jl - s_il <= rho_il
//        sum_j eta_ij x_jl + t_il >= rho_il
//        sum_l x_il = 1
//        0 <= x_il <= 1,  s_il, t_il >= 0
//
// The factor 1/2 makes an integral x with exact rho score every edge once.
struct CcLp {
  int n = 0;
  int k = 1;
  LpModel model;

  int x(int i, int l) const { return i * k + l; }
  int s(int i, int l) const { return n * k + i * k + l; }
  int t(int i, int l) const { return 2 * n * k + i * k + l; }
};

absl::StatusOr<CcLp> BuildCcLp(const SignedGraph& view, int k,
                               std::span<const double> rho);

// Dual of the max-cut program:
//
//   min  sum_i u_i + rho_i z_i
//   s.t. u_i + sum_j w_ij z_j >= d_i - rho_i
//        u_i >= 0,  -1 <= z_i <= 1
//
// Variables are u_0..u_{n-1}, z_0..z_{n-1}.
absl::StatusOr<LpModel> BuildMaxCutDual(const Graph& view,
                                        std::span<const double> rho);

// Objective of the max-cut program at x with s, t chosen optimally:
// sum_i x_i (d_i - rho_i) - |rho_i - sum_j w_ij x_j|.
double MaxCutLpValueAt(const Graph& view, std::span<const double> rho,
                       std::span<const double> x);

// Same for the clustering program; x and rho are n-by-k.
double CcLpValueAt(const SignedGraph& view, int k, std::span<const double> rho,
                   std::span<const double> x);

// Q(x) = sum_i x_i (d_i - sum_j w_ij x_j); equals the cut value on 0/1 x.
double MaxCutQuadratic(const Graph& view, std::span<const double> x);

// C- + 1/2 sum_{i,l} x_il sum_j eta_ij x_jl; equals the agreement score on
// integral x.
double CcQuadratic(const SignedGraph& view, int k, std::span<const double> x);

// Moves every fractional coordinate, in id order, to the endpoint of [0, 1]
// that maximizes Q with the other coordinates held. Integral coordinates
// are kept; an indifferent coordinate goes to 0.
CutSolution RoundToCut(const Graph& view, std::span<const double> x);

// Moves every fractional row, in id order, to the simplex vertex that
// maximizes the clustering form with the other rows held (ties go to the
// smaller label). Integral rows keep their label. Rows must sum to 1.
absl::StatusOr<ClusteringSolution> RoundToClustering(
    const SignedGraph& view, int k, std::span<const double> x);

}  // namespace coreset

#endif  // CORESET_ESTIMATION_LP_H_
