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


#ifndef CORESET_SIMPLEX_H_
#define CORESET_SIMPLEX_H_

#include "absl/status/statusor.h"

#include "coreset/lp_model.h"

namespace coreset {

struct SimplexOptions {
  // Pivot and feasibility tolerance for the floating-point solver.
  double tolerance = 1e-9;
  // Smallest entry the floating-point solver will pivot on.
  double pivot_tolerance = 1e-7;
  int64_t max_pivots = 10'000'000;
};

// Dense two-phase tableau simplex with Bland's rule. Infeasible and unbounded
// models are reported through LpSolution::status; an invalid model or an
// exhausted pivot budget is an error.
absl::StatusOr<LpSolution> SolveLp(const LpModel& model,
                                   const SimplexOptions& options = {});

// Same algorithm over exact rationals. Every double in the model is
// converted exactly, so the reported optimum is the true optimum of the
// model rounded once to double. Meant for small regression instances.
absl::StatusOr<LpSolution> SolveLpExact(const LpModel& model);

}  // namespace coreset

#endif  // CORESET_SIMPLEX_H_
