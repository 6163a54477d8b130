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


#ifndef CORESET_LP_MODEL_H_
#define CORESET_LP_MODEL_H_

#include <limits>
#include <string>
#include <vector>

#include "absl/status/status.h"

namespace coreset {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };
enum class ObjectiveSense { kMaximize, kMinimize };

struct LpVariable {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
  double objective = 0.0;
};

struct LpTerm {
  int var = 0;
  double coef = 0.0;
};

struct LpRow {
  std::string name;
  std::vector<LpTerm> terms;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
};

// A linear program over box-bounded variables. Lower bounds may be -inf
// (free variables) and upper bounds +inf.
class LpModel {
 public:
  explicit LpModel(ObjectiveSense sense = ObjectiveSense::kMaximize)
      : sense_(sense) {}

  int AddVariable(std::string name, double lower, double upper,
                  double objective);
  int AddRow(std::string name, std::vector<LpTerm> terms, RowSense sense,
             double rhs);

  ObjectiveSense sense() const { return sense_; }
  const std::vector<LpVariable>& variables() const { return variables_; }
  const std::vector<LpRow>& rows() const { return rows_; }
  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }

  // Checks variable references, bound order and finiteness of coefficients.
  absl::Status Validate() const;

  double ObjectiveValue(const std::vector<double>& x) const;

  // Largest bound or row violation of x.
  double MaxViolation(const std::vector<double>& x) const;

  // CPLEX-LP style text with 12 fixed decimals; grammar in docs/lp_format.md.
  std::string ToLpText() const;

 private:
  ObjectiveSense sense_;
  std::vector<LpVariable> variables_;
  std::vector<LpRow> rows_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kOptimal;
  std::vector<double> x;
  double objective = 0.0;
  int pivots = 0;
};

const char* LpStatusName(LpStatus status);

}  // namespace coreset

#endif  // CORESET_LP_MODEL_H_
