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


#include "coreset/lp_model.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace coreset {
namespace {

std::string Fixed(double x) { return absl::StrFormat("%.12f", x); }

std::string Bound(double x) {
  if (x == kInfinity) return "+inf";
  if (x == -kInfinity) return "-inf";
  return Fixed(x);
}

void AppendTerms(std::string& out, const std::vector<LpTerm>& terms,
                 const std::vector<LpVariable>& vars) {
  if (terms.empty()) {
    out += " 0";
    return;
  }
  for (const LpTerm& t : terms) {
    absl::StrAppend(&out, t.coef < 0 ? " - " : " + ", Fixed(std::abs(t.coef)),
                    " ", vars[t.var].name);
  }
}

}  // namespace

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

int LpModel::AddVariable(std::string name, double lower, double upper,
                         double objective) {
  variables_.push_back({std::move(name), lower, upper, objective});
  return num_variables() - 1;
}

int LpModel::AddRow(std::string name, std::vector<LpTerm> terms,
                    RowSense sense, double rhs) {
  rows_.push_back({std::move(name), std::move(terms), sense, rhs});
  return num_rows() - 1;
}

absl::Status LpModel::Validate() const {
  for (const LpVariable& v : variables_) {
    if (std::isnan(v.lower) || std::isnan(v.upper) || v.lower > v.upper ||
        v.lower == kInfinity || v.upper == -kInfinity) {
      return absl::InvalidArgumentError(
          absl::StrCat("variable ", v.name, " has invalid bounds"));
    }
    if (!std::isfinite(v.objective)) {
      return absl::InvalidArgumentError(
          absl::StrCat("variable ", v.name, " has a non-finite objective"));
    }
  }
  for (const LpRow& row : rows_) {
    if (!std::isfinite(row.rhs)) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", row.name, " has a non-finite right-hand side"));
    }
    for (const LpTerm& t : row.terms) {
      if (t.var < 0 || t.var >= num_variables()) {
        return absl::InvalidArgumentError(
            absl::StrCat("row ", row.name, " references variable ", t.var));
      }
      if (!std::isfinite(t.coef)) {
        return absl::InvalidArgumentError(
            absl::StrCat("row ", row.name, " has a non-finite coefficient"));
      }
    }
  }
  return absl::OkStatus();
}

double LpModel::ObjectiveValue(const std::vector<double>& x) const {
  double value = 0.0;
  for (int j = 0; j < num_variables(); ++j) {
    value += variables_[j].objective * x[j];
  }
  return value;
}

double LpModel::MaxViolation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (int j = 0; j < num_variables(); ++j) {
    worst = std::max(worst, variables_[j].lower - x[j]);
    worst = std::max(worst, x[j] - variables_[j].upper);
  }
  for (const LpRow& row : rows_) {
    double lhs = 0.0;
    for (const LpTerm& t : row.terms) lhs += t.coef * x[t.var];
    switch (row.sense) {
      case RowSense::kLessEqual:
        worst = std::max(worst, lhs - row.rhs);
        break;
      case RowSense::kGreaterEqual:
        worst = std::max(worst, row.rhs - lhs);
        break;
      case RowSense::kEqual:
        worst = std::max(worst, std::abs(lhs - row.rhs));
        break;
    }
  }
  return worst;
}

std::string LpModel::ToLpText() const {
  std::string out =
      sense_ == ObjectiveSense::kMaximize ? "Maximize\n obj:" : "Minimize\n obj:";
  std::vector<LpTerm> objective;
  for (int j = 0; j < num_variables(); ++j) {
    if (variables_[j].objective != 0.0) {
      objective.push_back({j, variables_[j].objective});
    }
  }
  AppendTerms(out, objective, variables_);
  out += "\nSubject To\n";
  for (const LpRow& row : rows_) {
    absl::StrAppend(&out, " ", row.name, ":");
    AppendTerms(out, row.terms, variables_);
    const char* op = row.sense == RowSense::kLessEqual      ? " <= "
                     : row.sense == RowSense::kGreaterEqual ? " >= "
                                                            : " = ";
    absl::StrAppend(&out, op, Fixed(row.rhs), "\n");
  }
  out += "Bounds\n";
  for (const LpVariable& v : variables_) {
    absl::StrAppend(&out, " ", Bound(v.lower), " <= ", v.name, " <= ",
                    Bound(v.upper), "\n");
  }
  out += "End\n";
  return out;
}

}  // namespace coreset
