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


#include "coreset/simplex.h"

#include <cmath>
#include <vector>

#include "absl/strings/str_cat.h"
#include "boost/multiprecision/cpp_int.hpp"

namespace coreset {
namespace {

using Rational = boost::multiprecision::cpp_rational;

double ToDouble(double x) { return x; }
double ToDouble(const Rational& x) { return x.convert_to<double>(); }

double Abs(double x) { return std::abs(x); }
Rational Abs(const Rational& x) { return boost::multiprecision::abs(x); }

// A model variable written as offset + sum coef * y over nonnegative
// standard-form columns.
struct VariableMap {
  double offset = 0.0;
  std::vector<std::pair<int, double>> columns;
};

template <typename Scalar>
class Tableau {
 public:
  Tableau(Scalar tol, Scalar pivot_tol, int64_t max_pivots)
      : tol_(std::move(tol)),
        pivot_tol_(std::move(pivot_tol)),
        max_pivots_(max_pivots) {}

  absl::StatusOr<LpSolution> Solve(const LpModel& model);

 private:
  Scalar& at(int i, int j) { return cells_[static_cast<size_t>(i) * width_ + j]; }
  Scalar& rhs(int i) { return at(i, cols_); }

  bool Negative(const Scalar& x) const { return x < -tol_; }
  bool Positive(const Scalar& x) const { return x > tol_; }
  static Scalar NonNegative(const Scalar& x) {
    return x < Scalar(0) ? Scalar(0) : x;
  }

  void Pivot(int row, int col);
  void PriceObjective(const std::vector<Scalar>& cost);
  // Runs Bland's rule until optimal. Returns false on an unbounded column.
  absl::StatusOr<bool> Optimize(const std::vector<bool>& allowed);

  Scalar tol_;
  Scalar pivot_tol_;
  int64_t max_pivots_;
  int64_t pivots_ = 0;
  int rows_ = 0;
  int cols_ = 0;
  int width_ = 0;
  std::vector<Scalar> cells_;
  std::vector<Scalar> reduced_;  // reduced costs; last entry is -objective
  std::vector<int> basis_;
};

template <typename Scalar>
void Tableau<Scalar>::Pivot(int row, int col) {
  ++pivots_;
  const Scalar inv = Scalar(1) / at(row, col);
  for (int j = 0; j < width_; ++j) at(row, j) *= inv;
  at(row, col) = Scalar(1);
  for (int i = 0; i < rows_; ++i) {
    if (i == row) continue;
    const Scalar factor = at(i, col);
    if (factor == Scalar(0)) continue;
    for (int j = 0; j < width_; ++j) {
      if (at(row, j) != Scalar(0)) at(i, j) -= factor * at(row, j);
    }
    at(i, col) = Scalar(0);
  }
  const Scalar factor = reduced_[col];
  if (factor != Scalar(0)) {
    for (int j = 0; j < width_; ++j) {
      if (at(row, j) != Scalar(0)) reduced_[j] -= factor * at(row, j);
    }
    reduced_[col] = Scalar(0);
  }
  basis_[row] = col;
}

// Sets reduced_[j] = c_B B^-1 A_j - c_j for a maximization objective.
template <typename Scalar>
void Tableau<Scalar>::PriceObjective(const std::vector<Scalar>& cost) {
  reduced_.assign(width_, Scalar(0));
  for (int j = 0; j < cols_; ++j) reduced_[j] = -cost[j];
  for (int i = 0; i < rows_; ++i) {
    const Scalar& cb = cost[basis_[i]];
    if (cb == Scalar(0)) continue;
    for (int j = 0; j < width_; ++j) reduced_[j] += cb * at(i, j);
  }
}

template <typename Scalar>
absl::StatusOr<bool> Tableau<Scalar>::Optimize(
    const std::vector<bool>& allowed) {
  // Dantzig pricing; after a run of degenerate pivots switch to Bland's rule
  // until the objective moves again, which rules out cycling.
  constexpr int kDegenerateRun = 50;
  int degenerate = 0;
  while (true) {
    const bool bland = degenerate >= kDegenerateRun;
    int enter = -1;
    for (int j = 0; j < cols_; ++j) {
      if (!allowed[j] || !Negative(reduced_[j])) continue;
      if (enter < 0 || (!bland && reduced_[j] < reduced_[enter])) enter = j;
      if (bland) break;
    }
    if (enter < 0) return true;
    // Two-pass ratio test: the longest step that keeps every basic value
    // above -tol, then the largest pivot element (Bland: smallest basic
    // index) among rows that bind within that step.
    bool any = false;
    Scalar step(0);
    for (int i = 0; i < rows_; ++i) {
      if (!(at(i, enter) > pivot_tol_)) continue;
      const Scalar r = (NonNegative(rhs(i)) + tol_) / at(i, enter);
      if (!any || r < step) step = r;
      any = true;
    }
    int leave = -1;
    for (int i = 0; any && i < rows_; ++i) {
      if (!(at(i, enter) > pivot_tol_)) continue;
      if (NonNegative(rhs(i)) / at(i, enter) > step) continue;
      if (leave < 0 || (bland ? basis_[i] < basis_[leave]
                              : at(i, enter) > at(leave, enter))) {
        leave = i;
      }
    }
    if (leave < 0) return false;
    if (pivots_ >= max_pivots_) {
      return absl::ResourceExhaustedError(
          absl::StrCat("simplex exceeded ", max_pivots_, " pivots"));
    }
    degenerate = Positive(rhs(leave)) ? 0 : degenerate + 1;
    Pivot(leave, enter);
  }
}

template <typename Scalar>
absl::StatusOr<LpSolution> Tableau<Scalar>::Solve(const LpModel& model) {
  if (auto status = model.Validate(); !status.ok()) return status;

  // Map model variables to nonnegative columns; finite upper bounds of
  // shifted variables become extra rows.
  struct StdRow {
    std::vector<std::pair<int, Scalar>> terms;
    RowSense sense;
    Scalar rhs;
  };
  std::vector<VariableMap> maps(model.num_variables());
  std::vector<StdRow> std_rows;
  int num_y = 0;
  for (int j = 0; j < model.num_variables(); ++j) {
    const LpVariable& v = model.variables()[j];
    VariableMap& m = maps[j];
    if (std::isfinite(v.lower)) {
      m.offset = v.lower;
      m.columns.push_back({num_y, 1.0});
      if (std::isfinite(v.upper)) {
        std_rows.push_back({{{num_y, Scalar(1)}},
                            RowSense::kLessEqual,
                            Scalar(v.upper) - Scalar(v.lower)});
      }
      ++num_y;
    } else if (std::isfinite(v.upper)) {
      m.offset = v.upper;
      m.columns.push_back({num_y++, -1.0});
    } else {
      m.columns.push_back({num_y++, 1.0});
      m.columns.push_back({num_y++, -1.0});
    }
  }
  for (const LpRow& row : model.rows()) {
    StdRow r{{}, row.sense, Scalar(row.rhs)};
    for (const LpTerm& t : row.terms) {
      const VariableMap& m = maps[t.var];
      r.rhs -= Scalar(t.coef) * Scalar(m.offset);
      for (const auto& [col, c] : m.columns) {
        r.terms.push_back({col, Scalar(t.coef) * Scalar(c)});
      }
    }
    std_rows.push_back(std::move(r));
  }

  rows_ = static_cast<int>(std_rows.size());
  int num_slack = 0, num_art = 0;
  for (StdRow& r : std_rows) {
    if (r.rhs < Scalar(0)) {
      r.rhs = -r.rhs;
      for (auto& term : r.terms) term.second = -term.second;
      if (r.sense == RowSense::kLessEqual) {
        r.sense = RowSense::kGreaterEqual;
      } else if (r.sense == RowSense::kGreaterEqual) {
        r.sense = RowSense::kLessEqual;
      }
    }
    if (r.sense != RowSense::kEqual) ++num_slack;
    if (r.sense != RowSense::kLessEqual) ++num_art;
  }
  const int first_slack = num_y;
  const int first_art = num_y + num_slack;
  cols_ = first_art + num_art;
  width_ = cols_ + 1;
  cells_.assign(static_cast<size_t>(rows_) * width_, Scalar(0));
  basis_.assign(rows_, -1);
  int slack = first_slack, art = first_art;
  for (int i = 0; i < rows_; ++i) {
    const StdRow& r = std_rows[i];
    for (const auto& [col, c] : r.terms) at(i, col) += c;
    rhs(i) = r.rhs;
    if (r.sense == RowSense::kLessEqual) {
      at(i, slack) = Scalar(1);
      basis_[i] = slack++;
    } else {
      if (r.sense == RowSense::kGreaterEqual) at(i, slack++) = Scalar(-1);
      at(i, art) = Scalar(1);
      basis_[i] = art++;
    }
  }

  LpSolution solution;
  std::vector<bool> allowed(cols_, true);
  if (num_art > 0) {
    std::vector<Scalar> phase1(cols_, Scalar(0));
    for (int j = first_art; j < cols_; ++j) phase1[j] = Scalar(-1);
    PriceObjective(phase1);
    auto bounded = Optimize(allowed);
    if (!bounded.ok()) return bounded.status();
    // reduced_[cols_] holds the phase-one objective, -sum of artificials.
    if (Negative(reduced_[cols_])) {
      solution.status = LpStatus::kInfeasible;
      solution.pivots = static_cast<int>(pivots_);
      return solution;
    }
    // Drive remaining artificials out of the basis; rows where that is
    // impossible are redundant and keep a zero-valued artificial.
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < first_art) continue;
      int best = -1;
      for (int j = 0; j < first_art; ++j) {
        if (!(Abs(at(i, j)) > pivot_tol_)) continue;
        if (best < 0 || Abs(at(i, j)) > Abs(at(i, best))) best = j;
      }
      if (best >= 0) Pivot(i, best);
    }
    for (int j = first_art; j < cols_; ++j) allowed[j] = false;
  }

  const bool maximize = model.sense() == ObjectiveSense::kMaximize;
  std::vector<Scalar> cost(cols_, Scalar(0));
  for (int j = 0; j < model.num_variables(); ++j) {
    const double c = maximize ? model.variables()[j].objective
                              : -model.variables()[j].objective;
    for (const auto& [col, coef] : maps[j].columns) {
      cost[col] += Scalar(c) * Scalar(coef);
    }
  }
  PriceObjective(cost);
  auto bounded = Optimize(allowed);
  if (!bounded.ok()) return bounded.status();
  solution.pivots = static_cast<int>(pivots_);
  if (!*bounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  std::vector<Scalar> y(cols_, Scalar(0));
  for (int i = 0; i < rows_; ++i) y[basis_[i]] = rhs(i);
  solution.x.assign(model.num_variables(), 0.0);
  Scalar objective(0);
  for (int j = 0; j < model.num_variables(); ++j) {
    Scalar value(maps[j].offset);
    for (const auto& [col, coef] : maps[j].columns) value += Scalar(coef) * y[col];
    solution.x[j] = ToDouble(value);
    objective += Scalar(model.variables()[j].objective) * value;
  }
  solution.objective = ToDouble(objective);
  solution.status = LpStatus::kOptimal;
  return solution;
}

}  // namespace

absl::StatusOr<LpSolution> SolveLp(const LpModel& model,
                                   const SimplexOptions& options) {
  Tableau<double> tableau(options.tolerance, options.pivot_tolerance,
                         options.max_pivots);
  return tableau.Solve(model);
}

absl::StatusOr<LpSolution> SolveLpExact(const LpModel& model) {
  Tableau<Rational> tableau(Rational(0), Rational(0), 100'000'000);
  return tableau.Solve(model);
}

}  // namespace coreset
