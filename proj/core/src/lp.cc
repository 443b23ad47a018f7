// Copyright 2026 The Stackdeceive Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stackdeceive/lp.h"

#include <algorithm>
#include <string>
#include <utility>

#include "stackdeceive/error.h"

namespace stackdeceive {
namespace {

// max cost . x  s.t.  rows x = rhs, x >= 0, rhs >= 0.
struct StandardForm {
  int num_cols = 0;
  std::vector<std::vector<mpq_class>> rows;
  std::vector<mpq_class> rhs;
  std::vector<mpq_class> cost;
  // Per original variable: value = shift + x[positive] - x[negative].
  std::vector<int> positive;
  std::vector<int> negative;  // -1 unless the variable is free
  std::vector<mpq_class> shift;
};

void CheckDimensions(const LpProblem& lp) {
  const auto n = static_cast<std::size_t>(lp.num_vars);
  if (lp.num_vars < 0 || lp.objective.size() != n ||
      lp.lower_bounds.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "LP objective/bounds length does not match num_vars = " +
                    std::to_string(lp.num_vars));
  }
  for (std::size_t c = 0; c < lp.constraints.size(); ++c) {
    if (lp.constraints[c].coefficients.size() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "LP constraint " + std::to_string(c) + " has " +
                      std::to_string(lp.constraints[c].coefficients.size()) +
                      " coefficients, expected " +
                      std::to_string(lp.num_vars));
    }
  }
}

StandardForm ToStandardForm(const LpProblem& lp) {
  StandardForm sf;
  const int n = lp.num_vars;
  sf.positive.resize(n);
  sf.negative.assign(n, -1);
  sf.shift.assign(n, 0);
  int col = 0;
  for (int k = 0; k < n; ++k) {
    sf.positive[k] = col++;
    if (lp.lower_bounds[k]) {
      sf.shift[k] = lp.lower_bounds[k]->get();
    } else {
      sf.negative[k] = col++;
    }
  }
  const int structural = col;
  int num_slacks = 0;
  for (const LpConstraint& c : lp.constraints) {
    if (c.relation != Relation::kEqual) ++num_slacks;
  }
  sf.num_cols = structural + num_slacks;

  int slack = structural;
  for (const LpConstraint& c : lp.constraints) {
    std::vector<mpq_class> row(sf.num_cols, 0);
    mpq_class rhs = c.rhs.get();
    for (int k = 0; k < n; ++k) {
      const mpq_class& a = c.coefficients[k].get();
      if (sgn(a) == 0) continue;
      row[sf.positive[k]] += a;
      if (sf.negative[k] >= 0) row[sf.negative[k]] -= a;
      rhs -= a * sf.shift[k];
    }
    if (c.relation == Relation::kLessEqual) row[slack++] = 1;
    if (c.relation == Relation::kGreaterEqual) row[slack++] = -1;
    if (sgn(rhs) < 0) {
      for (mpq_class& v : row) v = -v;
      rhs = -rhs;
    }
    sf.rows.push_back(std::move(row));
    sf.rhs.push_back(std::move(rhs));
  }

  sf.cost.assign(sf.num_cols, 0);
  for (int k = 0; k < n; ++k) {
    const mpq_class& c = lp.objective[k].get();
    sf.cost[sf.positive[k]] += c;
    if (sf.negative[k] >= 0) sf.cost[sf.negative[k]] -= c;
  }
  return sf;
}

// Dense simplex tableau. Row i holds B^-1 A_i | B^-1 b; the objective row
// holds the reduced costs and, in the last slot, minus the objective value.
class Tableau {
 public:
  enum class Result { kOptimal, kUnbounded };

  // Starts from the all-artificial basis; artificial columns follow the
  // `structural` standard-form columns.
  explicit Tableau(const StandardForm& sf)
      : structural_(sf.num_cols),
        width_(sf.num_cols + static_cast<int>(sf.rows.size())) {
    const int m = static_cast<int>(sf.rows.size());
    rows_.resize(m);
    basis_.resize(m);
    for (int i = 0; i < m; ++i) {
      rows_[i].assign(width_ + 1, 0);
      std::copy(sf.rows[i].begin(), sf.rows[i].end(), rows_[i].begin());
      rows_[i][structural_ + i] = 1;
      rows_[i][width_] = sf.rhs[i];
      basis_[i] = structural_ + i;
    }
    // Phase 1 objective: maximise minus the sum of artificials.
    objective_.assign(width_ + 1, 0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < structural_; ++j) objective_[j] += rows_[i][j];
      objective_[width_] += rows_[i][width_];
    }
  }

  Result Run(int phase, LpTrace* trace) {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < structural_; ++j) {
        if (sgn(objective_[j]) > 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return Result::kOptimal;

      int leaving = -1;
      mpq_class best_ratio;
      for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
        const mpq_class& a = rows_[i][entering];
        if (sgn(a) <= 0) continue;
        mpq_class ratio = rows_[i][width_] / a;
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving < 0) return Result::kUnbounded;
      Pivot(leaving, entering);
      Record(phase, trace);
    }
  }

  bool Phase1Feasible() const { return sgn(objective_[width_]) == 0; }

  // Pivots basic artificials out on zero-level rows and drops rows that
  // are linear combinations of the others.
  void DriveOutArtificials() {
    for (int i = static_cast<int>(rows_.size()) - 1; i >= 0; --i) {
      if (basis_[i] < structural_) continue;
      int column = -1;
      for (int j = 0; j < structural_; ++j) {
        if (sgn(rows_[i][j]) != 0) {
          column = j;
          break;
        }
      }
      if (column >= 0) {
        Pivot(i, column);
      } else {
        rows_.erase(rows_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
  }

  void SetObjective(const std::vector<mpq_class>& cost) {
    objective_.assign(width_ + 1, 0);
    for (int j = 0; j < structural_; ++j) objective_[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const mpq_class& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j < structural_; ++j) objective_[j] -= cb * rows_[i][j];
      objective_[width_] -= cb * rows_[i][width_];
    }
  }

  std::vector<mpq_class> Solution() const {
    std::vector<mpq_class> x(structural_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      x[basis_[i]] = rows_[i][width_];
    }
    return x;
  }

  std::vector<int> SortedBasis() const {
    std::vector<int> b = basis_;
    std::sort(b.begin(), b.end());
    return b;
  }

  void Record(int phase, LpTrace* trace) const {
    if (trace != nullptr) trace->steps.push_back({phase, SortedBasis()});
  }

 private:
  void Pivot(int r, int e) {
    std::vector<mpq_class>& pivot_row = rows_[r];
    const mpq_class inv = 1 / pivot_row[e];
    for (mpq_class& v : pivot_row) {
      if (sgn(v) != 0) v *= inv;
    }
    auto eliminate = [&](std::vector<mpq_class>& row) {
      if (sgn(row[e]) == 0) return;
      const mpq_class factor = row[e];
      for (int j = 0; j <= width_; ++j) {
        if (sgn(pivot_row[j]) != 0) row[j] -= factor * pivot_row[j];
      }
    };
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(objective_);
    basis_[r] = e;
  }

  int structural_;
  int width_;
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<mpq_class> objective_;
  std::vector<int> basis_;
};

}  // namespace

LpProblem::LpProblem(int num_vars)
    : num_vars(num_vars),
      objective(num_vars),
      lower_bounds(num_vars, Rational(0)) {}

void LpProblem::AddConstraint(std::vector<Rational> coefficients,
                              Relation relation, Rational rhs) {
  constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LpProblem::SetFree(int var) { lower_bounds.at(var) = std::nullopt; }

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

LpOutcome Solve(const LpProblem& lp, LpTrace* trace) {
  CheckDimensions(lp);
  const StandardForm sf = ToStandardForm(lp);

  Tableau tableau(sf);
  tableau.Record(1, trace);
  tableau.Run(1, trace);  // bounded above by zero
  LpOutcome outcome;
  if (!tableau.Phase1Feasible()) {
    outcome.status = LpStatus::kInfeasible;
    return outcome;
  }
  tableau.DriveOutArtificials();
  tableau.SetObjective(sf.cost);
  tableau.Record(2, trace);
  if (tableau.Run(2, trace) == Tableau::Result::kUnbounded) {
    outcome.status = LpStatus::kUnbounded;
    return outcome;
  }

  const std::vector<mpq_class> x = tableau.Solution();
  outcome.status = LpStatus::kOptimal;
  outcome.point.reserve(lp.num_vars);
  for (int k = 0; k < lp.num_vars; ++k) {
    mpq_class v = sf.shift[k] + x[sf.positive[k]];
    if (sf.negative[k] >= 0) v -= x[sf.negative[k]];
    outcome.point.emplace_back(std::move(v));
  }
  outcome.value = Dot(lp.objective, outcome.point);
  outcome.basis = tableau.SortedBasis();
  return outcome;
}

LpOutcome MaximizeOverFace(const LpProblem& lp, const Rational& optimum,
                           std::span<const Rational> objective) {
  CheckDimensions(lp);
  if (objective.size() != static_cast<std::size_t>(lp.num_vars)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "face objective has wrong length");
  }
  LpProblem face = lp;
  face.AddConstraint(lp.objective, Relation::kEqual, optimum);
  face.objective.assign(objective.begin(), objective.end());
  return Solve(face);
}

bool IsFeasible(const LpProblem& lp, std::span<const Rational> point) {
  CheckDimensions(lp);
  if (point.size() != static_cast<std::size_t>(lp.num_vars)) return false;
  for (int k = 0; k < lp.num_vars; ++k) {
    if (lp.lower_bounds[k] && point[k] < *lp.lower_bounds[k]) return false;
  }
  for (const LpConstraint& c : lp.constraints) {
    const Rational lhs = Dot(c.coefficients, point);
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace stackdeceive
