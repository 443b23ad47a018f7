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

#ifndef STACKDECEIVE_LP_H_
#define STACKDECEIVE_LP_H_

#include <optional>
#include <span>
#include <vector>

#include "stackdeceive/rational.h"

namespace stackdeceive {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LpConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// maximize objective . x
// subject to constraints, and x_i >= lower_bounds[i] (nullopt = free).
//
// All vectors must have length num_vars; Solve checks this.
struct LpProblem {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LpConstraint> constraints;
  std::vector<std::optional<Rational>> lower_bounds;

  // A problem with every variable >= 0 and a zero objective.
  explicit LpProblem(int num_vars);

  void AddConstraint(std::vector<Rational> coefficients, Relation relation,
                     Rational rhs);
  void SetFree(int var);
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* LpStatusName(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  // The fields below are only meaningful when status == kOptimal.
  Rational value;
  std::vector<Rational> point;
  // Basic columns of the internal standard form at the final tableau.
  // Columns are ordered: one per variable (two for free variables, the
  // positive part first), then one slack per inequality in constraint order.
  std::vector<int> basis;

  bool optimal() const { return status == LpStatus::kOptimal; }
};

// Every basis visited, in pivot order. Phase 1 drives out the artificial
// variables; phase 2 optimises the real objective.
struct LpTrace {
  struct Step {
    int phase;
    std::vector<int> basis;  // sorted
  };
  std::vector<Step> steps;
};

// Two-phase primal simplex over exact rationals with Bland's smallest-index
// rule, so it always terminates and the result depends only on the input.
// An optimal point is a basic feasible solution; when the feasible
// polyhedron has no lines this is one of its vertices.
//
// Throws Error(kDimensionMismatch) for inconsistent vector lengths.
LpOutcome Solve(const LpProblem& lp, LpTrace* trace = nullptr);

// Re-optimises over the optimal face of `lp`: adds objective . x == optimum
// and maximises `objective` instead. The returned point is a vertex of that
// face. Infeasible means the pin conflicts with `lp`, i.e. a caller bug.
LpOutcome MaximizeOverFace(const LpProblem& lp, const Rational& optimum,
                           std::span<const Rational> objective);

// True iff `point` satisfies every constraint and bound exactly.
bool IsFeasible(const LpProblem& lp, std::span<const Rational> point);

}  // namespace stackdeceive

#endif  // STACKDECEIVE_LP_H_
