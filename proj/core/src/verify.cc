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

#include "stackdeceive/verify.h"

#include <algorithm>
#include <string>
#include <utility>

#include "stackdeceive/error.h"
#include "stackdeceive/lp.h"

namespace stackdeceive {
namespace {

// Maximizes mu subject to mu <= leader(y, l) for every listed column, over
// y in the simplex, optionally with leader(y, floor_column) >= floor.
// Variables: y_1..y_m, then mu.
Rational WorstCaseOptimum(const Matrix& leader, const std::vector<int>& columns,
                          int floor_column, const Rational& floor) {
  const int m = leader.rows();
  LpProblem lp(m + 1);
  lp.SetFree(m);
  lp.objective[m] = 1;
  std::vector<Rational> simplex(m + 1, Rational(1));
  simplex[m] = 0;
  lp.AddConstraint(std::move(simplex), Relation::kEqual, 1);
  for (int l : columns) {
    std::vector<Rational> row = leader.Column(l);
    row.emplace_back(-1);
    lp.AddConstraint(std::move(row), Relation::kGreaterEqual, 0);
  }
  if (floor_column >= 0) {
    std::vector<Rational> row = leader.Column(floor_column);
    row.emplace_back(0);
    lp.AddConstraint(std::move(row), Relation::kGreaterEqual, floor);
  }
  const LpOutcome res = Solve(lp);
  if (!res.optimal()) {
    throw Error(ErrorCode::kInternal, std::string("worst-case LP is ") +
                                          LpStatusName(res.status));
  }
  return res.value;
}

}  // namespace

VerificationReport VerifyInduces(const Matrix& leader, const Matrix& fake,
                                 const StrategyProfile& target,
                                 bool check_unique) {
  VerificationReport report{target, false, std::nullopt, Rational(), {}, {}};
  if (check_unique) {
    UniquenessCheck check = CheckUniqueSse(leader, fake, target);
    report.is_sse = check.sse.holds;
    report.is_unique = check.unique;
    report.sse_value = check.sse.sse_value;
    report.per_column = std::move(check.sse.per_column);
    report.violated_checks = std::move(check.violations);
  } else {
    SseCheck check = CheckSse(leader, fake, target);
    report.is_sse = check.holds;
    report.sse_value = check.sse_value;
    report.per_column = std::move(check.per_column);
    report.violated_checks = std::move(check.violations);
  }
  return report;
}

SseResult BruteForceSseTwoRows(const Matrix& leader, const Matrix& follower) {
  if (leader.rows() != 2) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "two-row brute force needs m = 2, got m = " +
                    std::to_string(leader.rows()));
  }
  if (follower.rows() != leader.rows() || follower.cols() != leader.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "leader and follower matrices differ in shape");
  }
  const int n = leader.cols();

  // x = (t, 1 - t); follower column l pays f1 + t * (f0 - f1).
  std::vector<Rational> points = {Rational(0), Rational(1)};
  for (int a = 0; a < n; ++a) {
    const Rational slope_a = follower.at(0, a) - follower.at(1, a);
    for (int b = a + 1; b < n; ++b) {
      const Rational slope_b = follower.at(0, b) - follower.at(1, b);
      if (slope_a == slope_b) continue;
      const Rational t =
          (follower.at(1, b) - follower.at(1, a)) / (slope_a - slope_b);
      if (t.sign() > 0 && t < Rational(1)) points.push_back(t);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t breakpoints = points.size();
  for (std::size_t p = 0; p + 1 < breakpoints; ++p) {
    points.push_back((points[p] + points[p + 1]) / Rational(2));
  }
  std::sort(points.begin(), points.end());

  std::vector<ColumnValue> columns(n);
  for (const Rational& t : points) {
    const MixedStrategy x({t, Rational(1) - t});
    for (int l : BestResponses(follower, x)) {
      const ExtendedRational value = Utility(leader, x, l);
      if (value > columns[l].value) {
        columns[l].value = value;
        columns[l].vertex = x;
      }
    }
  }
  int best = -1;
  for (int l = 0; l < n; ++l) {
    if (!columns[l].value.is_finite()) continue;
    if (best < 0 || columns[l].value > columns[best].value) best = l;
  }
  const MixedStrategy& x = *columns[best].vertex;
  SseResult result{StrategyProfile{x, best}, columns[best].value.value(),
                   Utility(follower, x, best), {}};
  result.per_column = std::move(columns);
  return result;
}

bool CheckMaximinThreatAgreement(const Matrix& leader,
                                 const StrategyProfile& target) {
  CheckProfile(target, leader.rows(), leader.cols());
  const int n = leader.cols();
  const int j = target.response;
  const Rational value = Utility(leader, target.strategy, j);

  std::vector<int> all(n);
  for (int l = 0; l < n; ++l) all[l] = l;
  const bool above_maximin =
      value >= WorstCaseOptimum(leader, all, -1, Rational(0));

  ExtendedRational threat = ExtendedRational::NegativeInfinity();
  Rational column_max = leader.at(0, j);
  for (int i = 1; i < leader.rows(); ++i) {
    column_max = std::max(column_max, leader.at(i, j));
  }
  if (column_max > value) {
    std::vector<int> others;
    for (int l = 0; l < n; ++l) {
      if (l != j) others.push_back(l);
    }
    threat = others.empty() ? ExtendedRational::PositiveInfinity()
                            : ExtendedRational(WorstCaseOptimum(
                                  leader, others, j, value));
  }
  const bool above_threat = ExtendedRational(value) >= threat;
  return above_maximin == above_threat;
}

}  // namespace stackdeceive
