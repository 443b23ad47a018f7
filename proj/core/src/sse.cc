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

#include "stackdeceive/sse.h"

#include <algorithm>
#include <string>
#include <utility>

#include "stackdeceive/error.h"

namespace stackdeceive {
namespace {

void CheckShapes(const Matrix& leader, const Matrix& follower) {
  if (leader.rows() != follower.rows() || leader.cols() != follower.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "leader matrix is " + std::to_string(leader.rows()) + "x" +
                    std::to_string(leader.cols()) + ", follower matrix is " +
                    std::to_string(follower.rows()) + "x" +
                    std::to_string(follower.cols()));
  }
}

std::vector<ColumnValue> SolveColumns(const Matrix& leader,
                                      const Matrix& follower) {
  std::vector<ColumnValue> out(leader.cols());
  for (int l = 0; l < leader.cols(); ++l) {
    const LpOutcome res = Solve(ColumnLp(leader, follower, l));
    if (res.optimal()) {
      out[l].value = res.value;
      out[l].vertex = MixedStrategy(res.point);
    }
  }
  return out;
}

// Index of the first column attaining the best finite value.
int BestColumn(const std::vector<ColumnValue>& columns) {
  int best = -1;
  for (int l = 0; l < static_cast<int>(columns.size()); ++l) {
    if (!columns[l].value.is_finite()) continue;
    if (best < 0 || columns[l].value > columns[best].value) best = l;
  }
  if (best < 0) {
    throw Error(ErrorCode::kInternal,
                "every column LP infeasible; best responses must exist");
  }
  return best;
}

}  // namespace

LpProblem ColumnLp(const Matrix& leader, const Matrix& follower, int column) {
  CheckShapes(leader, follower);
  const int m = leader.rows();
  LpProblem lp(m);
  lp.objective = leader.Column(column);
  lp.AddConstraint(std::vector<Rational>(m, Rational(1)), Relation::kEqual, 1);
  for (int k = 0; k < leader.cols(); ++k) {
    if (k == column) continue;
    std::vector<Rational> row(m);
    for (int i = 0; i < m; ++i) {
      row[i] = follower.at(i, column) - follower.at(i, k);
    }
    lp.AddConstraint(std::move(row), Relation::kGreaterEqual, 0);
  }
  return lp;
}

SseResult ComputeSse(const Matrix& leader, const Matrix& follower) {
  CheckShapes(leader, follower);
  std::vector<ColumnValue> columns = SolveColumns(leader, follower);
  const int best = BestColumn(columns);
  const MixedStrategy& x = *columns[best].vertex;
  SseResult result{StrategyProfile{x, best}, columns[best].value.value(),
                   Utility(follower, x, best), {}};
  result.per_column = std::move(columns);
  return result;
}

SseCheck CheckSse(const Matrix& leader, const Matrix& follower,
                  const StrategyProfile& profile) {
  CheckShapes(leader, follower);
  CheckProfile(profile, leader.rows(), leader.cols());
  SseCheck check;
  check.per_column = SolveColumns(leader, follower);
  check.sse_value = check.per_column[BestColumn(check.per_column)].value.value();
  check.profile_value = Utility(leader, profile.strategy, profile.response);

  const std::vector<int> br = BestResponses(follower, profile.strategy);
  const bool is_best_response =
      std::find(br.begin(), br.end(), profile.response) != br.end();
  if (!is_best_response) {
    check.violations.push_back(
        "response " + std::to_string(profile.response + 1) +
        " is not a follower best response at " + profile.strategy.ToString());
  }
  if (check.profile_value != check.sse_value) {
    check.violations.push_back("leader utility " +
                               check.profile_value.ToString() +
                               " differs from the SSE value " +
                               check.sse_value.ToString());
  }
  check.holds = check.violations.empty();
  return check;
}

bool IsSse(const Matrix& leader, const Matrix& follower,
           const StrategyProfile& profile) {
  return CheckSse(leader, follower, profile).holds;
}

UniquenessCheck CheckUniqueSse(const Matrix& leader, const Matrix& follower,
                               const StrategyProfile& profile) {
  UniquenessCheck out;
  out.sse = CheckSse(leader, follower, profile);
  if (!out.sse.holds) {
    out.violations = out.sse.violations;
    return out;
  }
  const int m = leader.rows();
  for (int l = 0; l < leader.cols(); ++l) {
    if (out.sse.per_column[l].value != ExtendedRational(out.sse.sse_value)) {
      continue;
    }
    if (l != profile.response) {
      out.violations.push_back("column " + std::to_string(l + 1) +
                               " also attains the SSE value");
      continue;
    }
    const LpProblem lp = ColumnLp(leader, follower, l);
    for (int i = 0; i < m; ++i) {
      for (int sign : {1, -1}) {
        std::vector<Rational> direction(m);
        direction[i] = sign;
        const LpOutcome res =
            MaximizeOverFace(lp, out.sse.sse_value, direction);
        if (!res.optimal()) {
          throw Error(ErrorCode::kInternal,
                      "optimal face LP not optimal: " +
                          std::string(LpStatusName(res.status)));
        }
        const Rational extreme = sign > 0 ? res.value : -res.value;
        if (extreme != profile.strategy[i]) {
          out.violations.push_back(
              "optimal face of column " + std::to_string(l + 1) +
              " contains " + MixedStrategy(res.point).ToString() +
              " with coordinate " + std::to_string(i + 1) + " = " +
              extreme.ToString());
        }
      }
    }
  }
  out.unique = out.violations.empty();
  return out;
}

bool IsUniqueSse(const Matrix& leader, const Matrix& follower,
                 const StrategyProfile& profile) {
  return CheckUniqueSse(leader, follower, profile).unique;
}

}  // namespace stackdeceive
