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

#include "stackdeceive/inducibility.h"

#include <algorithm>
#include <string>
#include <utility>

#include "stackdeceive/error.h"
#include "stackdeceive/lp.h"

namespace stackdeceive {
namespace {

// max mu  s.t.  mu <= leader(y, l) for l in columns, y in the simplex, plus
// leader(y, floor_column) >= floor when floor_column >= 0.
// Variables are y_1..y_m followed by the free mu.
LpOutcome SolveWorstCase(const Matrix& leader, const std::vector<int>& columns,
                         int floor_column = -1, const Rational& floor = 0) {
  const int m = leader.rows();
  LpProblem lp(m + 1);
  lp.SetFree(m);
  lp.objective[m] = 1;
  std::vector<Rational> simplex(m + 1, Rational(1));
  simplex[m] = 0;
  lp.AddConstraint(std::move(simplex), Relation::kEqual, 1);
  for (int l : columns) {
    std::vector<Rational> row(m + 1);
    for (int i = 0; i < m; ++i) row[i] = -leader.at(i, l);
    row[m] = 1;
    lp.AddConstraint(std::move(row), Relation::kLessEqual, 0);
  }
  if (floor_column >= 0) {
    std::vector<Rational> row = leader.Column(floor_column);
    row.emplace_back(0);
    lp.AddConstraint(std::move(row), Relation::kGreaterEqual, floor);
  }
  LpOutcome res = Solve(lp);
  if (!res.optimal()) {
    throw Error(ErrorCode::kInternal,
                std::string("worst-case LP is ") + LpStatusName(res.status));
  }
  return res;
}

MixedStrategy StrategyPart(const LpOutcome& res, int m) {
  return MixedStrategy(
      std::vector<Rational>(res.point.begin(), res.point.begin() + m));
}

std::vector<int> AllColumnsExcept(int n, int excluded) {
  std::vector<int> out;
  for (int l = 0; l < n; ++l) {
    if (l != excluded) out.push_back(l);
  }
  return out;
}

std::vector<int> ArgminLeader(const Matrix& leader, const MixedStrategy& y,
                              const std::vector<int>& columns) {
  std::vector<int> best;
  Rational best_value;
  for (int l : columns) {
    Rational v = Utility(leader, y, l);
    if (best.empty() || v < best_value) {
      best = {l};
      best_value = std::move(v);
    } else if (v == best_value) {
      best.push_back(l);
    }
  }
  return best;
}

}  // namespace

MaximinResult Maximin(const Matrix& leader) {
  const LpOutcome res =
      SolveWorstCase(leader, AllColumnsExcept(leader.cols(), -1));
  return {res.value, StrategyPart(res, leader.rows())};
}

ExtendedRational RestrictedMaximin(const Matrix& leader, int excluded) {
  if (excluded < 0 || excluded >= leader.cols()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "column " + std::to_string(excluded + 1) + " out of range");
  }
  if (leader.cols() == 1) return ExtendedRational::PositiveInfinity();
  return SolveWorstCase(leader, AllColumnsExcept(leader.cols(), excluded))
      .value;
}

Rational ColumnMaximum(const Matrix& leader, int j) {
  LpProblem lp(leader.rows());
  lp.objective = leader.Column(j);
  lp.AddConstraint(std::vector<Rational>(leader.rows(), Rational(1)),
                   Relation::kEqual, 1);
  const LpOutcome res = Solve(lp);
  if (!res.optimal()) {
    throw Error(ErrorCode::kInternal, "column maximum LP not optimal");
  }
  return res.value;
}

ThreatResult ThreatValue(const Matrix& leader, const MixedStrategy& x,
                         int j) {
  const Rational target = Utility(leader, x, j);
  ThreatResult out;
  out.region_empty = ColumnMaximum(leader, j) <= target;
  if (out.region_empty) return out;
  if (leader.cols() == 1) {
    out.value = ExtendedRational::PositiveInfinity();
    return out;
  }
  const std::vector<int> others = AllColumnsExcept(leader.cols(), j);
  const LpOutcome res = SolveWorstCase(leader, others, j, target);
  out.value = res.value;
  out.witness = StrategyPart(res, leader.rows());
  for (int l : others) {
    if (Utility(leader, *out.witness, l) == res.value) {
      out.tight_columns.push_back(l);
    }
  }
  return out;
}

bool IsPayoffInducible(const Matrix& leader, const StrategyProfile& target) {
  CheckProfile(target, leader.rows(), leader.cols());
  return Utility(leader, target.strategy, target.response) >=
         Maximin(leader).value;
}

InducibilityCertificate CertifyInducibility(const Matrix& leader,
                                            const StrategyProfile& target) {
  CheckProfile(target, leader.rows(), leader.cols());
  MaximinResult maximin = Maximin(leader);
  InducibilityCertificate cert{
      target,
      Utility(leader, target.strategy, target.response),
      maximin.value,
      std::move(maximin.witness),
      RestrictedMaximin(leader, target.response),
      ThreatValue(leader, target.strategy, target.response),
      false};
  cert.inducible = cert.target_value >= cert.maximin;
  return cert;
}

OptimalInducibleProfile ComputeOptimalInducibleProfile(const Game& game) {
  const Matrix& follower = game.follower_payoffs();
  const int m = game.m();
  const Rational maximin = Maximin(game.leader).value;

  std::vector<ColumnValue> columns(game.n());
  int best = -1;
  for (int j = 0; j < game.n(); ++j) {
    LpProblem lp(m);
    lp.objective = follower.Column(j);
    lp.AddConstraint(std::vector<Rational>(m, Rational(1)), Relation::kEqual,
                     1);
    lp.AddConstraint(game.leader.Column(j), Relation::kGreaterEqual, maximin);
    const LpOutcome res = Solve(lp);
    // Infeasible would mean max_y leader(y, j) < maximin, which cannot be.
    if (!res.optimal()) {
      throw Error(ErrorCode::kInternal,
                  "inducible-profile LP for column " + std::to_string(j + 1) +
                      " is " + LpStatusName(res.status));
    }
    columns[j].value = res.value;
    columns[j].vertex = MixedStrategy(res.point);
    if (best < 0 || columns[j].value > columns[best].value) best = j;
  }
  const MixedStrategy& x = *columns[best].vertex;
  return {StrategyProfile{x, best}, columns[best].value.value(), maximin,
          std::move(columns)};
}

std::vector<int> ThreatResponse(const Matrix& leader,
                                const StrategyProfile& target,
                                const MixedStrategy& y) {
  CheckProfile(target, leader.rows(), leader.cols());
  const int j = target.response;
  const Rational threshold = Utility(leader, target.strategy, j);
  if (ColumnMaximum(leader, j) <= threshold || leader.cols() == 1) {
    return {j};
  }
  const std::vector<int> others = AllColumnsExcept(leader.cols(), j);
  const Rational value = Utility(leader, y, j);
  if (value < threshold) return {j};
  std::vector<int> out = ArgminLeader(leader, y, others);
  if (value == threshold) {
    out.insert(std::upper_bound(out.begin(), out.end(), j), j);
  }
  return out;
}

}  // namespace stackdeceive
