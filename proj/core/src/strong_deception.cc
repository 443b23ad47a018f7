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

#include "stackdeceive/strong_deception.h"

#include <string>
#include <utility>

#include "stackdeceive/deception.h"
#include "stackdeceive/error.h"
#include "stackdeceive/lp.h"
#include "stackdeceive/sse.h"

namespace stackdeceive {
namespace {

LpOutcome RequireOptimal(LpOutcome res, const char* what) {
  if (!res.optimal()) {
    throw Error(ErrorCode::kInternal, std::string(what) + " LP is " +
                                          LpStatusName(res.status));
  }
  return res;
}

}  // namespace

std::optional<int> MaxDegenerateColumn(const Matrix& leader) {
  for (int j = 0; j < leader.cols(); ++j) {
    Rational best = leader.at(0, j);
    int count = 1;
    for (int i = 1; i < leader.rows(); ++i) {
      if (leader.at(i, j) > best) {
        best = leader.at(i, j);
        count = 1;
      } else if (leader.at(i, j) == best) {
        ++count;
      }
    }
    if (count > 1) return j;
  }
  return std::nullopt;
}

bool IsMaxDegenerate(const Matrix& leader) {
  return MaxDegenerateColumn(leader).has_value();
}

StrongConstruction StrongDeceive(const Game& game, const Rational& epsilon) {
  if (epsilon.sign() <= 0) {
    throw Error(ErrorCode::kInvalidEpsilon,
                "epsilon must be positive, got " + epsilon.ToString());
  }
  const Matrix& follower = game.follower_payoffs();
  if (const auto column = MaxDegenerateColumn(game.leader)) {
    throw MaxDegenerateError(*column);
  }
  const Matrix& leader = game.leader;
  const int m = game.m();

  const OptimalInducibleProfile base = ComputeOptimalInducibleProfile(game);
  const int j = base.profile.response;
  const MixedStrategy& base_x = base.profile.strategy;
  const Rational base_leader = Utility(leader, base_x, j);

  // Push the leader's utility on column j as far up as the follower's
  // epsilon budget allows. Variables: x_1..x_m, then delta.
  LpProblem gain(m + 1);
  gain.SetFree(m);
  gain.objective[m] = 1;
  std::vector<Rational> simplex(m + 1, Rational(1));
  simplex[m] = 0;
  gain.AddConstraint(simplex, Relation::kEqual, 1);
  std::vector<Rational> budget = follower.Column(j);
  budget.emplace_back(0);
  gain.AddConstraint(std::move(budget), Relation::kGreaterEqual,
                     base.follower_value - epsilon);
  std::vector<Rational> level = leader.Column(j);
  level.emplace_back(-1);
  gain.AddConstraint(std::move(level), Relation::kEqual, base_leader);
  const Rational delta = RequireOptimal(Solve(gain), "leader-gain").value;

  StrongConstruction out{base.profile, base.follower_value, epsilon, delta,
                         base.profile, base.follower_value, {},
                         std::nullopt, std::nullopt, Matrix()};

  if (delta.is_zero()) {
    if (ColumnMaximum(leader, j) > base_leader) {
      throw Error(ErrorCode::kInternal,
                  "zero leader gain although column " + std::to_string(j + 1) +
                      " can exceed the base profile's leader utility");
    }
    out.fake_payoffs = DominantColumnPayoffs(m, game.n(), j);
  } else {
    // Best vertex of the level set P = { y : leader(y, j) = base + delta }.
    LpProblem refine(m);
    refine.objective = follower.Column(j);
    refine.AddConstraint(std::vector<Rational>(m, Rational(1)),
                         Relation::kEqual, 1);
    refine.AddConstraint(leader.Column(j), Relation::kEqual,
                         base_leader + delta);
    const LpOutcome vertex = RequireOptimal(Solve(refine), "level-set");
    const MixedStrategy x(vertex.point);
    out.profile = StrategyProfile{x, j};
    out.follower_value = vertex.value;

    for (int i = 0; i < m; ++i) {
      if (x[i].is_zero()) out.tight_facets.push_back(i);
    }
    // B is empty only for m = 2, where the level set is the single point x.
    if ((out.tight_facets.empty() && m != 2) || game.n() < 2) {
      throw Error(ErrorCode::kInternal,
                  "level-set vertex touches no simplex facet");
    }

    int k = -1;
    Rational k_value;
    for (int l = 0; l < game.n(); ++l) {
      if (l == j) continue;
      Rational v = Utility(leader, x, l);
      if (k < 0 || v < k_value) {
        k = l;
        k_value = std::move(v);
      }
    }
    Rational largest;
    for (int i = 0; i < m; ++i) {
      for (int l = 0; l < game.n(); ++l) {
        if (Abs(leader.at(i, l)) > largest) largest = Abs(leader.at(i, l));
      }
    }
    const Rational alpha = (Rational(2) * largest + Rational(m)) / delta;
    out.anchor_column = k;
    out.alpha = alpha;

    // In full coordinates the facet penalty h . (y - x) is the mass y puts
    // on rows in B, since x vanishes there.
    const Rational target = Utility(leader, x, j);
    Matrix fake(m, game.n());
    for (int i = 0; i < m; ++i) {
      const bool on_facet = x[i].is_zero();
      for (int l = 0; l < game.n(); ++l) {
        if (l != j) {
          fake.at(i, l) = -leader.at(i, l);
        } else {
          fake.at(i, l) = -leader.at(i, k) +
                          alpha * (target - leader.at(i, j)) -
                          Rational(on_facet ? 1 : 0);
        }
      }
    }
    out.fake_payoffs = std::move(fake);
  }

  const UniquenessCheck check =
      CheckUniqueSse(leader, out.fake_payoffs, out.profile);
  if (!check.unique) {
    std::string detail;
    for (const std::string& v : check.violations) detail += "; " + v;
    throw Error(ErrorCode::kInternal,
                "constructed matrix does not have a unique SSE" + detail);
  }
  return out;
}

StrongValueGap ComputeStrongValueGap(const Game& game,
                                     const Rational& epsilon) {
  const StrongConstruction c = StrongDeceive(game, epsilon);
  return {c.base_follower_value, c.follower_value};
}

}  // namespace stackdeceive
