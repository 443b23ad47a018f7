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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.h"
#include "properties.h"
#include "stackdeceive/error.h"
#include "stackdeceive/sse.h"
#include "test_util.h"

namespace stackdeceive {
namespace {

using ::stackdeceive::testing::Q;

TEST(MaxDegeneracyTest, DetectsRepeatedColumnMaxima) {
  EXPECT_EQ(MaxDegenerateColumn(testing::MaxDegenerateGame().leader), 0);
  EXPECT_FALSE(IsMaxDegenerate(testing::StrongGapGame().leader));
  EXPECT_EQ(MaxDegenerateColumn(testing::TwoByTwoLeader()), 1);
  EXPECT_FALSE(IsMaxDegenerate(Matrix::FromRows({{5}})));
}

TEST(StrongDeceptionTest, StrongGapGameWithSmallEpsilon) {
  const Game g = testing::StrongGapGame();
  const StrongConstruction c = StrongDeceive(g, Q("3/100"));
  EXPECT_EQ(c.base_profile, (StrategyProfile{MixedStrategy::Pure(3, 2), 0}));
  EXPECT_EQ(c.base_follower_value, Rational(1));
  EXPECT_EQ(c.delta, Q("1/50"));
  EXPECT_EQ(c.profile.strategy, MixedStrategy({Q("1/25"), 0, Q("24/25")}));
  EXPECT_EQ(c.profile.response, 0);
  EXPECT_EQ(c.follower_value, Q("97/100"));
  EXPECT_EQ(c.tight_facets, (std::vector<int>{1}));
  EXPECT_EQ(c.anchor_column, 1);
  // (2 * 1 + 3) / (1/50).
  EXPECT_EQ(c.alpha, Rational(250));
  EXPECT_TRUE(IsUniqueSse(g.leader, c.fake_payoffs, c.profile));

  const StrongValueGap gap = ComputeStrongValueGap(g, Q("3/100"));
  EXPECT_EQ(gap.optimal_inducible, Rational(1));
  EXPECT_EQ(gap.strong_value, Q("97/100"));
}

TEST(StrongDeceptionTest, ZeroGainUsesTheDominantColumn) {
  // Row 1 strictly maximizes column 1 and is also the follower's favourite.
  const Game g(Matrix::FromRows({{3, 0}, {1, 2}}),
               Matrix::FromRows({{1, 0}, {0, 0}}));
  const StrongConstruction c = StrongDeceive(g, Q("1/10"));
  EXPECT_EQ(c.delta, Rational(0));
  EXPECT_EQ(c.profile, (StrategyProfile{MixedStrategy::Pure(2, 0), 0}));
  EXPECT_EQ(c.fake_payoffs, DominantColumnPayoffs(2, 2, 0));
  EXPECT_FALSE(c.alpha.has_value());
  EXPECT_TRUE(c.tight_facets.empty());
  EXPECT_TRUE(IsUniqueSse(g.leader, c.fake_payoffs, c.profile));
}

TEST(StrongDeceptionTest, RejectsMaxDegenerateLeaders) {
  try {
    StrongDeceive(testing::MaxDegenerateGame(), Q("1/10"));
    FAIL();
  } catch (const MaxDegenerateError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMaxDegenerate);
    EXPECT_EQ(e.column(), 0);
  }
}

TEST(StrongDeceptionTest, RejectsNonPositiveEpsilon) {
  for (const char* eps : {"0", "-1/10"}) {
    try {
      StrongDeceive(testing::StrongGapGame(), Q(eps));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidEpsilon);
    }
  }
}

TEST(StrongDeceptionTest, NeedsFollowerPayoffs) {
  try {
    StrongDeceive(Game(testing::StrongGapGame().leader), Q("1/10"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingFollowerPayoffs);
  }
}

TEST(StrongDeceptionPropertyTest, UniqueAndWithinEpsilon) {
  std::mt19937_64 rng(61);
  int done = 0;
  for (int trial = 0; done < 60; ++trial) {
    const int m = testing::UniformInt(rng, 1, 4);
    const int n = testing::UniformInt(rng, 1, 4);
    const Game g = testing::RandomGame(rng, m, n);
    if (IsMaxDegenerate(g.leader)) continue;
    ++done;
    for (const char* eps : {"1/10", "1/100"}) {
      const StrongConstruction c = StrongDeceive(g, Q(eps));
      EXPECT_GE(c.follower_value, c.base_follower_value - Q(eps)) << trial;
      EXPECT_EQ(c.follower_value,
                FollowerUtility(g, c.profile.strategy, c.profile.response));
      EXPECT_TRUE(IsUniqueSse(g.leader, c.fake_payoffs, c.profile)) << trial;
      if (c.delta.is_zero()) {
        EXPECT_EQ(ColumnMaximum(g.leader, c.profile.response),
                  Utility(g.leader, c.base_profile.strategy,
                          c.base_profile.response));
      } else {
        // x is a vertex of the level set: the simplex equation, the level
        // equation and the facets in B pin it down.
        testing::Rows active = {std::vector<Rational>(m, Rational(1)),
                                g.leader.Column(c.profile.response)};
        for (int i : c.tight_facets) {
          std::vector<Rational> e(m);
          e[i] = 1;
          active.push_back(std::move(e));
        }
        EXPECT_EQ(testing::Rank(active), m) << trial;
        if (m != 2) {
          EXPECT_FALSE(c.tight_facets.empty()) << trial;
        }
      }
      for (const std::string& v :
           testing::StrongViolations(g.leader, c, rng, 200)) {
        ADD_FAILURE() << "trial " << trial << ": " << v;
      }
    }
  }
}

}  // namespace
}  // namespace stackdeceive
