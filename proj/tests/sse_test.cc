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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "test_util.h"

namespace stackdeceive {
namespace {

using ::stackdeceive::testing::Q;

TEST(SseTest, HonestTwoByTwo) {
  const SseResult r = ComputeSse(testing::TwoByTwoLeader(),
                                 testing::ConstantColumnFollower(Q("1/2")));
  EXPECT_EQ(r.profile.strategy, MixedStrategy({Q("1/2"), Q("1/2")}));
  EXPECT_EQ(r.profile.response, 0);
  EXPECT_EQ(r.leader_value, Q("1/2"));
  EXPECT_EQ(r.follower_value, Q("1/2"));
}

TEST(SseTest, ReportedTwoByTwoGivesFollowerOne) {
  const Matrix fake = testing::ConstantColumnFollower(1);
  const SseResult r = ComputeSse(testing::TwoByTwoLeader(), fake);
  EXPECT_EQ(r.leader_value, Rational(0));
  EXPECT_EQ(r.profile, (StrategyProfile{MixedStrategy::Pure(2, 1), 0}));
  EXPECT_EQ(Utility(testing::ConstantColumnFollower(Q("1/2")),
                    r.profile.strategy, r.profile.response),
            Rational(1));
  EXPECT_EQ(r.follower_value, Rational(1));
}

TEST(SseTest, UnattainableColumnsAreTagged) {
  // Column 2 is strictly dominated for the follower.
  const Matrix leader = Matrix::FromRows({{0, 5}, {1, 5}});
  const Matrix follower = Matrix::FromRows({{1, 0}, {1, 0}});
  const SseResult r = ComputeSse(leader, follower);
  EXPECT_FALSE(r.per_column[1].value.is_finite());
  EXPECT_EQ(r.per_column[1].value, ExtendedRational::NegativeInfinity());
  EXPECT_EQ(r.profile, (StrategyProfile{MixedStrategy::Pure(2, 1), 0}));
  EXPECT_EQ(r.leader_value, Rational(1));
}

TEST(SseTest, TiesBreakToTheSmallestColumn) {
  const Matrix leader = Matrix::FromRows({{1, 1}, {0, 0}});
  const Matrix follower = Matrix::FromRows({{0, 0}, {0, 0}});
  const SseResult r = ComputeSse(leader, follower);
  EXPECT_EQ(r.profile.response, 0);
  EXPECT_EQ(r.per_column[1].value, ExtendedRational(Rational(1)));
}

TEST(SseTest, CheckSseReportsViolations) {
  const Matrix leader = testing::TwoByTwoLeader();
  const Matrix follower = testing::ConstantColumnFollower(Q("1/2"));
  EXPECT_TRUE(IsSse(leader, follower, {MixedStrategy({Q("1/2"), Q("1/2")}), 0}));
  const SseCheck wrong_value =
      CheckSse(leader, follower, {MixedStrategy::Pure(2, 1), 0});
  EXPECT_FALSE(wrong_value.holds);
  EXPECT_EQ(wrong_value.violations.size(), 1u);
  const SseCheck not_br =
      CheckSse(leader, follower, {MixedStrategy::Pure(2, 0), 0});
  EXPECT_FALSE(not_br.holds);
}

TEST(SseTest, Uniqueness) {
  const Matrix leader = testing::TwoByTwoLeader();
  EXPECT_TRUE(IsUniqueSse(leader, testing::ConstantColumnFollower(Q("1/2")),
                          {MixedStrategy({Q("1/2"), Q("1/2")}), 0}));
  // Every point is optimal for column 2 of an all-zero leader.
  const Matrix flat = Matrix::FromRows({{0, 0}, {0, 0}});
  const Matrix follower = Matrix::FromRows({{0, 1}, {0, 1}});
  const UniquenessCheck c =
      CheckUniqueSse(flat, follower, {MixedStrategy::Pure(2, 0), 1});
  EXPECT_TRUE(c.sse.holds);
  EXPECT_FALSE(c.unique);
  // A second column reaching the same value breaks uniqueness too.
  const Matrix tied = Matrix::FromRows({{1, 1}, {0, 0}});
  const Matrix zero = Matrix::FromRows({{0, 0}, {0, 0}});
  EXPECT_FALSE(IsUniqueSse(tied, zero, {MixedStrategy::Pure(2, 0), 0}));
}

TEST(SsePropertyTest, LeaderValueIsAMaximumOverSampledStrategies) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = testing::UniformInt(rng, 1, 4);
    const int n = testing::UniformInt(rng, 1, 4);
    const Game g = testing::RandomGame(rng, m, n);
    const SseResult r = ComputeSse(g.leader, *g.follower);
    const std::vector<int> br = BestResponses(*g.follower, r.profile.strategy);
    EXPECT_TRUE(std::binary_search(br.begin(), br.end(), r.profile.response));
    EXPECT_EQ(r.follower_value,
              Utility(*g.follower, r.profile.strategy, r.profile.response));
    EXPECT_TRUE(IsSse(g.leader, *g.follower, r.profile));
    for (int s = 0; s < 200; ++s) {
      const MixedStrategy y = testing::RandomMixed(rng, m);
      for (int l : BestResponses(*g.follower, y)) {
        EXPECT_LE(Utility(g.leader, y, l), r.leader_value);
      }
    }
  }
}

}  // namespace
}  // namespace stackdeceive
