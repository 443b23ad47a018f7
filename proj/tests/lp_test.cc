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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "oracles.h"
#include "test_util.h"

namespace stackdeceive {
namespace {

using ::stackdeceive::testing::Q;

TEST(LpTest, SmallMaximization) {
  LpProblem lp(2);
  lp.objective = {1, 1};
  lp.AddConstraint({1, 2}, Relation::kLessEqual, 4);
  lp.AddConstraint({3, 1}, Relation::kLessEqual, 6);
  const LpOutcome res = Solve(lp);
  ASSERT_TRUE(res.optimal());
  EXPECT_EQ(res.value, Q("14/5"));
  EXPECT_EQ(res.point, (std::vector<Rational>{Q("8/5"), Q("6/5")}));
}

TEST(LpTest, EqualityGreaterEqualAndFreeVariables) {
  // max -x0 + x1 with x0 free, x0 + x1 = 1, x0 >= -2 via a constraint.
  LpProblem lp(2);
  lp.SetFree(0);
  lp.objective = {-1, 1};
  lp.AddConstraint({1, 1}, Relation::kEqual, 1);
  lp.AddConstraint({1, 0}, Relation::kGreaterEqual, -2);
  const LpOutcome res = Solve(lp);
  ASSERT_TRUE(res.optimal());
  EXPECT_EQ(res.value, Rational(5));
  EXPECT_EQ(res.point, (std::vector<Rational>{-2, 3}));
}

TEST(LpTest, ShiftedLowerBound) {
  LpProblem lp(1);
  lp.lower_bounds[0] = Q("3/2");
  lp.objective = {-1};
  const LpOutcome res = Solve(lp);
  ASSERT_TRUE(res.optimal());
  EXPECT_EQ(res.point[0], Q("3/2"));
}

TEST(LpTest, DetectsInfeasibility) {
  LpProblem lp(2);
  lp.AddConstraint({1, 1}, Relation::kLessEqual, 1);
  lp.AddConstraint({1, 1}, Relation::kGreaterEqual, 2);
  EXPECT_EQ(Solve(lp).status, LpStatus::kInfeasible);
}

TEST(LpTest, DetectsUnboundedness) {
  LpProblem lp(2);
  lp.objective = {1, 0};
  lp.AddConstraint({1, -1}, Relation::kLessEqual, 1);
  EXPECT_EQ(Solve(lp).status, LpStatus::kUnbounded);
}

TEST(LpTest, ZeroConstraintsAndRedundantEqualities) {
  LpProblem lp(2);
  lp.objective = {1, 2};
  lp.AddConstraint({1, 1}, Relation::kEqual, 1);
  lp.AddConstraint({2, 2}, Relation::kEqual, 2);
  lp.AddConstraint({0, 0}, Relation::kLessEqual, 0);
  const LpOutcome res = Solve(lp);
  ASSERT_TRUE(res.optimal());
  EXPECT_EQ(res.value, Rational(2));
  EXPECT_EQ(res.point, (std::vector<Rational>{0, 1}));
}

// A classic instance on which the largest-coefficient rule cycles.
TEST(LpTest, TerminatesOnCyclingInstance) {
  LpProblem lp(4);
  lp.objective = {Q("3/4"), -150, Q("1/50"), -6};
  lp.AddConstraint({Q("1/4"), -60, Q("-1/25"), 9}, Relation::kLessEqual, 0);
  lp.AddConstraint({Q("1/2"), -90, Q("-1/50"), 3}, Relation::kLessEqual, 0);
  lp.AddConstraint({0, 0, 1, 0}, Relation::kLessEqual, 1);
  LpTrace trace;
  const LpOutcome res = Solve(lp, &trace);
  ASSERT_TRUE(res.optimal());
  EXPECT_EQ(res.value, Q("1/20"));
  EXPECT_TRUE(IsFeasible(lp, res.point));
}

TEST(LpTest, MaximizeOverFaceStaysOnOptimalFace) {
  // Every point of the segment x0 + x1 = 1 is optimal for max x0 + x1.
  LpProblem lp(2);
  lp.objective = {1, 1};
  lp.AddConstraint({1, 1}, Relation::kLessEqual, 1);
  const LpOutcome first = Solve(lp);
  ASSERT_TRUE(first.optimal());
  const std::vector<Rational> direction = {0, 1};
  const LpOutcome face = MaximizeOverFace(lp, first.value, direction);
  ASSERT_TRUE(face.optimal());
  EXPECT_EQ(face.value, Rational(1));
  EXPECT_EQ(face.point, (std::vector<Rational>{0, 1}));
}

TEST(LpTest, IsFeasibleIsExact) {
  LpProblem lp(2);
  lp.AddConstraint({1, 1}, Relation::kEqual, 1);
  EXPECT_TRUE(IsFeasible(lp, std::vector<Rational>{Q("1/3"), Q("2/3")}));
  EXPECT_FALSE(IsFeasible(lp, std::vector<Rational>{Q("1/3"), Q("1/3")}));
  EXPECT_FALSE(IsFeasible(lp, std::vector<Rational>{-1, 2}));
}

// Random bounded problems: a box plus random constraints of every kind.
LpProblem RandomBoundedLp(std::mt19937_64& rng) {
  using ::stackdeceive::testing::RandomRational;
  using ::stackdeceive::testing::UniformInt;
  const int n = UniformInt(rng, 1, 3);
  LpProblem lp(n);
  for (int v = 0; v < n; ++v) {
    lp.objective[v] = RandomRational(rng, 4, 3);
    if (UniformInt(rng, 0, 3) == 0) {
      lp.SetFree(v);
      std::vector<Rational> row(n);
      row[v] = 1;
      lp.AddConstraint(row, Relation::kGreaterEqual, -UniformInt(rng, 0, 3));
    }
    std::vector<Rational> row(n);
    row[v] = 1;
    lp.AddConstraint(row, Relation::kLessEqual, UniformInt(rng, 1, 4));
  }
  const int extra = UniformInt(rng, 1, 3);
  for (int c = 0; c < extra; ++c) {
    std::vector<Rational> row(n);
    for (Rational& a : row) a = RandomRational(rng, 3, 2);
    const int kind = UniformInt(rng, 0, 4);
    const Relation rel = kind == 0   ? Relation::kEqual
                         : kind <= 2 ? Relation::kLessEqual
                                     : Relation::kGreaterEqual;
    lp.AddConstraint(row, rel, RandomRational(rng, 3, 2));
  }
  return lp;
}

TEST(LpPropertyTest, AgreesWithVertexEnumeration) {
  std::mt19937_64 rng(11);
  int optimal = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const LpProblem lp = RandomBoundedLp(rng);
    const LpOutcome res = Solve(lp);
    const testing::VertexOptimum oracle = testing::BruteForceLp(lp);
    ASSERT_NE(res.status, LpStatus::kUnbounded) << "trial " << trial;
    ASSERT_EQ(res.optimal(), oracle.feasible) << "trial " << trial;
    if (!res.optimal()) continue;
    ++optimal;
    EXPECT_EQ(res.value, oracle.value) << "trial " << trial;
    EXPECT_EQ(Dot(lp.objective, res.point), res.value);
  }
  EXPECT_GT(optimal, 100);
}

TEST(LpPropertyTest, OptimalPointIsAFeasibleVertexWithNoImprovingEdge) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 400; ++trial) {
    const LpProblem lp = RandomBoundedLp(rng);
    const LpOutcome res = Solve(lp);
    if (!res.optimal()) continue;
    EXPECT_TRUE(IsFeasible(lp, res.point)) << "trial " << trial;
    const testing::HalfSpaces h = testing::Expand(lp);
    testing::Rows tight;
    for (int r : testing::TightSet(h, res.point)) tight.push_back(h.rows[r]);
    EXPECT_EQ(testing::Rank(tight), lp.num_vars) << "trial " << trial;
    EXPECT_TRUE(testing::NoImprovingEdge(lp, res.point)) << "trial " << trial;
  }
}

TEST(LpPropertyTest, NoBasisRepeatsWithinAPhase) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const LpProblem lp = RandomBoundedLp(rng);
    LpTrace trace;
    Solve(lp, &trace);
    std::set<std::pair<int, std::vector<int>>> seen;
    for (const LpTrace::Step& step : trace.steps) {
      EXPECT_TRUE(seen.insert({step.phase, step.basis}).second)
          << "trial " << trial << " revisits a basis in phase " << step.phase;
    }
  }
}

TEST(LpPropertyTest, ConcurrentSolvesMatchSequentialOnes) {
  std::mt19937_64 rng(14);
  std::vector<LpProblem> problems;
  for (int i = 0; i < 60; ++i) problems.push_back(RandomBoundedLp(rng));
  std::vector<LpOutcome> expected;
  for (const LpProblem& lp : problems) expected.push_back(Solve(lp));

  std::vector<std::vector<LpOutcome>> got(4);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      for (const LpProblem& lp : problems) got[t].push_back(Solve(lp));
    });
  }
  for (std::thread& w : workers) w.join();
  for (int t = 0; t < 4; ++t) {
    for (std::size_t i = 0; i < problems.size(); ++i) {
      EXPECT_EQ(got[t][i].status, expected[i].status);
      EXPECT_EQ(got[t][i].point, expected[i].point);
    }
  }
}

}  // namespace
}  // namespace stackdeceive
