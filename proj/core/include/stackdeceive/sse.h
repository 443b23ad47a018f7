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

#ifndef STACKDECEIVE_SSE_H_
#define STACKDECEIVE_SSE_H_

#include <optional>
#include <string>
#include <vector>

#include "stackdeceive/game.h"
#include "stackdeceive/lp.h"
#include "stackdeceive/rational.h"

namespace stackdeceive {

// Best leader utility attainable with column `l` as a follower best
// response: -inf when no leader strategy makes `l` a best response.
struct ColumnValue {
  ExtendedRational value = ExtendedRational::NegativeInfinity();
  std::optional<MixedStrategy> vertex;
};

struct SseResult {
  StrategyProfile profile;
  Rational leader_value;
  Rational follower_value;  // under the follower matrix passed in
  std::vector<ColumnValue> per_column;
};

// The column-l program of the multiple-LP method:
//   maximize leader(y, l)  s.t.  y in simplex,
//                                follower(y, l) >= follower(y, k) for all k.
LpProblem ColumnLp(const Matrix& leader, const Matrix& follower, int column);

// Strong Stackelberg equilibrium by solving one LP per follower column.
// Among columns attaining the optimum the smallest index is reported.
// Throws Error(kDimensionMismatch).
SseResult ComputeSse(const Matrix& leader, const Matrix& follower);

struct SseCheck {
  bool holds = false;
  Rational sse_value;
  Rational profile_value;
  std::vector<ColumnValue> per_column;
  std::vector<std::string> violations;
};

// Whether `profile` is an SSE of (leader, follower), with the reason when
// it is not.
SseCheck CheckSse(const Matrix& leader, const Matrix& follower,
                  const StrategyProfile& profile);
bool IsSse(const Matrix& leader, const Matrix& follower,
           const StrategyProfile& profile);

struct UniquenessCheck {
  bool unique = false;
  SseCheck sse;
  std::vector<std::string> violations;
};

// Whether `profile` is the only SSE. Every column tying the SSE value must
// be the profile's response, and the optimal face of that column's LP must
// be the single point profile.strategy: each coordinate is maximised and
// minimised over the face and all 2m extrema must match.
UniquenessCheck CheckUniqueSse(const Matrix& leader, const Matrix& follower,
                               const StrategyProfile& profile);
bool IsUniqueSse(const Matrix& leader, const Matrix& follower,
                 const StrategyProfile& profile);

}  // namespace stackdeceive

#endif  // STACKDECEIVE_SSE_H_
