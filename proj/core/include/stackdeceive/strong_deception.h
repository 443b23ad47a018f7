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

#ifndef STACKDECEIVE_STRONG_DECEPTION_H_
#define STACKDECEIVE_STRONG_DECEPTION_H_

#include <optional>
#include <vector>

#include "stackdeceive/game.h"
#include "stackdeceive/inducibility.h"
#include "stackdeceive/rational.h"

namespace stackdeceive {

// Smallest column whose maximum entry is attained by more than one row.
std::optional<int> MaxDegenerateColumn(const Matrix& leader);
bool IsMaxDegenerate(const Matrix& leader);

struct StrongConstruction {
  StrategyProfile base_profile;  // optimal inducible (x*, j)
  Rational base_follower_value;
  Rational epsilon;
  Rational delta;   // leader gain over x* along column j
  StrategyProfile profile;       // (x, j), the unique SSE
  Rational follower_value;       // true follower utility at profile
  std::vector<int> tight_facets;    // B, rows with x_i = 0; empty if delta = 0
  std::optional<int> anchor_column;  // k; absent if delta = 0
  std::optional<Rational> alpha;     // absent if delta = 0
  Matrix fake_payoffs;
};

// Fake matrix under which some profile is the unique SSE and yields at least
// the optimal inducible utility minus epsilon.
//
// Throws MaxDegenerateError, Error(kInvalidEpsilon) for epsilon <= 0,
// Error(kMissingFollowerPayoffs), and Error(kInternal) if the final
// uniqueness check fails.
StrongConstruction StrongDeceive(const Game& game, const Rational& epsilon);

struct StrongValueGap {
  Rational optimal_inducible;
  Rational strong_value;
};

StrongValueGap ComputeStrongValueGap(const Game& game,
                                     const Rational& epsilon);

}  // namespace stackdeceive

#endif  // STACKDECEIVE_STRONG_DECEPTION_H_
