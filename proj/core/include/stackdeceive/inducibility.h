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

#ifndef STACKDECEIVE_INDUCIBILITY_H_
#define STACKDECEIVE_INDUCIBILITY_H_

#include <optional>
#include <vector>

#include "stackdeceive/game.h"
#include "stackdeceive/rational.h"
#include "stackdeceive/sse.h"

namespace stackdeceive {

struct MaximinResult {
  Rational value;
  MixedStrategy witness;
};

// max over y in the simplex of min_l leader(y, l).
MaximinResult Maximin(const Matrix& leader);

// Maximin with column `excluded` removed. +inf when no column remains.
ExtendedRational RestrictedMaximin(const Matrix& leader, int excluded);

// max over y in the simplex of leader(y, j). Decides whether any strategy
// strictly beats a given value against column j.
Rational ColumnMaximum(const Matrix& leader, int j);

// The leader's best worst case over the other columns, restricted to the
// closure of U = { y : leader(y, j) > leader(x, j) }.
struct ThreatResult {
  // -inf when U is empty; +inf when U is nonempty but j is the only column.
  ExtendedRational value = ExtendedRational::NegativeInfinity();
  std::optional<MixedStrategy> witness;  // y*, present iff value is finite
  std::vector<int> tight_columns;        // S = { l != j : leader(y*, l) = V }
  bool region_empty = true;              // U is empty
};

ThreatResult ThreatValue(const Matrix& leader, const MixedStrategy& x, int j);

// leader(x, j) >= Maximin(leader).value.
bool IsPayoffInducible(const Matrix& leader, const StrategyProfile& target);

// Every quantity that decides how a target can be induced.
struct InducibilityCertificate {
  StrategyProfile target;
  Rational target_value;  // leader(x, j)
  Rational maximin;
  MixedStrategy maximin_witness;
  ExtendedRational restricted_maximin;  // M_{-j}
  ThreatResult threat;
  bool inducible = false;
};

InducibilityCertificate CertifyInducibility(const Matrix& leader,
                                            const StrategyProfile& target);

struct OptimalInducibleProfile {
  StrategyProfile profile;
  Rational follower_value;
  Rational maximin;
  // Per column: max follower(x, l) s.t. leader(x, l) >= maximin.
  std::vector<ColumnValue> per_column;
};

// The inducible profile maximising the true follower utility. Ties go to
// the smallest column. Throws Error(kMissingFollowerPayoffs).
OptimalInducibleProfile ComputeOptimalInducibleProfile(const Game& game);

// The piecewise threat correspondence around `target` evaluated at y:
//   leader(y, j) <  leader(x, j):  {j}
//   leader(y, j) == leader(x, j):  {j} + argmin_{l != j} leader(y, l)
//   leader(y, j) >  leader(x, j):  argmin_{l != j} leader(y, l)
// When no strategy beats leader(x, j) against j, or j is the only column,
// the answer is {j} everywhere.
std::vector<int> ThreatResponse(const Matrix& leader,
                                const StrategyProfile& target,
                                const MixedStrategy& y);

}  // namespace stackdeceive

#endif  // STACKDECEIVE_INDUCIBILITY_H_
