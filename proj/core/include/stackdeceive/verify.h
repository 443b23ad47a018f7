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

#ifndef STACKDECEIVE_VERIFY_H_
#define STACKDECEIVE_VERIFY_H_

#include <optional>
#include <string>
#include <vector>

#include "stackdeceive/game.h"
#include "stackdeceive/rational.h"
#include "stackdeceive/sse.h"

// Oracles in this header use only the game model, the SSE engine and the LP
// solver. They never call into the constructions they are meant to check.

namespace stackdeceive {

struct VerificationReport {
  StrategyProfile target;
  bool is_sse = false;
  std::optional<bool> is_unique;  // nullopt when not requested
  Rational sse_value;
  std::vector<ColumnValue> per_column;
  std::vector<std::string> violated_checks;

  bool passed() const { return is_sse && is_unique.value_or(true); }
};

VerificationReport VerifyInduces(const Matrix& leader, const Matrix& fake,
                                 const StrategyProfile& target,
                                 bool check_unique);

// SSE of a two-row game by exact enumeration of the follower's breakpoints
// on x = (t, 1 - t). Throws Error(kUnsupportedDimension) unless m == 2.
SseResult BruteForceSseTwoRows(const Matrix& leader, const Matrix& follower);

// Computes the maximin value and the threat value with their own LPs and
// reports whether leader(x, j) >= M and leader(x, j) >= V agree.
bool CheckMaximinThreatAgreement(const Matrix& leader,
                                 const StrategyProfile& target);

}  // namespace stackdeceive

#endif  // STACKDECEIVE_VERIFY_H_
