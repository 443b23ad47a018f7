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

#ifndef STACKDECEIVE_ERROR_H_
#define STACKDECEIVE_ERROR_H_

#include <stdexcept>
#include <string>

namespace stackdeceive {

enum class ErrorCode {
  kDimensionMismatch,
  kIndexOutOfRange,
  kInvalidStrategy,
  kMissingFollowerPayoffs,
  kParse,
  kNotInducible,
  kInfeasibleDecomposition,
  kMaxDegenerate,
  kInvalidEpsilon,
  kUnsupportedDimension,
  kInternal,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the unique-SSE construction when some leader column has a tied
// maximum. `column` is 0-based.
class MaxDegenerateError : public Error {
 public:
  explicit MaxDegenerateError(int column);

  int column() const { return column_; }

 private:
  int column_;
};

}  // namespace stackdeceive

#endif  // STACKDECEIVE_ERROR_H_
