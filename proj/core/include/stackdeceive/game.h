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

#ifndef STACKDECEIVE_GAME_H_
#define STACKDECEIVE_GAME_H_

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stackdeceive/rational.h"

namespace stackdeceive {

// Dense row-major payoff matrix. Rows are leader pure strategies, columns
// follower pure strategies. Indices are 0-based.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  // Throws Error(kDimensionMismatch) on ragged or empty input.
  static Matrix FromRows(const std::vector<std::vector<Rational>>& rows);
  static Matrix FromRows(
      std::initializer_list<std::initializer_list<Rational>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int row, int col) const;
  Rational& at(int row, int col);
  std::vector<Rational> Column(int col) const;

  std::vector<std::vector<std::string>> ToStrings() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void CheckIndex(int row, int col) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// A point of the leader simplex.
class MixedStrategy {
 public:
  // Throws Error(kInvalidStrategy) unless entries are >= 0 and sum to 1.
  explicit MixedStrategy(std::vector<Rational> probabilities);
  static MixedStrategy Pure(int size, int index);
  // Equal weight on every pure strategy.
  static MixedStrategy Uniform(int size);

  int size() const { return static_cast<int>(probabilities_.size()); }
  const Rational& operator[](int i) const { return probabilities_[i]; }
  std::span<const Rational> probabilities() const { return probabilities_; }

  // lambda * a + (1 - lambda) * b for lambda in [0, 1].
  static MixedStrategy Mix(const Rational& lambda, const MixedStrategy& a,
                           const MixedStrategy& b);

  std::string ToString() const;

  friend bool operator==(const MixedStrategy&,
                         const MixedStrategy&) = default;

 private:
  std::vector<Rational> probabilities_;
};

struct StrategyProfile {
  MixedStrategy strategy;
  int response;  // 0-based follower pure strategy

  friend bool operator==(const StrategyProfile&,
                         const StrategyProfile&) = default;
};

// Throws Error(kIndexOutOfRange) / Error(kDimensionMismatch) when the
// profile does not fit an m x n game.
void CheckProfile(const StrategyProfile& profile, int m, int n);

struct Game {
  Matrix leader;
  std::optional<Matrix> follower;

  // Throws Error(kDimensionMismatch) if the follower matrix shape differs.
  Game(Matrix leader, std::optional<Matrix> follower = std::nullopt);

  int m() const { return leader.rows(); }
  int n() const { return leader.cols(); }
  // Throws Error(kMissingFollowerPayoffs).
  const Matrix& follower_payoffs() const;
};

// sum_i x_i * matrix(i, j), exact.
Rational Utility(const Matrix& matrix, const MixedStrategy& x, int j);

Rational LeaderUtility(const Game& game, const MixedStrategy& x, int j);
Rational FollowerUtility(const Game& game, const MixedStrategy& x, int j);

// Columns attaining max_l Utility(matrix, x, l), ascending. Never empty.
std::vector<int> BestResponses(const Matrix& matrix, const MixedStrategy& x);

}  // namespace stackdeceive

#endif  // STACKDECEIVE_GAME_H_
