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

#include "stackdeceive/game.h"

#include <string>
#include <utility>

#include "stackdeceive/error.h"

namespace stackdeceive {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix must be at least 1x1, got " + std::to_string(rows) +
                    "x" + std::to_string(cols));
  }
  data_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

Matrix Matrix::FromRows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix must be nonempty");
  }
  Matrix out(static_cast<int>(rows.size()),
             static_cast<int>(rows.front().size()));
  for (int i = 0; i < out.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != out.cols_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "ragged matrix: row " + std::to_string(i + 1) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(out.cols_));
    }
    for (int j = 0; j < out.cols_; ++j) out.at(i, j) = rows[i][j];
  }
  return out;
}

Matrix Matrix::FromRows(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<std::vector<Rational>> v;
  for (const auto& row : rows) v.emplace_back(row);
  return FromRows(v);
}

void Matrix::CheckIndex(int row, int col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "matrix index (" + std::to_string(row) + ", " +
                    std::to_string(col) + ") outside " +
                    std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

const Rational& Matrix::at(int row, int col) const {
  CheckIndex(row, col);
  return data_[static_cast<std::size_t>(row) * cols_ + col];
}

Rational& Matrix::at(int row, int col) {
  CheckIndex(row, col);
  return data_[static_cast<std::size_t>(row) * cols_ + col];
}

std::vector<Rational> Matrix::Column(int col) const {
  std::vector<Rational> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) out.push_back(at(i, col));
  return out;
}

std::vector<std::vector<std::string>> Matrix::ToStrings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out[i].push_back(at(i, j).ToString());
  }
  return out;
}

MixedStrategy::MixedStrategy(std::vector<Rational> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) {
    throw Error(ErrorCode::kInvalidStrategy, "empty mixed strategy");
  }
  Rational total;
  for (const Rational& p : probabilities_) {
    if (p.sign() < 0) {
      throw Error(ErrorCode::kInvalidStrategy,
                  "negative probability " + p.ToString());
    }
    total += p;
  }
  if (total != 1) {
    throw Error(ErrorCode::kInvalidStrategy,
                "probabilities sum to " + total.ToString() + ", not 1");
  }
}

MixedStrategy MixedStrategy::Pure(int size, int index) {
  if (index < 0 || index >= size) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "pure strategy " + std::to_string(index) + " outside [0, " +
                    std::to_string(size) + ")");
  }
  std::vector<Rational> p(size);
  p[index] = 1;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::Uniform(int size) {
  return MixedStrategy(std::vector<Rational>(size, Rational(1, size)));
}

MixedStrategy MixedStrategy::Mix(const Rational& lambda,
                                  const MixedStrategy& a,
                                  const MixedStrategy& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "mixing strategies of "
                                               "different sizes");
  }
  if (lambda.sign() < 0 || lambda > 1) {
    throw Error(ErrorCode::kInvalidStrategy,
                "mixing weight " + lambda.ToString() + " outside [0, 1]");
  }
  const Rational rest = Rational(1) - lambda;
  std::vector<Rational> p;
  p.reserve(a.size());
  for (int i = 0; i < a.size(); ++i) p.push_back(lambda * a[i] + rest * b[i]);
  return MixedStrategy(std::move(p));
}

std::string MixedStrategy::ToString() const {
  std::string out = "(";
  for (int i = 0; i < size(); ++i) {
    if (i > 0) out += ", ";
    out += probabilities_[i].ToString();
  }
  return out + ")";
}

void CheckProfile(const StrategyProfile& profile, int m, int n) {
  if (profile.strategy.size() != m) {
    throw Error(ErrorCode::kDimensionMismatch,
                "strategy has " + std::to_string(profile.strategy.size()) +
                    " entries for a game with " + std::to_string(m) +
                    " leader actions");
  }
  if (profile.response < 0 || profile.response >= n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "response " + std::to_string(profile.response + 1) +
                    " outside [1, " + std::to_string(n) + "]");
  }
}

Game::Game(Matrix leader_payoffs, std::optional<Matrix> follower_payoffs)
    : leader(std::move(leader_payoffs)), follower(std::move(follower_payoffs)) {
  if (follower && (follower->rows() != leader.rows() ||
                   follower->cols() != leader.cols())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "follower matrix is " + std::to_string(follower->rows()) +
                    "x" + std::to_string(follower->cols()) +
                    " but leader matrix is " + std::to_string(leader.rows()) +
                    "x" + std::to_string(leader.cols()));
  }
}

const Matrix& Game::follower_payoffs() const {
  if (!follower) {
    throw Error(ErrorCode::kMissingFollowerPayoffs,
                "game has no follower payoff matrix");
  }
  return *follower;
}

Rational Utility(const Matrix& matrix, const MixedStrategy& x, int j) {
  if (x.size() != matrix.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "strategy of size " + std::to_string(x.size()) +
                    " against a matrix with " + std::to_string(matrix.rows()) +
                    " rows");
  }
  if (j < 0 || j >= matrix.cols()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "column " + std::to_string(j + 1) + " outside [1, " +
                    std::to_string(matrix.cols()) + "]");
  }
  Rational total;
  for (int i = 0; i < matrix.rows(); ++i) {
    if (!x[i].is_zero()) total += x[i] * matrix.at(i, j);
  }
  return total;
}

Rational LeaderUtility(const Game& game, const MixedStrategy& x, int j) {
  return Utility(game.leader, x, j);
}

Rational FollowerUtility(const Game& game, const MixedStrategy& x, int j) {
  return Utility(game.follower_payoffs(), x, j);
}

std::vector<int> BestResponses(const Matrix& matrix, const MixedStrategy& x) {
  std::vector<int> best;
  Rational best_value;
  for (int j = 0; j < matrix.cols(); ++j) {
    Rational value = Utility(matrix, x, j);
    if (best.empty() || value > best_value) {
      best = {j};
      best_value = std::move(value);
    } else if (value == best_value) {
      best.push_back(j);
    }
  }
  return best;
}

}  // namespace stackdeceive
