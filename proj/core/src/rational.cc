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

#include "stackdeceive/rational.h"

#include <cctype>

#include "stackdeceive/error.h"

namespace stackdeceive {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by at least one digit.
std::optional<mpz_class> ParseInteger(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) return std::nullopt;
  mpz_class value(std::string(s), 10);
  if (negative) value = -value;
  return value;
}

std::optional<mpq_class> ParseDecimal(std::string_view s) {
  const auto dot = s.find('.');
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = s.substr(dot + 1);
  bool negative = false;
  if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
    negative = whole.front() == '-';
    whole.remove_prefix(1);
  }
  if (whole.empty() && frac.empty()) return std::nullopt;
  if (!whole.empty() && !AllDigits(whole)) return std::nullopt;
  if (!frac.empty() && !AllDigits(frac)) return std::nullopt;
  const std::string digits = std::string(whole) + std::string(frac);
  mpz_class num(digits.empty() ? "0" : digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  mpq_class value(num, den);
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

}  // namespace

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidStrategy: return "InvalidStrategy";
    case ErrorCode::kMissingFollowerPayoffs: return "MissingFollowerPayoffs";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kNotInducible: return "NotInducible";
    case ErrorCode::kInfeasibleDecomposition:
      return "InfeasibleDecomposition";
    case ErrorCode::kMaxDegenerate: return "MaxDegenerate";
    case ErrorCode::kInvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

MaxDegenerateError::MaxDegenerateError(int column)
    : Error(ErrorCode::kMaxDegenerate,
            "leader payoff matrix is max-degenerate: column " +
                std::to_string(column + 1) +
                " has its maximum attained by more than one row"),
      column_(column) {}

static_assert(sizeof(long) == sizeof(std::int64_t));

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kInternal, "rational with zero denominator");
  }
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                     mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

std::optional<Rational> Rational::TryParse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = ParseInteger(text.substr(0, slash));
    const auto den = ParseInteger(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(mpq_class(*num, *den));
  }
  if (text.find('.') != std::string_view::npos) {
    const auto value = ParseDecimal(text);
    if (!value) return std::nullopt;
    return Rational(*value);
  }
  const auto value = ParseInteger(text);
  if (!value) return std::nullopt;
  return Rational(mpq_class(*value));
}

Rational Rational::Parse(std::string_view text) {
  auto value = TryParse(text);
  if (!value) {
    throw Error(ErrorCode::kParse,
                "invalid rational literal \"" + std::string(text) + "\"");
  }
  return *std::move(value);
}

std::string Rational::ToString() const { return value_.get_str(); }

std::size_t Rational::BitSize() const {
  return mpz_sizeinbase(value_.get_num_mpz_t(), 2) +
         mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) {
    throw Error(ErrorCode::kInternal, "rational division by zero");
  }
  value_ /= other.value_;
  return *this;
}

Rational Abs(const Rational& value) {
  return value.sign() < 0 ? -value : value;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.ToString();
}

Rational Dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dot product of vectors with lengths " +
                    std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  mpq_class sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i].get() * b[i].get();
  return Rational(std::move(sum));
}

std::vector<std::string> ToStrings(std::span<const Rational> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(v.ToString());
  return out;
}

const Rational& ExtendedRational::value() const {
  if (!is_finite()) {
    throw Error(ErrorCode::kInternal,
                "value() called on infinite " + ToString());
  }
  return value_;
}

std::string ExtendedRational::ToString() const {
  switch (kind_) {
    case Kind::kNegativeInfinity: return "-inf";
    case Kind::kPositiveInfinity: return "+inf";
    case Kind::kFinite: break;
  }
  return value_.ToString();
}

std::strong_ordering operator<=>(const ExtendedRational& a,
                                 const ExtendedRational& b) {
  if (a.kind_ != b.kind_ || !a.is_finite()) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  return a.value_ <=> b.value_;
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& value) {
  return os << value.ToString();
}

}  // namespace stackdeceive
