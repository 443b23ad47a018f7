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

#ifndef STACKDECEIVE_RATIONAL_H_
#define STACKDECEIVE_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stackdeceive {

// Exact arbitrary-precision fraction, always held in canonical form
// (positive denominator, coprime numerator and denominator).
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT: numeric conversion is intended.
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(mpq_class value);

  // Accepts "12", "-3", "0.125", "-1.5", "3/4", "-6/8" and "6/-8".
  // Throws Error(kParse) on anything else, including a zero denominator.
  static Rational Parse(std::string_view text);
  static std::optional<Rational> TryParse(std::string_view text);

  // Canonical "p/q", or "p" when the denominator is 1.
  std::string ToString() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }
  // Bits needed for numerator plus denominator.
  std::size_t BitSize() const;
  double ToDouble() const { return value_.get_d(); }
  const mpq_class& get() const { return value_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  // Division by zero raises Error(kInternal).
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational Abs(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational Dot(std::span<const Rational> a, std::span<const Rational> b);
std::vector<std::string> ToStrings(std::span<const Rational> values);

// A rational extended with the two infinities. Used for optimisation values
// over possibly empty domains (max of nothing is -inf, min of nothing +inf).
class ExtendedRational {
 public:
  enum class Kind { kNegativeInfinity, kFinite, kPositiveInfinity };

  ExtendedRational(Rational value)  // NOLINT: finite values convert freely.
      : kind_(Kind::kFinite), value_(std::move(value)) {}

  static ExtendedRational NegativeInfinity() {
    return ExtendedRational(Kind::kNegativeInfinity);
  }
  static ExtendedRational PositiveInfinity() {
    return ExtendedRational(Kind::kPositiveInfinity);
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  // Throws Error(kInternal) when not finite.
  const Rational& value() const;

  // "-inf", "+inf" or the canonical rational string.
  std::string ToString() const;

  friend bool operator==(const ExtendedRational& a,
                         const ExtendedRational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b);

 private:
  explicit ExtendedRational(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& value);

}  // namespace stackdeceive

#endif  // STACKDECEIVE_RATIONAL_H_
