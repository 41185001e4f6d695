// Copyright 2026 The almostcore Authors
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

#ifndef ALMOSTCORE_RATIONAL_HPP_
#define ALMOSTCORE_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace almostcore {

// Exact arbitrary-precision rational, always in lowest terms with a positive
// denominator. Thin value wrapper over GMP's mpq_class that hides the
// expression templates and gives us "p/q" I/O.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(long long numerator, long long denominator) {
    if (denominator == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                       mpz_class(static_cast<long>(denominator)));
    value_.canonicalize();
  }
  explicit Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  // Accepts "p", "-p", "p/q", "-p/q" with q > 0. Surrounding whitespace is
  // not accepted; callers trim.
  static Rational Parse(std::string_view text) {
    auto bad = [&] {
      return std::invalid_argument("malformed rational '" + std::string(text) +
                                   "'");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    auto valid_integer = [](std::string_view s, bool allow_sign) {
      if (s.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
      }
      return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false)) throw bad();
    if (num[0] == '+') num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw bad();
    return Rational(mpq_class(n, d));
  }

  std::string ToString() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  double ToDouble() const { return value_.get_d(); }
  int Sign() const { return sgn(value_); }
  bool IsZero() const { return Sign() == 0; }
  bool IsInteger() const { return value_.get_den() == 1; }
  std::string Numerator() const { return value_.get_num().get_str(); }
  std::string Denominator() const { return value_.get_den().get_str(); }
  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.IsZero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
  }

  // *this += a * b without an intermediate Rational.
  void AddProduct(const Rational& a, const Rational& b) {
    value_ += a.value_ * b.value_;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.value_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  mpq_class value_;
};

inline Rational Abs(const Rational& r) { return r.Sign() < 0 ? -r : r; }
inline const Rational& Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace almostcore

#endif  // ALMOSTCORE_RATIONAL_HPP_
