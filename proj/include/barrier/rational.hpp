// Copyright 2026 The Barrier Coverage Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BARRIER_RATIONAL_HPP_
#define BARRIER_RATIONAL_HPP_

#include <charconv>
#include <compare>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "barrier/errors.hpp"

namespace barrier {

namespace internal {
__extension__ typedef __int128 Int128;
}  // namespace internal

// Exact rational number num/den with 64-bit components, always kept in lowest
// terms with den > 0. Intermediate products use 128-bit integers; a result
// that does not fit back into 64 bits throws OverflowError rather than
// rounding.
class Rational {
 public:
  constexpr Rational() = default;

  template <std::integral I>
  constexpr Rational(I value) : num_(static_cast<int64_t>(value)) {}  // NOLINT

  Rational(int64_t num, int64_t den) { Assign(num, den); }

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  // Floor and ceiling as integers.
  int64_t Floor() const {
    int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  int64_t Ceil() const {
    int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  double ToDouble() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "p/q" in lowest terms, or "p" when integral.
  std::string ToString() const {
    std::string out = std::to_string(num_);
    if (den_ != 1) {
      out += '/';
      out += std::to_string(den_);
    }
    return out;
  }

  // Accepts "p", "p/q" and plain decimals such as "-0.125".
  static Rational Parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational");
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
      const int64_t p = ParseInt(text.substr(0, slash), text);
      const int64_t q = ParseInt(text.substr(slash + 1), text);
      if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
      return Rational(p, q);
    }
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(ParseInt(text, text));
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18) {
      throw ParseError("bad decimal '" + std::string(text) + "'");
    }
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::string_view digits =
        negative || (!whole.empty() && whole.front() == '+') ? whole.substr(1) : whole;
    int64_t scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const Rational int_part = digits.empty() ? Rational(0) : Rational(ParseInt(digits, text));
    if (frac.front() == '-' || frac.front() == '+') {
      throw ParseError("bad decimal '" + std::string(text) + "'");
    }
    const Rational result = int_part + Rational(ParseInt(frac, text), scale);
    return negative ? -result : result;
  }

  Rational operator-() const {
    if (num_ == INT64_MIN) throw OverflowError("rational negation overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return FromWide(Wide(a.num_) + b.num_, a.den_);
    return FromWide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                    Wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return FromWide(Wide(a.num_) - b.num_, a.den_);
    return FromWide(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_,
                    Wide(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return FromWide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw PreconditionError("rational division by zero");
    return FromWide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  using Wide = internal::Int128;

  static Wide Gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational FromWide(Wide num, Wide den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const Wide g = Gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num > INT64_MAX || num < -INT64_MAX || den > INT64_MAX) {
      throw OverflowError("rational result exceeds 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<int64_t>(num);
    r.den_ = static_cast<int64_t>(den);
    return r;
  }

  void Assign(int64_t num, int64_t den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    *this = FromWide(num, den);
  }

  static int64_t ParseInt(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("bad rational '" + std::string(whole) + "'");
    }
    return value;
  }

  int64_t num_ = 0;
  int64_t den_ = 1;
};

inline Rational Abs(const Rational& r) { return r < 0 ? -r : r; }

inline int64_t Lcm(int64_t a, int64_t b) {
  const int64_t g = std::gcd(a, b);
  const internal::Int128 l = static_cast<internal::Int128>(a / g) * b;
  if (l > INT64_MAX) throw OverflowError("lcm exceeds 64-bit range");
  return static_cast<int64_t>(l);
}

}  // namespace barrier

#endif  // BARRIER_RATIONAL_HPP_
