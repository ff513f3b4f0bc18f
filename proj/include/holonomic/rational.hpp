// Copyright 2026 The Holonomic Authors
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

#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holonomic {

/// Exact rational number on 64-bit numerator/denominator.
///
/// All arithmetic is carried out in 128-bit intermediates and reduced by the
/// gcd; a result that does not fit back into 64 bits throws
/// std::overflow_error instead of wrapping. The denominator is always
/// positive and the fraction is always in lowest terms, so equality is
/// structural.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  long double to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }
  double to_double() const { return static_cast<double>(to_long_double()); }

  /// Always "n/d", including "n/1" for integers.
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "n", "n/d", optionally signed. Decimal literals are rejected.
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    auto parse_int = [](std::string_view s) -> std::int64_t {
      if (s.empty()) throw std::invalid_argument("empty integer");
      std::size_t i = 0;
      bool neg = false;
      if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
      }
      if (i == s.size()) throw std::invalid_argument("bad integer '" + std::string(s) + "'");
      __int128 v = 0;
      for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
          throw std::invalid_argument("bad rational literal '" + std::string(s) + "'");
        v = v * 10 + (s[i] - '0');
        if (v > std::numeric_limits<std::int64_t>::max())
          throw std::overflow_error("integer literal out of range");
      }
      return static_cast<std::int64_t>(neg ? -v : v);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    auto d = parse_int(trim(text.substr(slash + 1)));
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(trim(text.substr(0, slash))), d);
  }

  /// Continued-fraction rounding. Returns the first convergent within `tol`
  /// of `x`, or the last convergent whose denominator is at most `max_den`.
  static Rational from_approximation(long double x, std::int64_t max_den,
                                     long double tol = 1e-9L) {
    if (!std::isfinite(x)) throw std::domain_error("cannot reconstruct a non-finite value");
    long double r = x;
    __int128 p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Rational best(static_cast<std::int64_t>(std::floor(x)));
    for (int iter = 0; iter < 64; ++iter) {
      long double a = std::floor(r);
      if (std::fabs(a) > 9.0e18L) break;
      auto ai = static_cast<__int128>(a);
      __int128 p2 = ai * p1 + p0;
      __int128 q2 = ai * q1 + q0;
      if (q2 > max_den || p2 > std::numeric_limits<std::int64_t>::max() ||
          p2 < -std::numeric_limits<std::int64_t>::max())
        break;
      best = Rational(static_cast<std::int64_t>(p2), static_cast<std::int64_t>(q2));
      if (std::fabs(best.to_long_double() - x) <= tol) break;
      long double frac = r - a;
      if (frac <= 0.0L) break;
      r = 1.0L / frac;
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
    }
    return best;
  }

  Rational operator-() const {
    Rational out;
    out.num_ = checked(-static_cast<__int128>(num_));
    out.den_ = den_;
    return out;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    return from_wide(static_cast<__int128>(a.num_) * b.num_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero rational");
    __int128 n = static_cast<__int128>(a.num_) * b.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.num_;
    return from_wide(n, d);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static std::int64_t checked(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < -std::numeric_limits<std::int64_t>::max())
      throw std::overflow_error("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Rational out;
    if (n == 0) return out;
    __int128 g = gcd128(n, d);
    out.num_ = checked(n / g);
    out.den_ = checked(d / g);
    return out;
  }

  void assign(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  Rational out(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace holonomic

template <>
struct std::hash<holonomic::Rational> {
  std::size_t operator()(const holonomic::Rational& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
  }
};
