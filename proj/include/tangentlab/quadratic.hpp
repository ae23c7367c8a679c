// Copyright 2026 The tangentlab Authors
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

/// @file quadratic.hpp
/// @brief Exact arithmetic in real quadratic fields Q(sqrt(d)).
///
/// FieldElement is any p + q*sqrt(d), rational values included (q == 0,
/// stored with d == 1). QuadraticIrrational is the strictly irrational
/// subset with a canonical triple (p, q, d): d >= 2 square-free, q != 0.
/// Because d is square-free and the rationals are reduced, equal reals have
/// identical triples and operator== is numeric equality.

#include "tangentlab/numeric.hpp"

#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace tangentlab {

/// Radicands are factored by trial division with divisors up to 10^6, which
/// is exact for every radicand up to 10^12.
inline constexpr std::int64_t kTrialDivisionLimit = 1'000'000;
inline constexpr std::int64_t kRadicandBound = kTrialDivisionLimit * kTrialDivisionLimit;

class RadicandTooLarge : public std::domain_error {
 public:
  explicit RadicandTooLarge(const Integer& n)
      : std::domain_error("radicand " + n.str() + " exceeds the factoring bound 10^12") {}
};

/// n = root^2 * core with core square-free.
struct SquareFreeSplit {
  Integer root;
  Integer core;
};

namespace detail {

inline SquareFreeSplit small_square_free_split(std::int64_t rest) {
  std::int64_t root = 1;
  std::int64_t core = 1;
  for (std::int64_t f = 2; f * f <= rest; ++f) {
    int multiplicity = 0;
    while (rest % f == 0) {
      rest /= f;
      ++multiplicity;
    }
    for (int i = 0; i < multiplicity / 2; ++i) root *= f;
    if (multiplicity % 2 == 1) core *= f;
  }
  core *= rest;  // leftover is 1 or a prime
  return {Integer(root), Integer(core)};
}

}  // namespace detail

/// Exact square-free decomposition by trial division with divisors up to 10^6.
///
/// Radicands up to 10^12 are always split exactly. Larger n are accepted when
/// the cofactor left after removing every prime <= 10^6 is provably
/// square-free or a perfect square: it is then a product of primes > 10^6, so a
/// cofactor below 10^18 has at most two of them. Anything else throws
/// RadicandTooLarge.
inline SquareFreeSplit square_free_split(const Integer& n) {
  if (n < 0) throw std::domain_error("negative radicand " + n.str());
  if (n == 0) return {0, 1};
  if (n <= kRadicandBound) return detail::small_square_free_split(static_cast<std::int64_t>(n));
  Integer rest = n;
  Integer root = 1;
  Integer core = 1;
  for (std::int64_t f = 2; f <= kTrialDivisionLimit && Integer(f) * f <= rest; ++f) {
    if (rest % f != 0) continue;
    int multiplicity = 0;
    while (rest % f == 0) {
      rest /= f;
      ++multiplicity;
    }
    for (int i = 0; i < multiplicity / 2; ++i) root *= f;
    if (multiplicity % 2 == 1) core *= f;
  }
  if (rest == 1 || rest <= kRadicandBound) return {root, core * rest};
  const Integer s = isqrt(rest);
  if (s * s == rest) return {root * s, core};
  if (rest < Integer(kRadicandBound) * kTrialDivisionLimit) return {root, core * rest};
  throw RadicandTooLarge(n);
}

inline bool is_square_free(const Integer& n) {
  return n >= 1 && square_free_split(n).root == 1;
}

/// Element p + q*sqrt(d) of a real quadratic field, or a rational (q == 0, d == 1).
struct FieldElement {
  Rational p{0};
  Rational q{0};
  Integer d{1};

  FieldElement() = default;
  FieldElement(Rational rational) : p(std::move(rational)) {}  // NOLINT
  FieldElement(Rational p_, Rational q_, Integer d_) : p(std::move(p_)), q(std::move(q_)), d(std::move(d_)) {
    normalize();
  }
  FieldElement(int v) : p(v) {}  // NOLINT

  bool is_rational() const { return q == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

  FieldElement operator-() const { return {-p, -q, d}; }

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    const Integer r = common_radicand(x, y);
    return {x.p + y.p, x.q + y.q, r};
  }
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y) { return x + (-y); }
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    const Integer r = common_radicand(x, y);
    return {x.p * y.p + x.q * y.q * Rational(r), x.p * y.q + x.q * y.p, r};
  }

  /// Field norm p^2 - d q^2; zero only for the zero element.
  Rational norm() const { return p * p - q * q * Rational(d); }

  FieldElement inverse() const {
    const Rational n = norm();
    if (n == 0) throw std::domain_error("division by zero in quadratic field");
    return {p / n, -q / n, d};
  }

  friend FieldElement operator/(const FieldElement& x, const FieldElement& y) { return x * y.inverse(); }

 private:
  void normalize() {
    if (q == 0) d = 1;
  }

  static Integer common_radicand(const FieldElement& x, const FieldElement& y) {
    if (x.is_rational()) return y.d;
    if (y.is_rational()) return x.d;
    if (x.d != y.d) {
      throw std::domain_error("sqrt(" + x.d.str() + ") and sqrt(" + y.d.str() +
                              ") lie in different quadratic fields");
    }
    return x.d;
  }
};

class QuadraticIrrational {
 public:
  /// Canonical constructor; rejects q == 0 and non-square-free d.
  static QuadraticIrrational make(Rational p, Rational q, Integer d) {
    if (q == 0) throw std::invalid_argument("quadratic irrational needs a nonzero surd coefficient");
    if (d < 2 || !is_square_free(d)) {
      throw std::invalid_argument("radicand " + d.str() + " is not a square-free integer >= 2");
    }
    return QuadraticIrrational(std::move(p), std::move(q), std::move(d));
  }

  /// p + q*sqrt(n) for an arbitrary radicand, folding the square part of n into q.
  /// Throws std::invalid_argument when the value is rational.
  static QuadraticIrrational from_radicand(const Rational& p, const Rational& q, const Integer& n) {
    const auto split = square_free_split(n);
    return make(p, q * Rational(split.root), split.core);
  }

  static QuadraticIrrational from_element(const FieldElement& e) {
    if (e.is_rational()) throw std::invalid_argument("value " + to_string(e.p) + " is rational");
    return QuadraticIrrational(e.p, e.q, e.d);
  }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Integer& d() const { return d_; }

  FieldElement element() const { return {p_, q_, d_}; }
  operator FieldElement() const { return element(); }  // NOLINT

  friend bool operator==(const QuadraticIrrational&, const QuadraticIrrational&) = default;

 private:
  QuadraticIrrational(Rational p, Rational q, Integer d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {}

  Rational p_;
  Rational q_;
  Integer d_;
};

using QuadraticValue = std::variant<Rational, QuadraticIrrational>;

inline QuadraticValue collapse(const FieldElement& e) {
  if (e.is_rational()) return e.p;
  return QuadraticIrrational::from_element(e);
}

inline bool is_irrational(const QuadraticValue& v) { return std::holds_alternative<QuadraticIrrational>(v); }

/// Exact floor. x = (A + B sqrt(d)) / L with L > 0; B sqrt(d) = sign(B) sqrt(B^2 d)
/// is irrational, so floor((A + s)/L) = floor((A + floor s)/L) for any real s.
inline Integer floor_of(const QuadraticIrrational& x) {
  const Integer L = lcm_of(denominator_of(x.p()), denominator_of(x.q()));
  const Integer A = numerator_of(x.p() * Rational(L));
  const Integer B = numerator_of(x.q() * Rational(L));
  const Integer root = isqrt(B * B * x.d());
  // floor(B sqrt d) is root for B > 0 and -root-1 for B < 0
  const Integer floor_surd = B > 0 ? root : Integer(-root - 1);
  return floor_div(A + floor_surd, L);
}

inline double approximate(const FieldElement& e) {
  return static_cast<double>(e.p) + static_cast<double>(e.q) * std::sqrt(static_cast<double>(e.d));
}

/// Text form accepted by parse_quadratic, e.g. "(1+sqrt(5))/2", "-sqrt(2)", "3-2*sqrt(7)".
inline std::string to_string(const FieldElement& e) {
  if (e.is_rational()) return to_string(e.p);
  const Integer L = lcm_of(denominator_of(e.p), denominator_of(e.q));
  const Integer A = numerator_of(e.p * Rational(L));
  const Integer B = numerator_of(e.q * Rational(L));
  const std::string surd = "sqrt(" + e.d.str() + ")";
  std::string out;
  if (A != 0) out = A.str();
  if (B == 1) {
    out += A != 0 ? "+" + surd : surd;
  } else if (B == -1) {
    out += "-" + surd;
  } else if (B > 0) {
    out += (A != 0 ? "+" : "") + B.str() + "*" + surd;
  } else {
    out += B.str() + "*" + surd;
  }
  if (L != 1) out = "(" + out + ")/" + L.str();
  return out;
}

inline std::string to_string(const QuadraticIrrational& x) { return to_string(x.element()); }

inline std::string to_string(const QuadraticValue& v) {
  return std::visit([](const auto& x) { return to_string(FieldElement(x)); }, v);
}

}  // namespace tangentlab
