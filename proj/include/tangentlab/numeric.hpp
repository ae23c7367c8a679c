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

/// @file numeric.hpp
/// @brief Arbitrary-precision integer and rational scalars.
///
/// Every computation in the library is exact. Integers are unbounded and
/// rationals are always stored in lowest terms with a positive denominator,
/// so structural equality coincides with numeric equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tangentlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline Integer denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

inline Integer abs_of(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline Integer gcd_of(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs_of(a), abs_of(b));
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_of(a) / gcd_of(a, b) * abs_of(b);
}

/// Floor division; the divisor must be nonzero.
inline Integer floor_div(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("division by zero");
  Integer q = num / den;  // truncates toward zero
  Integer r = num - q * den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

/// Largest s with s*s <= n; n must be non-negative.
inline Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Rational(num, den);
}

inline Integer floor_of(const Rational& r) {
  return floor_div(numerator_of(r), denominator_of(r));
}

/// "3", "-1/2"
inline std::string to_string(const Rational& r) {
  if (is_integral(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace tangentlab
