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

/// @file mobius.hpp
/// @brief Integer fractional-linear relations between quadratic irrationals.
///
/// A witness (a, b, c, d) asserts x = (a + b y) / (c + d y). Two relations
/// are decided here:
///
///  * integer-Moebius relatedness, with any nonsingular witness. For an
///    irrational y a singular witness gives a rational x, so related
///    irrationals generate the same field; conversely inside one field
///    Q(sqrt(D)) an affine witness with d = 0 always exists. Relatedness is
///    therefore the same as equality of square-free radicands.
///  * GL2(Z)-equivalence (ad - bc = +-1), decided by Serret's theorem:
///    equivalent iff the continued fractions share a tail.

#include "tangentlab/continued_fraction.hpp"
#include "tangentlab/quadratic.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace tangentlab {

struct MobiusWitness {
  Integer a, b, c, d;

  Integer det() const { return a * d - b * c; }

  friend bool operator==(const MobiusWitness&, const MobiusWitness&) = default;

  /// Both (a,b,c,d) and its negation describe the same map; choose c > 0,
  /// or d > 0 when c == 0.
  MobiusWitness normalized() const {
    if (c < 0 || (c == 0 && d < 0)) return {-a, -b, -c, -d};
    return *this;
  }
};

/// (a + b x) / (c + d x). Throws std::domain_error for (c, d) = (0, 0).
inline QuadraticValue mobius_apply(const MobiusWitness& w, const FieldElement& x) {
  if (w.c == 0 && w.d == 0) throw std::domain_error("malformed witness: zero denominator");
  const FieldElement num = FieldElement(Rational(w.a)) + FieldElement(Rational(w.b)) * x;
  const FieldElement den = FieldElement(Rational(w.c)) + FieldElement(Rational(w.d)) * x;
  return collapse(num / den);
}

/// True when mobius_apply(w, y) == x exactly.
inline bool witnesses(const MobiusWitness& w, const QuadraticIrrational& x, const QuadraticIrrational& y) {
  if (w.c == 0 && w.d == 0) return false;
  const FieldElement den = FieldElement(Rational(w.c)) + FieldElement(Rational(w.d)) * y.element();
  if (den == FieldElement()) return false;
  const QuadraticValue v = mobius_apply(w, y);
  const auto* irr = std::get_if<QuadraticIrrational>(&v);
  return irr != nullptr && *irr == x;
}

inline bool same_field(const QuadraticIrrational& x, const QuadraticIrrational& y) { return x.d() == y.d(); }

/// Affine witness x = (a + b y) / c with c > 0 and gcd(a, b, c) = 1, or none
/// when x and y lie in different fields. With x = p1 + q1 sqrt(D) and
/// y = p2 + q2 sqrt(D): x = (q1/q2) y + (p1 - (q1/q2) p2).
inline std::optional<MobiusWitness> mobius_witness(const QuadraticIrrational& x, const QuadraticIrrational& y) {
  if (!same_field(x, y)) return std::nullopt;
  const Rational slope = x.q() / y.q();
  const Rational offset = x.p() - slope * y.p();
  const Integer c = lcm_of(denominator_of(slope), denominator_of(offset));
  Integer a = numerator_of(offset * Rational(c));
  Integer b = numerator_of(slope * Rational(c));
  Integer cc = c;
  const Integer g = gcd_of(gcd_of(a, b), cc);
  if (g > 1) {
    a /= g;
    b /= g;
    cc /= g;
  }
  return MobiusWitness{a, b, cc, 0};
}

/// Converts x = M t into witness form: x = (m.b + m.a t) / (m.d + m.c t).
inline MobiusWitness witness_from_matrix(const IntMatrix2& m) { return MobiusWitness{m.b, m.a, m.d, m.c}; }

inline IntMatrix2 matrix_from_witness(const MobiusWitness& w) { return IntMatrix2{w.b, w.a, w.d, w.c}; }

/// Unimodular witness x = (a + b y)/(c + d y), |ad - bc| = 1, or none.
///
/// With M_x(i) the product of the first i partial-quotient matrices of x, we
/// have x = M_x(i) x_i. The smallest (i, j) in lexicographic order with equal
/// complete quotients x_i = y_j gives x = M_x(i) M_y(j)^{-1} y. Scanning
/// i < |pre_x| + |period_x| and j < |pre_y| + |period_y| covers a full cycle
/// of both tails, so a common tail is always found when one exists.
inline std::optional<MobiusWitness> gl2z_equivalent(const QuadraticIrrational& x, const QuadraticIrrational& y) {
  if (!same_field(x, y)) return std::nullopt;
  const ContinuedFraction cx = cf_expand(x);
  const ContinuedFraction cy = cf_expand(y);
  const std::size_t nx = cx.preperiod().size() + cx.period().size();
  const std::size_t ny = cy.preperiod().size() + cy.period().size();
  const auto qx = complete_quotients(x, nx);
  const auto qy = complete_quotients(y, ny);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      if (!(qx[i] == qy[j])) continue;
      IntMatrix2 mx, my;
      for (std::size_t k = 0; k < i; ++k) mx = mx * IntMatrix2::partial_quotient(cx.term(k));
      for (std::size_t k = 0; k < j; ++k) my = my * IntMatrix2::partial_quotient(cy.term(k));
      return witness_from_matrix(mx * my.unimodular_inverse()).normalized();
    }
  }
  return std::nullopt;
}

/// "(a,b,c,d)"
inline std::string to_string(const MobiusWitness& w) {
  return "(" + w.a.str() + "," + w.b.str() + "," + w.c.str() + "," + w.d.str() + ")";
}

}  // namespace tangentlab
