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

/// @file continued_fraction.hpp
/// @brief Periodic continued fractions of quadratic irrationals.
///
/// An expansion is written [a0; a1, ..., ak, (b1, ..., bl)] with the integer
/// part a0 always kept in the preperiod, so the preperiod is never empty.
/// The period is the minimal repeating block and the preperiod the shortest
/// prefix (of length >= 1) after which the expansion is purely periodic.

#include "tangentlab/quadratic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tangentlab {

/// Integer 2x2 matrix [[a, b], [c, d]]; acts on reals as t -> (a t + b) / (c t + d).
struct IntMatrix2 {
  Integer a{1}, b{0}, c{0}, d{1};

  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;

  friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  Integer det() const { return a * d - b * c; }

  /// Inverse of a unimodular matrix; throws unless det = +-1.
  IntMatrix2 unimodular_inverse() const {
    const Integer dt = det();
    if (dt != 1 && dt != -1) throw std::domain_error("matrix is not unimodular");
    return {d * dt, -b * dt, -c * dt, a * dt};
  }

  IntMatrix2 negated() const { return {-a, -b, -c, -d}; }

  /// The partial-quotient matrix [[q, 1], [1, 0]].
  static IntMatrix2 partial_quotient(const Integer& q) { return {q, 1, 1, 0}; }
};

inline FieldElement apply(const IntMatrix2& m, const FieldElement& t) {
  return (FieldElement(Rational(m.a)) * t + FieldElement(Rational(m.b))) /
         (FieldElement(Rational(m.c)) * t + FieldElement(Rational(m.d)));
}

class ContinuedFraction {
 public:
  /// Canonicalizes an arbitrary eventually-periodic description: shrinks the
  /// period to its smallest repeating unit, then absorbs preperiod suffixes that
  /// match the period's rotation (never the leading integer part).
  static ContinuedFraction make(std::vector<Integer> preperiod, std::vector<Integer> period) {
    if (preperiod.empty()) throw std::invalid_argument("preperiod must contain the integer part");
    if (period.empty()) throw std::invalid_argument("period must be nonempty");
    for (std::size_t i = 1; i < preperiod.size(); ++i) {
      if (preperiod[i] < 1) throw std::invalid_argument("partial quotients after the first must be >= 1");
    }
    for (const auto& v : period) {
      if (v < 1) throw std::invalid_argument("period entries must be >= 1");
    }
    period = smallest_unit(std::move(period));
    while (preperiod.size() > 1 && preperiod.back() == period.back()) {
      std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
      preperiod.pop_back();
    }
    return ContinuedFraction(std::move(preperiod), std::move(period));
  }

  const std::vector<Integer>& preperiod() const { return preperiod_; }
  const std::vector<Integer>& period() const { return period_; }

  /// Partial quotient a_k of the infinite expansion.
  const Integer& term(std::size_t k) const {
    if (k < preperiod_.size()) return preperiod_[k];
    return period_[(k - preperiod_.size()) % period_.size()];
  }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  ContinuedFraction(std::vector<Integer> pre, std::vector<Integer> per)
      : preperiod_(std::move(pre)), period_(std::move(per)) {}

  static std::vector<Integer> smallest_unit(std::vector<Integer> v) {
    const std::size_t n = v.size();
    for (std::size_t len = 1; len < n; ++len) {
      if (n % len != 0) continue;
      bool repeats = true;
      for (std::size_t i = len; i < n && repeats; ++i) repeats = v[i] == v[i - len];
      if (repeats) {
        v.resize(len);
        return v;
      }
    }
    return v;
  }

  std::vector<Integer> preperiod_;
  std::vector<Integer> period_;
};

/// Expansion via the surd recurrence on x_k = (P_k + sqrt(D)) / Q_k with
/// Q_k | D - P_k^2. Complete quotients are determined by their (P, Q) state,
/// so the first repeated state (from index 1 on) fixes preperiod and period.
inline ContinuedFraction cf_expand(const QuadraticIrrational& x) {
  const Integer L = lcm_of(denominator_of(x.p()), denominator_of(x.q()));
  const Integer A = numerator_of(x.p() * Rational(L));
  const Integer B = numerator_of(x.q() * Rational(L));
  Integer P = B > 0 ? A : Integer(-A);
  Integer Q = B > 0 ? L : Integer(-L);
  Integer D = B * B * x.d();
  if ((D - P * P) % Q != 0) {
    const Integer scale = abs_of(Q);
    P *= scale;
    D *= scale * scale;
    Q *= scale;
  }
  const Integer root = isqrt(D);

  std::vector<Integer> terms;
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  for (std::size_t k = 0;; ++k) {
    if (k >= 1) {
      auto [it, inserted] = seen.try_emplace({P, Q}, k);
      if (!inserted) {
        const std::size_t start = it->second;
        std::vector<Integer> pre(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(start));
        std::vector<Integer> per(terms.begin() + static_cast<std::ptrdiff_t>(start), terms.end());
        return ContinuedFraction::make(std::move(pre), std::move(per));
      }
    }
    const Integer a = Q > 0 ? floor_div(P + root, Q) : floor_div(P + root + 1, Q);
    terms.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
}

/// Value of an expansion as an element of Q(sqrt(disc)) with the period
/// matrix discriminant disc left unreduced, so no factoring is needed. The
/// purely periodic tail t is the fixed point t > 1 of the period matrix M,
/// i.e. the positive root of c t^2 + (d - a) t - b = 0; the preperiod is then
/// folded in as x = a_k + 1/x.
inline FieldElement cf_value_unreduced(const ContinuedFraction& cf) {
  IntMatrix2 m;
  for (const auto& q : cf.period()) m = m * IntMatrix2::partial_quotient(q);
  const Integer trace_gap = m.a - m.d;
  const Integer disc = trace_gap * trace_gap + 4 * m.c * m.b;
  FieldElement value(Rational(trace_gap, 2 * m.c), Rational(1, 2 * m.c), disc);
  for (auto it = cf.preperiod().rbegin(); it != cf.preperiod().rend(); ++it) {
    value = FieldElement(Rational(*it)) + value.inverse();
  }
  return value;
}

/// Exact comparison of an unreduced p + q sqrt(n) with a canonical value:
/// equal iff the rational parts agree, q^2 n = x.q^2 x.d and the signs of q agree.
inline bool same_value(const FieldElement& unreduced, const QuadraticIrrational& x) {
  if (unreduced.p != x.p()) return false;
  if ((unreduced.q > 0) != (x.q() > 0)) return false;
  return unreduced.q * unreduced.q * Rational(unreduced.d) == x.q() * x.q() * Rational(x.d());
}

/// Canonical value of an expansion; throws RadicandTooLarge if the period
/// discriminant cannot be reduced exactly (see square_free_split).
inline QuadraticIrrational cf_value(const ContinuedFraction& cf) {
  const FieldElement v = cf_value_unreduced(cf);
  return QuadraticIrrational::from_radicand(v.p, v.q, v.d);
}

/// x_0 = x, x_{k+1} = 1 / (x_k - floor(x_k)); returns x_0 .. x_{count-1}.
inline std::vector<QuadraticIrrational> complete_quotients(const QuadraticIrrational& x, std::size_t count) {
  std::vector<QuadraticIrrational> out;
  out.reserve(count);
  FieldElement current = x;
  for (std::size_t k = 0; k < count; ++k) {
    const auto q = QuadraticIrrational::from_element(current);
    out.push_back(q);
    current = (current - FieldElement(Rational(floor_of(q)))).inverse();
  }
  return out;
}

/// "[1; (2)]", "[3; 1, (1, 2)]"
inline std::string to_string(const ContinuedFraction& cf) {
  std::string out = "[" + cf.preperiod().front().str() + "; ";
  for (std::size_t i = 1; i < cf.preperiod().size(); ++i) out += cf.preperiod()[i].str() + ", ";
  out += "(";
  for (std::size_t i = 0; i < cf.period().size(); ++i) {
    if (i) out += ", ";
    out += cf.period()[i].str();
  }
  return out + ")]";
}

}  // namespace tangentlab
