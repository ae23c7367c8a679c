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

/// @file orbit_space.hpp
/// @brief Orbit spaces H_n = R^n / O(n) and maps between them.
///
/// Smooth germs at the class of 0 are even functions of the radius, i.e.
/// g([x]) = psi(|x|^2). Here germs and lifts are polynomials over Q, which is
/// enough for every value needed below: only the 1-jet of psi and the linear
/// part of a lift enter.
///
/// The right tangent space of H_n is spanned by D_n with
/// D_n(g) = 1/2 d^2/dx1^2 [psi(|x|^2)] at 0 = psi'(0). A map f: H_m -> H_n is
/// given by a polynomial lift F: R^m -> R^n, F(0) = 0, whose squared norm is
/// psi_F(|x|^2); then T(f) D_m = psi_F'(0) D_n.

#include "tangentlab/numeric.hpp"
#include "tangentlab/polynomial.hpp"
#include "tangentlab/report.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tangentlab {

inline constexpr unsigned kDefaultDegreeBound = 8;
inline constexpr const char* kOrbitGenerator = "D_n";

struct OrbitSpace {
  unsigned n;

  explicit OrbitSpace(unsigned dim) : n(dim) {
    if (n < 1) throw std::invalid_argument("orbit space H_n needs n >= 1");
  }
  Space space() const { return Space::orbit(n); }
};

/// The germ [x] -> psi(|x|^2).
struct InvariantGerm {
  UnivariatePolynomial psi;

  /// q_n([x]) = |x|^2
  static InvariantGerm squared_norm() { return {UnivariatePolynomial({0, 1})}; }

  friend bool operator==(const InvariantGerm&, const InvariantGerm&) = default;
};

/// coeff * D_n
struct Derivation {
  Rational coeff{1};
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

class PolyLift {
 public:
  /// Components are polynomials in x1..xm with zero constant term.
  static PolyLift make(unsigned m, std::vector<Polynomial> components) {
    if (m < 1) throw std::invalid_argument("lift source dimension must be >= 1");
    if (components.empty()) throw std::invalid_argument("lift needs at least one component");
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (components[i].variables() != m) {
        throw std::invalid_argument("component " + std::to_string(i + 1) + " is not a polynomial in x1..x" +
                                    std::to_string(m));
      }
      if (components[i].constant_term() != 0) {
        throw std::invalid_argument("component " + std::to_string(i + 1) + " has a nonzero constant term");
      }
    }
    return PolyLift(m, std::move(components));
  }

  /// Reads "x1^2+x2^2; 0": one component per ';'-separated field.
  static PolyLift parse(unsigned m, std::string_view text) {
    std::vector<Polynomial> parts;
    std::size_t start = 0;
    for (;;) {
      const std::size_t end = text.find(';', start);
      parts.push_back(parse_polynomial(text.substr(start, end - start), m));
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    return make(m, std::move(parts));
  }

  unsigned m() const { return m_; }
  unsigned n() const { return static_cast<unsigned>(components_.size()); }
  const std::vector<Polynomial>& components() const { return components_; }

  /// |F(x)|^2
  Polynomial squared_norm() const {
    Polynomial s(m_);
    for (const auto& c : components_) s = s + c * c;
    return s;
  }

  int degree() const {
    int d = -1;
    for (const auto& c : components_) d = std::max(d, c.total_degree());
    return d;
  }

  friend bool operator==(const PolyLift&, const PolyLift&) = default;

 private:
  PolyLift(unsigned m, std::vector<Polynomial> c) : m_(m), components_(std::move(c)) {}

  unsigned m_;
  std::vector<Polynomial> components_;
};

/// "(x1; x2; 0)"
inline std::string to_string(const PolyLift& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.components().size(); ++i) {
    if (i) out += "; ";
    out += to_string(f.components()[i]);
  }
  return out + ")";
}

/// Why a candidate lift does not descend, with a monomial where it fails.
struct InvalidLift {
  std::string reason;
  Monomial counterexample;
};

class InvalidLiftError : public std::invalid_argument {
 public:
  explicit InvalidLiftError(InvalidLift detail)
      : std::invalid_argument("invalid lift: " + detail.reason + " (monomial " + to_string(detail.counterexample) +
                              ")"),
        detail_(std::move(detail)) {}
  const InvalidLift& detail() const { return detail_; }

 private:
  InvalidLift detail_;
};

namespace detail {

/// Leading monomial in printing order (highest degree first).
inline Monomial leading_monomial(const Polynomial& p) {
  Monomial best;
  unsigned best_degree = 0;
  for (const auto& [m, c] : p.terms()) {
    const unsigned d = total_degree(m);
    if (best.empty() || d > best_degree || (d == best_degree && m > best)) {
      best = m;
      best_degree = d;
    }
  }
  return best;
}

}  // namespace detail

/// The psi with |F(x)|^2 = psi(|x|^2), or the reason none exists.
///
/// Restricting to the x1-axis gives |F(x1, 0, ..)|^2 = psi(x1^2), which must be
/// even and determines psi. The identity is then checked on every monomial.
inline std::variant<InvariantGerm, InvalidLift> validate_lift(const PolyLift& f,
                                                               unsigned degree_bound = kDefaultDegreeBound) {
  const Polynomial s = f.squared_norm();
  if (s.total_degree() > static_cast<int>(2 * degree_bound)) {
    return InvalidLift{"squared norm exceeds degree " + std::to_string(2 * degree_bound),
                       detail::leading_monomial(s)};
  }
  const UnivariatePolynomial axis = s.restrict_to_axis(0);
  std::vector<Rational> psi;
  for (std::size_t k = 0; k < axis.coefficients().size(); ++k) {
    const Rational& c = axis.coefficients()[k];
    if (k % 2 == 1 && c != 0) {
      Monomial odd(f.m(), 0);
      odd[0] = static_cast<unsigned>(k);
      return InvalidLift{"squared norm is odd along the x1-axis", odd};
    }
    if (k % 2 == 0) psi.push_back(c);
  }
  InvariantGerm germ{UnivariatePolynomial(std::move(psi))};
  const Polynomial gap = s - compose(germ.psi, Polynomial::squared_norm(f.m()));
  if (!gap.is_zero()) {
    return InvalidLift{"squared norm is not a function of |x|^2", detail::leading_monomial(gap)};
  }
  return germ;
}

/// Throws InvalidLiftError instead of returning the reason.
inline InvariantGerm lift_germ(const PolyLift& f, unsigned degree_bound = kDefaultDegreeBound) {
  auto v = validate_lift(f, degree_bound);
  if (auto* bad = std::get_if<InvalidLift>(&v)) throw InvalidLiftError(std::move(*bad));
  return std::get<InvariantGerm>(std::move(v));
}

/// coeff * psi'(0)
inline Rational derivation_value(const Derivation& d, const InvariantGerm& g) {
  return d.coeff * g.psi.coefficient(1);
}

/// T(f) (coeff D_m) = coeff psi_F'(0) D_n
inline Derivation pushforward(const PolyLift& f, const Derivation& d) {
  return {d.coeff * lift_germ(f).psi.coefficient(1)};
}

/// g o f for a germ g on the target: psi_g(psi_F(t)).
inline InvariantGerm pullback(const InvariantGerm& g, const PolyLift& f) {
  return {g.psi.compose(lift_germ(f).psi)};
}

/// second o first
inline PolyLift compose(const PolyLift& second, const PolyLift& first) {
  if (first.n() != second.m()) throw std::invalid_argument("lifts are not composable");
  std::vector<Polynomial> out;
  out.reserve(second.n());
  for (const auto& c : second.components()) out.push_back(c.substitute(first.components()));
  return PolyLift::make(first.m(), std::move(out));
}

/// x -> (x, 0): R^m -> R^n, m <= n
inline PolyLift standard_embedding(unsigned m, unsigned n) {
  if (m < 1 || m > n) throw std::invalid_argument("standard embedding needs 1 <= m <= n");
  std::vector<Polynomial> c;
  for (unsigned i = 0; i < n; ++i) c.push_back(i < m ? Polynomial::variable(m, i) : Polynomial(m));
  return PolyLift::make(m, std::move(c));
}

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RankObstruction {
  RationalMatrix a;      // n x m linear part of F
  RationalMatrix gram;   // m x m, transpose(A) A
  std::optional<Rational> scalar;  // a when gram = a I_m
};

/// Degree-2 part of |F|^2 = psi(|x|^2) gives |Ax|^2 = psi'(0) |x|^2, so
/// transpose(A) A = psi'(0) I_m. For m > n its rank is at most n < m, so the
/// scalar is 0. Both facts are checked on the result.
inline RankObstruction rank_obstruction(const PolyLift& f) {
  const InvariantGerm germ = lift_germ(f);
  const unsigned m = f.m();
  const unsigned n = f.n();
  RankObstruction out;
  out.a.assign(n, std::vector<Rational>(m));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < m; ++j) out.a[i][j] = f.components()[i].linear_coefficient(j);
  out.gram.assign(m, std::vector<Rational>(m));
  for (unsigned j = 0; j < m; ++j)
    for (unsigned k = 0; k < m; ++k)
      for (unsigned i = 0; i < n; ++i) out.gram[j][k] += out.a[i][j] * out.a[i][k];

  bool scalar = true;
  for (unsigned j = 0; j < m && scalar; ++j)
    for (unsigned k = 0; k < m && scalar; ++k) scalar = out.gram[j][k] == (j == k ? out.gram[0][0] : Rational(0));
  if (scalar) out.scalar = out.gram[0][0];

  if (!out.scalar) throw std::logic_error("gram matrix of a valid lift is not scalar");
  if (*out.scalar != germ.psi.coefficient(1)) throw std::logic_error("gram scalar disagrees with psi'(0)");
  if (m > n && *out.scalar != 0) throw std::logic_error("nonzero gram scalar for m > n");
  return out;
}

inline LiftWitness lift_witness(const PolyLift& f) {
  LiftWitness w{f.m(), f.n(), {}, pushforward(f, Derivation{}).coeff};
  for (const auto& c : f.components()) w.components.push_back(to_string(c));
  return w;
}

/// Dimension of the (H_m, 0)-right tangent space of H_n: the span of all
/// pushforwards T(f) D_m.
inline TangentReport y_right_dim(unsigned m, unsigned n) {
  const OrbitSpace space(n);
  const auto kind = FunctorKind::y_right(OrbitSpace(m).space());
  if (m <= n) {
    const PolyLift iota = standard_embedding(m, n);
    const LiftWitness w = lift_witness(iota);
    if (w.pushforward != 1) throw std::logic_error("standard embedding must push D_m to D_n");
    return TangentReport::determined_by(space.space(), kind, {kOrbitGenerator}, Status::computed,
                                        "isometric embedding ι(x) = (x, 0) satisfies q_n∘ι = q_m, so "
                                        "T(ι)D_m = D_m(q_m) D_n = D_n",
                                        w);
  }
  return TangentReport::determined_by(space.space(), kind, {}, Status::registered_by_theorem,
                                      "m > n: any lift F has linear part A with ᵗA A = a I_m and rank A ≤ n < m, "
                                      "so a = 0 and D_m(q_n∘f) = 0 for every f");
}

/// internal = Vincent = 0, right = R generated by D_n.
inline ClassicalDims classical_dims(const OrbitSpace& h) {
  const Space s = h.space();
  return {
      TangentReport::determined_by(s, FunctorKind::internal(), {}, Status::registered_by_theorem,
                                   "internal tangent space of H_n vanishes"),
      TangentReport::determined_by(s, FunctorKind::vincent(), {}, Status::registered_by_theorem,
                                   "Vincent-type space is the image of the internal tangent space, which is 0"),
      TangentReport::determined_by(s, FunctorKind::right(), {kOrbitGenerator}, Status::registered_by_theorem,
                                   "right tangent space of H_n is one-dimensional, spanned by D_n with "
                                   "D_n(f) = ½ ∂²f̃/∂x₁²(0)"),
  };
}

namespace detail {

inline Rational small_rational(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  for (;;) {
    const int a = num(rng);
    if (!nonzero || a != 0) return Rational(a, den(rng));
  }
}

/// Polynomial in t with zero constant term and degree in [1, max_degree].
inline UnivariatePolynomial random_vanishing(std::mt19937_64& rng, unsigned max_degree) {
  std::vector<Rational> c(max_degree + 1);
  for (unsigned k = 1; k <= max_degree; ++k) c[k] = small_rational(rng);
  c[std::uniform_int_distribution<unsigned>(1, max_degree)(rng)] = small_rational(rng, true);
  return UnivariatePolynomial(std::move(c));
}

inline std::vector<Rational> random_vector(std::mt19937_64& rng, unsigned n) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = small_rational(rng);
  return v;
}

/// (x1^2+x2^2-x3^2-x4^2, 2(x1x3+x2x4), 2(x2x3-x1x4)) with squared norm |x|^4
inline std::vector<Polynomial> hopf_map() {
  auto x = [](std::size_t i) { return Polynomial::variable(4, i); };
  const Rational two(2);
  return {x(0) * x(0) + x(1) * x(1) - x(2) * x(2) - x(3) * x(3), two * (x(0) * x(2) + x(1) * x(3)),
          two * (x(1) * x(2) - x(0) * x(3))};
}

}  // namespace detail

/// A valid lift R^m -> R^n with m > n from a seeded family:
///
///  * radial: h(r) v + G(r) w with r = |x|^2, h(0) = G(0) = 0, v, w in Q^n;
///  * for (m, n) = (4, 3), also the Hopf map scaled by c + k(r).
///
/// The result may then be followed by a scaled signed coordinate permutation,
/// or by z -> z^2 on R^2 when n = 2. Deterministic in all four arguments.
inline PolyLift random_valid_lift(unsigned m, unsigned n, unsigned degree, std::uint64_t seed) {
  if (n < 1 || m <= n) throw std::invalid_argument("random_valid_lift needs m > n >= 1");
  if (degree < 2) throw std::invalid_argument("random_valid_lift needs degree >= 2");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), m, n, degree};
  std::mt19937_64 rng(seq);
  std::bernoulli_distribution coin(0.5);

  const Polynomial r = Polynomial::squared_norm(m);
  std::vector<Polynomial> comps(n, Polynomial(m));
  if (m == 4 && n == 3 && coin(rng)) {
    const UnivariatePolynomial k = degree >= 4 ? detail::random_vanishing(rng, (degree - 2) / 2)
                                               : UnivariatePolynomial();
    const Polynomial scale = Polynomial::constant(m, detail::small_rational(rng, true)) + compose(k, r);
    const auto hopf = detail::hopf_map();
    for (unsigned i = 0; i < n; ++i) comps[i] = hopf[i] * scale;
  } else {
    const unsigned half = degree / 2;
    const Polynomial h = compose(detail::random_vanishing(rng, half), r);
    const Polynomial g = compose(detail::random_vanishing(rng, half), r);
    const auto v = detail::random_vector(rng, n);
    const auto w = detail::random_vector(rng, n);
    for (unsigned i = 0; i < n; ++i) comps[i] = v[i] * h + w[i] * g;
  }
  PolyLift f = PolyLift::make(m, std::move(comps));

  if (coin(rng)) {
    if (n == 2 && f.degree() > 0 && 2 * f.degree() <= static_cast<int>(degree)) {
      const Polynomial y1 = Polynomial::variable(2, 0);
      const Polynomial y2 = Polynomial::variable(2, 1);
      f = compose(PolyLift::make(2, {y1 * y1 - y2 * y2, Rational(2) * y1 * y2}), f);
    } else {
      std::vector<unsigned> perm(n);
      for (unsigned i = 0; i < n; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      const Rational s = detail::small_rational(rng, true);
      std::vector<Polynomial> c(n, Polynomial(n));
      for (unsigned i = 0; i < n; ++i) {
        c[i] = (coin(rng) ? s : Rational(-s)) * Polynomial::variable(n, perm[i]);
      }
      f = compose(PolyLift::make(n, std::move(c)), f);
    }
  }
  if (std::holds_alternative<InvalidLift>(validate_lift(f, std::max(degree, kDefaultDegreeBound)))) {
    throw std::logic_error("random_valid_lift produced an invalid lift");
  }
  return f;
}

}  // namespace tangentlab
