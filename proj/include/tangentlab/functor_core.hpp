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

/// @file functor_core.hpp
/// @brief The five tangent constructions over the catalog of based spaces.
///
/// The (Y,y)-internal space of X is the internal space modulo vectors that every
/// T(f), f: X -> Y, identifies, and the (Y,y)-right space of X is the span of
/// all pushforwards T(f)D, f: Y -> X. Hence
///
///  * y-internal vanishes when internal(X) = 0 or internal(Y) = 0;
///  * y-right vanishes when right(X) = 0 or right(Y) = 0;
///  * with Y = R^1 both recover the Vincent-type space.
///
/// Remaining cells come from the torus and orbit-space modules or from the
/// manifold agreement result. A hom-set that none of these classifies gives an
/// undetermined report.

#include "tangentlab/orbit_space.hpp"
#include "tangentlab/polynomial.hpp"
#include "tangentlab/report.hpp"
#include "tangentlab/torus.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tangentlab {

/// Slopes searched by distinguish, in search order.
inline const std::vector<std::string>& default_slope_pool() {
  static const std::vector<std::string> pool = {"sqrt(2)", "1+sqrt(2)", "(1+sqrt(5))/2", "sqrt(5)",
                                                "sqrt(3)", "2+sqrt(3)", "sqrt(7)"};
  return pool;
}

inline std::vector<std::string> euclidean_generators(unsigned k) {
  std::vector<std::string> out;
  for (unsigned i = 1; i <= k; ++i) out.push_back("∂/∂x" + std::to_string(i));
  return out;
}

/// Internal, Vincent and right reports of one catalog space.
inline ClassicalDims classical_dims(const Space& s) {
  if (const auto* e = s.as_euclidean()) {
    auto make = [&](FunctorKind kind) {
      return TangentReport::determined_by(s, kind, euclidean_generators(e->k), Status::registered_by_theorem,
                                          "R^k is a manifold; every construction restricts to the classical "
                                          "tangent space");
    };
    return {make(FunctorKind::internal()), make(FunctorKind::vincent()), make(FunctorKind::right())};
  }
  if (const auto* t = s.as_torus()) return classical_dims(IrrationalTorus(t->slope));
  return classical_dims(OrbitSpace(s.as_orbit()->n));
}

namespace detail {

inline unsigned classical_dim(const Space& s, FunctorFamily f) {
  const ClassicalDims d = classical_dims(s);
  const TangentReport& r = f == FunctorFamily::internal ? d.internal : f == FunctorFamily::right ? d.right : d.vincent;
  return *r.dimension;
}

inline TangentReport zero(const Space& s, const FunctorKind& k, std::string why) {
  return TangentReport::determined_by(s, k, {}, Status::computed, std::move(why));
}

inline TangentReport y_internal(const Space& x, const Space& y) {
  const FunctorKind kind = FunctorKind::y_internal(y);
  if (classical_dim(x, FunctorFamily::internal) == 0) {
    return zero(x, kind, "quotient of the internal tangent space of " + to_string(x) + ", which is 0");
  }
  if (classical_dim(y, FunctorFamily::internal) == 0) {
    return zero(x, kind, "internal tangent space of the test space " + to_string(y) +
                             " is 0, so every T(f) vanishes and all vectors are identified");
  }
  if (const auto* e = x.as_euclidean()) {
    return TangentReport::determined_by(x, kind, euclidean_generators(e->k), Status::registered_by_theorem,
                                        "test space has a nonzero internal tangent vector, so the construction "
                                        "agrees with the classical tangent space on manifolds");
  }
  const IrrationalTorus source(x.as_torus()->slope);
  if (const auto* t = y.as_torus()) return y_internal_dim(source, IrrationalTorus(t->slope));
  return zero(x, kind, "every smooth map T_α -> R^k is constant, so every T(f) vanishes");
}

inline TangentReport y_right(const Space& x, const Space& y) {
  const FunctorKind kind = FunctorKind::y_right(y);
  if (classical_dim(x, FunctorFamily::right) == 0) {
    return zero(x, kind, "subspace of the right tangent space of " + to_string(x) + ", which is 0");
  }
  if (classical_dim(y, FunctorFamily::right) == 0) {
    return zero(x, kind, "right tangent space of the test space " + to_string(y) + " is 0, so every T(f)D = 0");
  }
  if (const auto* e = x.as_euclidean()) {
    return TangentReport::determined_by(x, kind, euclidean_generators(e->k), Status::registered_by_theorem,
                                        "test space has a nonzero right tangent vector, so the construction "
                                        "agrees with the classical tangent space on manifolds");
  }
  const unsigned n = x.as_orbit()->n;
  if (const auto* h = y.as_orbit()) return y_right_dim(h->n, n);
  const unsigned j = y.as_euclidean()->k;
  if (j == 1) {
    return TangentReport::determined_by(x, kind, {}, Status::registered_by_theorem,
                                        "with test space R the construction is the Vincent-type space of H_n, "
                                        "which is 0");
  }
  return TangentReport::undetermined(x, kind,
                                     "germs (R^" + std::to_string(j) + ", 0) -> (H_n, 0) are not classified by "
                                     "the underlying results");
}

}  // namespace detail

inline TangentReport tangent(const Space& space, const FunctorKind& functor) {
  if (needs_test_space(functor.family) != functor.test.has_value()) {
    throw std::invalid_argument("functor " + to_string(functor) + " has the wrong test-space arity");
  }
  switch (functor.family) {
    case FunctorFamily::internal: return classical_dims(space).internal;
    case FunctorFamily::vincent: return classical_dims(space).vincent;
    case FunctorFamily::right: return classical_dims(space).right;
    case FunctorFamily::y_internal: return detail::y_internal(space, *functor.test);
    case FunctorFamily::y_right: return detail::y_right(space, *functor.test);
  }
  throw std::logic_error("unknown functor family");
}

/// The functor's test space lacks the tangent vector the agreement result needs.
class HypothesisNotMet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct AxiomCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AxiomReport {
  FunctorKind functor;
  std::vector<AxiomCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
};

/// Smooth maps between Euclidean catalog spaces used by the functoriality checks.
struct RegisteredMap {
  std::string name;
  unsigned source;
  std::vector<Polynomial> components;  // one per target coordinate
};

inline std::vector<RegisteredMap> registered_maps() {
  auto P = [](const char* text, unsigned vars) { return parse_polynomial(text, vars); };
  return {
      {"A: R^1 -> R^2", 1, {P("x1", 1), P("-2*x1", 1)}},
      {"B: R^2 -> R^3", 2, {P("x1+x2", 2), P("3*x2", 2), P("x1-x2+x1*x2", 2)}},
      {"C: R^3 -> R^2", 3, {P("2*x1-x3", 3), P("x2+x3^2", 3)}},
      {"D: R^2 -> R^2", 2, {P("x2", 2), P("-x1", 2)}},
      {"E: R^3 -> R^0", 3, {}},
      {"Z: R^0 -> R^2", 0, {Polynomial(0), Polynomial(0)}},
  };
}

namespace detail {

using Matrix = std::vector<std::vector<Rational>>;

/// Tangent map at 0 via curves: push t e_i through F and differentiate at t = 0.
inline Matrix curve_model(const RegisteredMap& f) {
  const std::size_t target = f.components.size();
  Matrix m(target, std::vector<Rational>(f.source));
  for (unsigned i = 0; i < f.source; ++i) {
    std::vector<Polynomial> curve(f.source, Polynomial(1));
    curve[i] = Polynomial::variable(1, 0);
    for (std::size_t r = 0; r < target; ++r) {
      m[r][i] = f.components[r].substitute(curve).derivative(0).constant_term();
    }
  }
  return m;
}

/// Tangent map at 0 via derivations: (T(F) d/dx_i)(y_r) = d/dx_i (y_r o F)(0).
inline Matrix derivation_model(const RegisteredMap& f) {
  const std::size_t target = f.components.size();
  Matrix m(target, std::vector<Rational>(f.source));
  for (std::size_t r = 0; r < target; ++r) {
    std::vector<Polynomial> ids;
    for (std::size_t s = 0; s < target; ++s) ids.push_back(Polynomial::variable(target, s));
    const Polynomial pulled = ids[r].substitute(f.components);
    for (unsigned i = 0; i < f.source; ++i) m[r][i] = pulled.derivative(i).constant_term();
  }
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b, std::size_t inner, std::size_t cols) {
  Matrix out(a.size(), std::vector<Rational>(cols));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t k = 0; k < inner; ++k) out[r][c] += a[r][k] * b[k][c];
  return out;
}

inline RegisteredMap compose(const RegisteredMap& second, const RegisteredMap& first) {
  RegisteredMap out{second.name + " o " + first.name, first.source, {}};
  for (const auto& c : second.components) {
    out.components.push_back(c.variables() == 0 ? Polynomial::constant(first.source, c.constant_term())
                                                : c.substitute(first.components));
  }
  return out;
}

inline RegisteredMap identity_map(unsigned k) {
  RegisteredMap out{"id_R^" + std::to_string(k), k, {}};
  for (unsigned i = 0; i < k; ++i) out.components.push_back(Polynomial::variable(k, i));
  return out;
}

}  // namespace detail

/// Checks the tangent-functor axioms on R^0 .. R^3: the functor gives dimension
/// k on R^k, and its tangent maps on registered maps preserve identities and
/// composition. Tangent maps are computed from curves for the internal
/// families and from derivations for the right families.
///
/// Throws HypothesisNotMet when a test space lacks the relevant tangent vector.
inline AxiomReport functor_axiom_check(const FunctorKind& functor) {
  if (functor.test) {
    const FunctorFamily needed =
        functor.family == FunctorFamily::y_internal ? FunctorFamily::internal : FunctorFamily::right;
    if (detail::classical_dim(*functor.test, needed) == 0) {
      throw HypothesisNotMet(family_name(needed) + " tangent space of the test space " + to_string(*functor.test) +
                             " is 0; the agreement with the classical functor does not apply");
    }
  }
  AxiomReport out{functor, {}};
  for (unsigned k = 0; k <= 3; ++k) {
    const TangentReport r = tangent(Space::euclidean(k), functor);
    const bool ok = r.dimension && *r.dimension == k;
    out.checks.push_back({"dim on R^" + std::to_string(k), ok, "dimension " + dimension_text(r)});
  }

  const bool right_type = functor.family == FunctorFamily::right || functor.family == FunctorFamily::y_right;
  auto model = [right_type](const RegisteredMap& f) {
    return right_type ? detail::derivation_model(f) : detail::curve_model(f);
  };
  for (unsigned k = 0; k <= 3; ++k) {
    const auto id = model(detail::identity_map(k));
    bool ok = true;
    for (unsigned r = 0; r < k; ++r)
      for (unsigned c = 0; c < k; ++c) ok = ok && id[r][c] == Rational(r == c ? 1 : 0);
    out.checks.push_back({"T(id) on R^" + std::to_string(k), ok, ok ? "identity" : "not the identity"});
  }
  const auto maps = registered_maps();
  for (const auto& first : maps) {
    for (const auto& second : maps) {
      if (second.source != first.components.size()) continue;
      const auto both = detail::compose(second, first);
      const auto lhs = model(both);
      const auto rhs = detail::multiply(model(second), model(first), second.source, first.source);
      out.checks.push_back({"T(" + second.name + " o " + first.name + ")", lhs == rhs,
                            lhs == rhs ? "T(g o f) = T(g) T(f)" : "composition not preserved"});
    }
  }
  return out;
}

/// The catalog in the order distinguish searches it: R^0..R^3, tori over the
/// pool, then H_1..H_4.
inline std::vector<Space> catalog(const std::vector<std::string>& slope_pool = default_slope_pool()) {
  std::vector<Space> out;
  for (unsigned k = 0; k <= 3; ++k) out.push_back(Space::euclidean(k));
  for (const auto& s : slope_pool) out.push_back(Space::torus(parse_slope(s)));
  for (unsigned n = 1; n <= 4; ++n) out.push_back(Space::orbit(n));
  return out;
}

/// First catalog space on which both functors are determined with different
/// dimensions, or none.
inline std::optional<Space> distinguish(const FunctorKind& f1, const FunctorKind& f2,
                                        const std::vector<std::string>& slope_pool = default_slope_pool()) {
  for (const Space& s : catalog(slope_pool)) {
    const TangentReport a = tangent(s, f1);
    const TangentReport b = tangent(s, f2);
    if (a.dimension && b.dimension && *a.dimension != *b.dimension) return s;
  }
  return std::nullopt;
}

}  // namespace tangentlab
