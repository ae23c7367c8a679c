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

/// @file torus.hpp
/// @brief Irrational tori T_a = R / (Z + aZ) with quadratic-irrational slopes.
///
/// Smooth maps T_a -> T_b are induced by affine maps F(t) = l t + m of R with
/// F(Z + aZ) contained in Z + bZ (up to the offset), i.e. l and l a both lie in
/// Z + bZ. Writing l = c + d b and l a = a' + b' b recovers the relation
/// a = (a' + b' b) / (c + d b), so a nonconstant map exists exactly when the
/// slopes are integer-Moebius related. The tangent map sends the generator
/// [pi_a, d/dt] to l [pi_b, d/dt].
///
/// All spaces are based at the class of 0; maps are composed with translations
/// of the target to preserve basepoints, which does not change their lift slope.

#include "tangentlab/mobius.hpp"
#include "tangentlab/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace tangentlab {

inline constexpr const char* kTorusGenerator = "[π_α, ∂/∂t]";

class IrrationalTorus {
 public:
  explicit IrrationalTorus(QuadraticIrrational slope) : slope_(std::move(slope)) {}

  /// Throws SpaceSpecError for rational slopes.
  static IrrationalTorus from_value(const QuadraticValue& v) {
    if (!is_irrational(v)) throw SpaceSpecError("torus slope must be irrational (got " + to_string(v) + ")");
    return IrrationalTorus(std::get<QuadraticIrrational>(v));
  }

  const QuadraticIrrational& slope() const { return slope_; }
  Space space() const { return Space::torus(slope_); }

  friend bool operator==(const IrrationalTorus&, const IrrationalTorus&) = default;

 private:
  QuadraticIrrational slope_;
};

/// Is v an element of the lattice Z + bZ?
inline bool in_lattice(const FieldElement& v, const QuadraticIrrational& b) {
  if (v.is_rational()) return is_integral(v.p);
  if (v.d != b.d()) return false;
  const Rational coeff_b = v.q / b.q();
  const Rational coeff_1 = v.p - coeff_b * b.p();
  return is_integral(coeff_b) && is_integral(coeff_1);
}

/// Linear part l of a lift F(t) = l t (+ offset) of a map source -> target.
struct AffineLift {
  IrrationalTorus source;
  IrrationalTorus target;
  FieldElement slope;

  /// F descends to a smooth map: l and l * source slope lie in Z + (target slope) Z.
  bool descends() const {
    return in_lattice(slope, target.slope()) && in_lattice(slope * source.slope().element(), target.slope());
  }

  bool constant() const { return slope == FieldElement(); }
};

/// Lift of the map encoded by a witness source = (a + b t)/(c + d t), t the target slope: l = c + d t.
inline AffineLift lift_from_witness(const IrrationalTorus& source, const IrrationalTorus& target,
                                    const MobiusWitness& w) {
  return {source, target, FieldElement(Rational(w.c)) + FieldElement(Rational(w.d)) * target.slope().element()};
}

/// second o first; lift slopes multiply.
inline AffineLift compose(const AffineLift& second, const AffineLift& first) {
  if (!(first.target == second.source)) throw std::invalid_argument("lifts are not composable");
  return {first.source, second.target, second.slope * first.slope};
}

struct TorusHomReport {
  bool nonconstant_exists = false;
  std::optional<MobiusWitness> witness;
  std::optional<Rational> basis_action;  // T(f)[pi_a, d/dt] = basis_action [pi_b, d/dt]
};

/// Nonconstant maps source -> target. The affine witness (a, b, c, 0) gives the
/// integer lift F(t) = c t, so the generator is scaled by c.
inline TorusHomReport hom_nonconstant(const IrrationalTorus& source, const IrrationalTorus& target) {
  TorusHomReport out;
  out.witness = mobius_witness(source.slope(), target.slope());
  if (!out.witness) return out;
  const AffineLift lift = lift_from_witness(source, target, *out.witness);
  if (!lift.descends() || !lift.slope.is_rational() || lift.constant()) {
    throw std::logic_error("affine witness did not produce a descending nonconstant lift");
  }
  out.nonconstant_exists = true;
  out.basis_action = lift.slope.p;
  return out;
}

/// Dimension of the (T_test, 0)-internal tangent space of T_space: 1 when a
/// nonconstant map T_space -> T_test exists, else 0 (every germ is a constant
/// global map because the D-topology of T_space is indiscrete).
inline TangentReport y_internal_dim(const IrrationalTorus& space, const IrrationalTorus& test) {
  const auto kind = FunctorKind::y_internal(test.space());
  const TorusHomReport hom = hom_nonconstant(space, test);
  if (hom.nonconstant_exists) {
    return TangentReport::determined_by(
        space.space(), kind, {kTorusGenerator}, Status::computed,
        "nonconstant map with affine lift F(t) = " + to_string(*hom.basis_action) +
            "t sends [π_α, ∂/∂t] to a nonzero multiple of [π_β, ∂/∂t]; witness α = (a+bβ)/(c+dβ)",
        *hom.witness);
  }
  return TangentReport::determined_by(space.space(), kind, {}, Status::computed,
                                      "all germs constant; D-topology indiscrete (slopes lie in different "
                                      "quadratic fields, so no integer Möbius relation exists)");
}

/// internal = R generated by [pi_a, d/dt]; Vincent and right vanish.
inline ClassicalDims classical_dims(const IrrationalTorus& t) {
  const Space s = t.space();
  return {
      TangentReport::determined_by(s, FunctorKind::internal(), {kTorusGenerator}, Status::registered_by_theorem,
                                   "internal tangent space of T_α is R, generated by [π_α, ∂/∂t]"),
      TangentReport::determined_by(s, FunctorKind::vincent(), {}, Status::registered_by_theorem,
                                   "Vincent-type space is a subspace of the right tangent space, which is 0"),
      TangentReport::determined_by(s, FunctorKind::right(), {}, Status::registered_by_theorem,
                                   "right tangent space of T_α vanishes (smooth functions are constant)"),
  };
}

/// Unimodular witness when T_a and T_b are diffeomorphic.
inline std::optional<MobiusWitness> diffeomorphic(const IrrationalTorus& a, const IrrationalTorus& b) {
  return gl2z_equivalent(a.slope(), b.slope());
}

}  // namespace tangentlab
