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

/// @file report.hpp
/// @brief Catalog spaces, functor kinds and tangent-space reports.
///
/// Every catalog space is based at the origin (the class of 0 for quotients).
/// A report states a dimension with one label per generator, the evidence that
/// produced it, and whether it was computed here, taken from a registered
/// result, or is outside what the underlying results determine.

#include "tangentlab/mobius.hpp"
#include "tangentlab/parser.hpp"
#include "tangentlab/quadratic.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tangentlab {

class Space {
 public:
  struct Euclidean {
    unsigned k;
    friend bool operator==(const Euclidean&, const Euclidean&) = default;
  };
  struct Torus {
    QuadraticIrrational slope;
    friend bool operator==(const Torus&, const Torus&) = default;
  };
  struct Orbit {
    unsigned n;
    friend bool operator==(const Orbit&, const Orbit&) = default;
  };
  using Variant = std::variant<Euclidean, Torus, Orbit>;

  static Space euclidean(unsigned k) { return Space(Euclidean{k}); }
  static Space torus(QuadraticIrrational slope) { return Space(Torus{std::move(slope)}); }
  static Space orbit(unsigned n) {
    if (n < 1) throw std::invalid_argument("orbit space H_n needs n >= 1");
    return Space(Orbit{n});
  }

  const Variant& variant() const { return v_; }
  const Euclidean* as_euclidean() const { return std::get_if<Euclidean>(&v_); }
  const Torus* as_torus() const { return std::get_if<Torus>(&v_); }
  const Orbit* as_orbit() const { return std::get_if<Orbit>(&v_); }

  friend bool operator==(const Space&, const Space&) = default;

 private:
  explicit Space(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// "R^3", "torus:sqrt(2)", "orbit:2"; the same grammar parse_space reads.
inline std::string to_string(const Space& s) {
  if (const auto* e = s.as_euclidean()) return "R^" + std::to_string(e->k);
  if (const auto* t = s.as_torus()) return "torus:" + to_string(t->slope);
  return "orbit:" + std::to_string(s.as_orbit()->n);
}

class SpaceSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline unsigned parse_count(std::string_view text, std::string_view what) {
  if (text.empty() || text.size() > 6) throw SpaceSpecError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  unsigned v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw SpaceSpecError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  return v;
}

}  // namespace detail

/// Irrational slope from a surd expression; rational values are rejected.
inline QuadraticIrrational parse_slope(std::string_view text) {
  const QuadraticValue v = parse_quadratic(text);
  if (!is_irrational(v)) throw SpaceSpecError("torus slope must be irrational (got " + to_string(v) + ")");
  return std::get<QuadraticIrrational>(v);
}

/// Reads "R^k" | "torus:<expr>" | "orbit:<n>". Throws SpaceSpecError or ParseError.
inline Space parse_space(std::string_view text) {
  if (text.starts_with("R^")) return Space::euclidean(detail::parse_count(text.substr(2), "dimension"));
  if (text.starts_with("torus:")) return Space::torus(parse_slope(text.substr(6)));
  if (text.starts_with("orbit:")) {
    const unsigned n = detail::parse_count(text.substr(6), "orbit index");
    if (n < 1) throw SpaceSpecError("orbit space H_n needs n >= 1");
    return Space::orbit(n);
  }
  throw SpaceSpecError("unknown space '" + std::string(text) + "' (expected R^k, torus:<expr> or orbit:<n>)");
}

enum class FunctorFamily { internal, right, vincent, y_internal, y_right };

struct FunctorKind {
  FunctorFamily family = FunctorFamily::internal;
  std::optional<Space> test;  // set exactly for the two test-space families

  static FunctorKind internal() { return {FunctorFamily::internal, std::nullopt}; }
  static FunctorKind right() { return {FunctorFamily::right, std::nullopt}; }
  static FunctorKind vincent() { return {FunctorFamily::vincent, std::nullopt}; }
  static FunctorKind y_internal(Space test) { return {FunctorFamily::y_internal, std::move(test)}; }
  static FunctorKind y_right(Space test) { return {FunctorFamily::y_right, std::move(test)}; }

  friend bool operator==(const FunctorKind&, const FunctorKind&) = default;
};

/// "internal", "right", "vincent", "y-internal", "y-right"
inline std::string family_name(FunctorFamily f) {
  switch (f) {
    case FunctorFamily::internal: return "internal";
    case FunctorFamily::right: return "right";
    case FunctorFamily::vincent: return "vincent";
    case FunctorFamily::y_internal: return "y-internal";
    case FunctorFamily::y_right: return "y-right";
  }
  return "?";
}

inline std::optional<FunctorFamily> parse_family(std::string_view name) {
  for (auto f : {FunctorFamily::internal, FunctorFamily::right, FunctorFamily::vincent, FunctorFamily::y_internal,
                 FunctorFamily::y_right}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

inline bool needs_test_space(FunctorFamily f) {
  return f == FunctorFamily::y_internal || f == FunctorFamily::y_right;
}

/// "y-internal[torus:sqrt(2)]"
inline std::string to_string(const FunctorKind& k) {
  std::string out = family_name(k.family);
  if (k.test) out += "[" + to_string(*k.test) + "]";
  return out;
}

enum class Status { computed, registered_by_theorem, undetermined_by_paper };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::computed: return "computed";
    case Status::registered_by_theorem: return "registered-by-theorem";
    case Status::undetermined_by_paper: return "undetermined-by-paper";
  }
  return "?";
}

/// Polynomial lift R^m -> R^n of a map of orbit spaces, in printable form.
struct LiftWitness {
  unsigned m = 0;
  unsigned n = 0;
  std::vector<std::string> components;
  Rational pushforward{0};  // coefficient of T^R(f) D_m against D_n

  friend bool operator==(const LiftWitness&, const LiftWitness&) = default;
};

using Witness = std::variant<std::monostate, MobiusWitness, LiftWitness>;

struct TangentReport {
  Space space;
  FunctorKind functor;
  std::optional<unsigned> dimension;  // nullopt: undetermined
  std::vector<std::string> generators;
  Witness witness;
  Status status = Status::computed;
  std::string justification;

  bool determined() const { return dimension.has_value(); }

  static TangentReport determined_by(Space space, FunctorKind functor, std::vector<std::string> generators,
                                     Status status, std::string justification, Witness witness = {}) {
    if (status == Status::undetermined_by_paper) throw std::logic_error("determined report with undetermined status");
    const auto dim = static_cast<unsigned>(generators.size());
    return {std::move(space), std::move(functor), dim, std::move(generators), std::move(witness), status,
            std::move(justification)};
  }

  static TangentReport undetermined(Space space, FunctorKind functor, std::string justification) {
    return {std::move(space), std::move(functor), std::nullopt, {}, {}, Status::undetermined_by_paper,
            std::move(justification)};
  }
};

/// The three classical constructions at the basepoint of one space.
struct ClassicalDims {
  TangentReport internal;
  TangentReport vincent;
  TangentReport right;
};

inline std::string dimension_text(const TangentReport& r) {
  return r.dimension ? std::to_string(*r.dimension) : "undetermined";
}

}  // namespace tangentlab
