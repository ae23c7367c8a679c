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

// Shared generators and pools for the unit and acceptance suites.

#include "tangentlab/quad_field.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace tangentlab::testing {

inline QuadraticIrrational qi(const std::string& text) {
  return std::get<QuadraticIrrational>(parse_quadratic(text));
}

/// Slope pool; blocks by field: {sqrt2, 1+sqrt2}, {phi, sqrt5}, {sqrt3, 2+sqrt3}, {sqrt7}.
inline const std::vector<std::string>& slope_pool_text() {
  static const std::vector<std::string> pool = {"sqrt(2)", "1+sqrt(2)", "(1+sqrt(5))/2", "sqrt(5)",
                                                "sqrt(3)", "2+sqrt(3)", "sqrt(7)"};
  return pool;
}

/// Wider pool for GL2(Z) checks: includes same-field pairs that are not
/// GL2(Z)-equivalent (sqrt2 vs 2 sqrt2, phi vs sqrt5).
inline const std::vector<std::string>& equivalence_pool_text() {
  static const std::vector<std::string> pool = {
      "sqrt(2)", "1+sqrt(2)", "sqrt(2)-1", "2*sqrt(2)", "(1+sqrt(5))/2", "sqrt(5)",
      "sqrt(3)", "2+sqrt(3)", "(1+sqrt(3))/2", "sqrt(7)", "3+sqrt(7)", "-sqrt(3)"};
  return pool;
}

inline std::vector<QuadraticIrrational> parse_all(const std::vector<std::string>& texts) {
  std::vector<QuadraticIrrational> out;
  for (const auto& t : texts) out.push_back(qi(t));
  return out;
}

/// p + q sqrt(d) with small random rational p, q (q != 0) and d from a fixed
/// list of square-free radicands.
inline QuadraticIrrational random_quadratic(std::mt19937_64& rng) {
  static const int radicands[] = {2, 3, 5, 6, 7, 10, 11, 13};
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> pick(0, 7);
  int qn = 0;
  while (qn == 0) qn = num(rng);
  return QuadraticIrrational::make(Rational(num(rng), den(rng)), Rational(qn, den(rng)), radicands[pick(rng)]);
}

/// Every integer matrix with entries in [-bound, bound] and det = +-1.
inline std::vector<MobiusWitness> unimodular_box(int bound) {
  std::vector<MobiusWitness> out;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d) {
          const int det = a * d - b * c;
          if (det == 1 || det == -1) out.push_back({a, b, c, d});
        }
  return out;
}

/// Brute-force GL2(Z) oracle: does some box matrix send y to x?
inline bool brute_force_equivalent(const QuadraticIrrational& x, const QuadraticIrrational& y,
                                   const std::vector<MobiusWitness>& box) {
  for (const auto& w : box) {
    if (witnesses(w, x, y)) return true;
  }
  return false;
}

/// Independent D_n oracle: expands psi(x1^2 + ... + xn^2) term by term with
/// its own sparse arithmetic, differentiates twice in x1 and halves the value
/// at the origin.
inline Rational dn_oracle(const std::vector<Rational>& psi, unsigned n) {
  using Poly = std::map<std::vector<unsigned>, Rational>;
  auto mul = [n](const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        std::vector<unsigned> e(n);
        for (unsigned i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
        out[e] += ca * cb;
      }
    return out;
  };
  Poly norm;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<unsigned> e(n, 0);
    e[i] = 2;
    norm[e] = 1;
  }
  Poly total;
  Poly power{{std::vector<unsigned>(n, 0), Rational(1)}};
  for (const auto& c : psi) {
    for (const auto& [e, v] : power) total[e] += c * v;
    power = mul(power, norm);
  }
  auto d1 = [](const Poly& p) {
    Poly out;
    for (const auto& [e, c] : p) {
      if (e[0] == 0) continue;
      auto f = e;
      --f[0];
      out[f] += c * Rational(e[0]);
    }
    return out;
  };
  const Poly second = d1(d1(total));
  const auto it = second.find(std::vector<unsigned>(n, 0));
  return it == second.end() ? Rational(0) : it->second / 2;
}

inline std::vector<Rational> random_psi(std::mt19937_64& rng, unsigned max_degree) {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 5);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return c;
}

}  // namespace tangentlab::testing
