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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "tangentlab/cli.hpp"
#include "tangentlab/tangentlab.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace tangentlab;
using tangentlab::testing::parse_all;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Json cli_json(std::vector<std::string> args) {
  args.push_back("--json");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (code != 0) throw std::runtime_error("cli exited " + std::to_string(code) + ": " + err.str());
  return Json::parse(out.str());
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

Outcome orbit_matrix() {
  Outcome o;
  const Json arr = cli_json({"table", "orbit", "--max", "4"});
  o.require(arr.size() == 16, "expected 16 cells");
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned n = 1; n <= 4; ++n) {
      const Json& cell = arr[(m - 1) * 4 + (n - 1)];
      o.require(cell["test"] == "orbit:" + std::to_string(m) && cell["space"] == "orbit:" + std::to_string(n),
                "cell order");
      o.require(cell["dimension"] == (m <= n ? 1 : 0), "dim at (m, n) = (" + std::to_string(m) + ", " +
                                                           std::to_string(n) + ")");
    }
  return o;
}

Outcome torus_indicator() {
  Outcome o;
  const auto& pool = tangentlab::testing::slope_pool_text();
  // field blocks, fixed by hand
  const int block[] = {0, 0, 1, 1, 2, 2, 3};
  const Json arr = cli_json({"table", "torus", "--slopes", join(pool, ",")});
  o.require(arr.size() == pool.size() * pool.size(), "cell count");
  for (std::size_t b = 0; b < pool.size(); ++b)
    for (std::size_t a = 0; a < pool.size(); ++a) {
      const int expected = block[a] == block[b] ? 1 : 0;
      o.require(arr[b * pool.size() + a]["dimension"] == expected, "cell " + pool[a] + " / " + pool[b]);
    }
  return o;
}

Outcome classical_table() {
  Outcome o;
  const Json arr = cli_json({"table", "classical"});
  std::vector<std::vector<int>> expected;
  for (int k = 0; k <= 3; ++k) expected.push_back({k, k, k});
  expected.push_back({1, 0, 0});
  for (int n = 1; n <= 4; ++n) expected.push_back({0, 0, 1});
  o.require(arr.size() == expected.size() * 3, "cell count");
  for (std::size_t r = 0; r < expected.size(); ++r)
    for (std::size_t c = 0; c < 3; ++c) o.require(arr[r * 3 + c]["dimension"] == expected[r][c], "row " + std::to_string(r));
  return o;
}

Outcome witness_soundness() {
  Outcome o;
  const auto pool = parse_all(tangentlab::testing::equivalence_pool_text());
  std::size_t checked = 0;
  for (const auto& x : pool)
    for (const auto& y : pool) {
      if (const auto w = mobius_witness(x, y)) {
        o.require(witnesses(*w, x, y), "mobius witness for " + to_string(x) + ", " + to_string(y));
        ++checked;
      }
      if (const auto g = gl2z_equivalent(x, y)) {
        o.require(abs_of(g->det()) == 1, "gl2z det");
        o.require(witnesses(*g, x, y), "gl2z witness for " + to_string(x) + ", " + to_string(y));
        ++checked;
      }
      const TangentReport r = tangent(Space::torus(x), FunctorKind::y_internal(Space::torus(y)));
      if (const auto* w = std::get_if<MobiusWitness>(&r.witness)) {
        o.require(witnesses(*w, x, y), "report witness");
        ++checked;
      }
    }
  o.detail = o.ok ? std::to_string(checked) + " witnesses verified" : o.detail;
  return o;
}

Outcome gl2z_oracle() {
  Outcome o;
  const auto pool = parse_all(tangentlab::testing::equivalence_pool_text());
  const auto box = tangentlab::testing::unimodular_box(5);
  std::size_t equivalent = 0;
  for (const auto& x : pool)
    for (const auto& y : pool) {
      const bool fast = gl2z_equivalent(x, y).has_value();
      equivalent += fast;
      o.require(fast == tangentlab::testing::brute_force_equivalent(x, y, box),
                "disagreement on " + to_string(x) + ", " + to_string(y));
    }
  o.detail = o.ok ? std::to_string(pool.size() * pool.size()) + " pairs, " + std::to_string(equivalent) + " equivalent"
                  : o.detail;
  return o;
}

Outcome rank_obstruction_property() {
  Outcome o;
  for (unsigned m = 2; m <= 4; ++m)
    for (unsigned n = 1; n < m; ++n)
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const PolyLift f = random_valid_lift(m, n, 2 + seed % 5, seed);
        o.require(pushforward(f, Derivation{}).coeff == 0, "pushforward of " + to_string(f));
        o.require(rank_obstruction(f).scalar == Rational(0), "gram scalar of " + to_string(f));
      }
  o.detail = o.ok ? "1200 lifts" : o.detail;
  return o;
}

Outcome dn_oracle() {
  Outcome o;
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<unsigned> dim(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto psi = tangentlab::testing::random_psi(rng, 6);
    const unsigned n = dim(rng);
    const Rational lib = derivation_value(Derivation{}, InvariantGerm{UnivariatePolynomial(psi)});
    o.require(lib == tangentlab::testing::dn_oracle(psi, n), "trial " + std::to_string(trial));
  }
  return o;
}

Outcome axiom_suite() {
  Outcome o;
  std::vector<FunctorKind> kinds = {FunctorKind::internal(), FunctorKind::right(), FunctorKind::vincent(),
                                    FunctorKind::y_internal(Space::torus(tangentlab::testing::qi("sqrt(2)")))};
  for (unsigned n = 1; n <= 3; ++n) kinds.push_back(FunctorKind::y_right(Space::orbit(n)));
  for (const auto& k : kinds) o.require(functor_axiom_check(k).passed(), to_string(k));
  bool raised = false;
  try {
    functor_axiom_check(FunctorKind::y_right(Space::torus(tangentlab::testing::qi("sqrt(2)"))));
  } catch (const HypothesisNotMet&) {
    raised = true;
  }
  o.require(raised, "hypothesis-not-met for y-right[torus:sqrt(2)]");
  return o;
}

Outcome pairwise_distinction() {
  Outcome o;
  const auto pool = parse_all(tangentlab::testing::slope_pool_text());
  for (const auto& a : pool)
    for (const auto& b : pool) {
      if (a.d() == b.d()) continue;
      const auto sep = distinguish(FunctorKind::y_internal(Space::torus(a)), FunctorKind::y_internal(Space::torus(b)));
      o.require(sep.has_value(), to_string(a) + " vs " + to_string(b));
    }
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned k = 1; k <= 4; ++k) {
      if (m == k) continue;
      const auto sep = distinguish(FunctorKind::y_right(Space::orbit(m)), FunctorKind::y_right(Space::orbit(k)));
      o.require(sep.has_value(), "H_" + std::to_string(m) + " vs H_" + std::to_string(k));
    }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "orbit matrix [m <= n] for m, n <= 4", 1.0, orbit_matrix},
      {2, "torus y-internal matrix equals same-field indicator", 1.0, torus_indicator},
      {3, "classical dimension table", 0.0, classical_table},
      {4, "witness soundness over pool pairs", 0.0, witness_soundness},
      {5, "GL2(Z) answers match brute force on [-5, 5]", 30.0, gl2z_oracle},
      {6, "rank obstruction on 200 seeds per (m, n)", 10.0, rank_obstruction_property},
      {7, "D_n equals psi'(0) against symbolic oracle", 0.0, dn_oracle},
      {8, "functor-axiom suite and hypothesis check", 0.0, axiom_suite},
      {9, "pairwise distinction of tori and orbit tests", 0.0, pairwise_distinction},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o = {false, "exceeded " + std::to_string(c.limit_seconds) + " s"};
    }
    failures += !o.ok;
    std::printf("%s %d %-52s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
