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

/// @file cli.hpp
/// @brief The tangentlab command line, runnable in-process for testing.
///
///     tangentlab tangent --space <spec> --functor <name> [--test <spec>] [--json]
///     tangentlab table classical [--json]
///     tangentlab table torus --slopes <expr,expr,...> [--json]
///     tangentlab table orbit --max <N> [--json]
///     tangentlab witness mobius|diffeo --alpha <expr> --beta <expr> [--json]
///     tangentlab witness embed --m <int> --n <int> [--json]
///     tangentlab lift --m <int> --f "<p1>; <p2>; ..." [--json]
///
/// Exit codes: 0 determined, 1 no witness, 2 input error, 3 undetermined.

#include "tangentlab/functor_core.hpp"
#include "tangentlab/output.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace tangentlab {

enum ExitCode : int { kExitDetermined = 0, kExitNoWitness = 1, kExitInputError = 2, kExitUndetermined = 3 };

namespace detail {

struct CliContext {
  std::vector<std::string> input;
  std::ostream& out;
  std::ostream& err;
};

inline std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

inline void emit(CliContext& ctx, const Json& j) { ctx.out << j.dump(2) << "\n"; }

inline int cmd_tangent(CliContext& ctx, const std::string& space_text, const std::string& functor_text,
                       const std::string& test_text, bool json) {
  const Space space = parse_space(space_text);
  const auto family = parse_family(functor_text);
  if (!family) {
    throw SpaceSpecError("unknown functor '" + functor_text +
                         "' (expected internal, right, vincent, y-internal or y-right)");
  }
  if (needs_test_space(*family) && test_text.empty()) {
    throw SpaceSpecError("functor " + functor_text + " needs --test");
  }
  if (!needs_test_space(*family) && !test_text.empty()) {
    throw SpaceSpecError("functor " + functor_text + " takes no --test");
  }
  FunctorKind kind{*family, std::nullopt};
  if (!test_text.empty()) kind.test = parse_space(test_text);
  const TangentReport r = tangent(space, kind);
  if (json) {
    emit(ctx, output_record(r, ctx.input));
  } else {
    ctx.out << report_text(r);
  }
  return r.determined() ? kExitDetermined : kExitUndetermined;
}

inline int emit_table(CliContext& ctx, bool json, const std::string& title,
                      const std::vector<std::vector<std::string>>& grid, const std::vector<TangentReport>& cells,
                      const std::vector<std::string>& notes) {
  if (json) {
    Json arr = Json::array();
    for (const auto& r : cells) arr.push_back(output_record(r, ctx.input));
    emit(ctx, arr);
  } else {
    ctx.out << title << "\n" << render_table(grid);
    if (!notes.empty()) {
      ctx.out << "witnesses:\n";
      for (const auto& n : notes) ctx.out << "  " << n << "\n";
    }
  }
  const bool all = std::all_of(cells.begin(), cells.end(), [](const auto& r) { return r.determined(); });
  return all ? kExitDetermined : kExitUndetermined;
}

inline int cmd_table_classical(CliContext& ctx, bool json) {
  std::vector<std::pair<std::string, Space>> rows;
  for (unsigned k = 0; k <= 3; ++k) rows.emplace_back("R^" + std::to_string(k), Space::euclidean(k));
  rows.emplace_back("T_α", Space::torus(parse_slope("sqrt(2)")));
  for (unsigned n = 1; n <= 4; ++n) rows.emplace_back("H_" + std::to_string(n), Space::orbit(n));

  std::vector<std::vector<std::string>> grid = {{"space", "internal", "vincent", "right"}};
  std::vector<TangentReport> cells;
  for (const auto& [label, space] : rows) {
    const ClassicalDims d = classical_dims(space);
    grid.push_back({label, dimension_text(d.internal), dimension_text(d.vincent), dimension_text(d.right)});
    for (const auto* r : {&d.internal, &d.vincent, &d.right}) cells.push_back(*r);
  }
  return emit_table(ctx, json, "classical tangent dimensions (T_α shown for α = sqrt(2))", grid, cells, {});
}

inline int cmd_table_torus(CliContext& ctx, const std::string& list, bool json) {
  std::vector<std::string> texts;
  std::vector<QuadraticIrrational> slopes;
  std::vector<std::string> errors;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = list.find(',', start);
    const std::string text = trim(list.substr(start, end == std::string::npos ? std::string::npos : end - start));
    try {
      slopes.push_back(parse_slope(text));
      texts.push_back(text);
    } catch (const std::exception& e) {
      errors.push_back("slope " + std::to_string(texts.size() + errors.size() + 1) + " ('" + text + "'): " +
                       e.what());
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (!errors.empty()) {
    for (const auto& e : errors) ctx.err << "error: " << e << "\n";
    return kExitInputError;
  }

  std::vector<std::vector<std::string>> grid(1, {"β\\α"});
  for (const auto& s : slopes) grid[0].push_back(to_string(s));
  std::vector<TangentReport> cells;
  std::vector<std::string> notes;
  for (const auto& beta : slopes) {
    grid.push_back({to_string(beta)});
    for (const auto& alpha : slopes) {
      const TangentReport r = tangent(Space::torus(alpha), FunctorKind::y_internal(Space::torus(beta)));
      grid.back().push_back(dimension_text(r));
      if (std::holds_alternative<MobiusWitness>(r.witness)) {
        notes.push_back("α = " + to_string(alpha) + ", β = " + to_string(beta) + ": " + witness_text(r.witness));
      }
      cells.push_back(r);
    }
  }
  return emit_table(ctx, json, "y-internal dimensions of T_α tested against T_β (rows β, columns α)", grid, cells,
                    notes);
}

inline int cmd_table_orbit(CliContext& ctx, unsigned max, bool json) {
  std::vector<std::vector<std::string>> grid(1, {"m\\n"});
  for (unsigned n = 1; n <= max; ++n) grid[0].push_back(std::to_string(n));
  std::vector<TangentReport> cells;
  std::vector<std::string> notes;
  for (unsigned m = 1; m <= max; ++m) {
    grid.push_back({std::to_string(m)});
    for (unsigned n = 1; n <= max; ++n) {
      const TangentReport r = tangent(Space::orbit(n), FunctorKind::y_right(Space::orbit(m)));
      grid.back().push_back(dimension_text(r));
      if (std::holds_alternative<LiftWitness>(r.witness)) {
        notes.push_back("(m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + "): " + witness_text(r.witness));
      }
      cells.push_back(r);
    }
  }
  return emit_table(ctx, json, "y-right dimensions of H_n tested against H_m (rows m, columns n)", grid, cells,
                    notes);
}

inline Json witness_header(CliContext& ctx, const std::string& command) {
  return Json{{"version", kToolVersion}, {"input", ctx.input}, {"command", command}};
}

inline int cmd_witness_mobius(CliContext& ctx, const std::string& a_text, const std::string& b_text, bool json) {
  const QuadraticIrrational alpha = parse_slope(a_text);
  const QuadraticIrrational beta = parse_slope(b_text);
  const auto w = mobius_witness(alpha, beta);
  if (w && !witnesses(*w, alpha, beta)) throw std::logic_error("witness failed verification");
  if (json) {
    Json j = witness_header(ctx, "witness mobius");
    j["alpha"] = to_string(alpha);
    j["beta"] = to_string(beta);
    j["same_field"] = same_field(alpha, beta);
    j["witness"] = w ? to_json(*w) : Json(nullptr);
    emit(ctx, j);
  } else if (w) {
    ctx.out << "witness: " << to_string(*w) << "\n"
            << "check:   " << to_string(alpha) << " = (" << w->a << " + " << w->b << "*β)/(" << w->c << " + " << w->d
            << "*β) with β = " << to_string(beta) << "\n";
  } else {
    ctx.out << "witness: none (sqrt(" << alpha.d() << ") and sqrt(" << beta.d() << ") generate different fields)\n";
  }
  return w ? kExitDetermined : kExitNoWitness;
}

inline int cmd_witness_diffeo(CliContext& ctx, const std::string& a_text, const std::string& b_text, bool json) {
  const QuadraticIrrational alpha = parse_slope(a_text);
  const QuadraticIrrational beta = parse_slope(b_text);
  const ContinuedFraction ca = cf_expand(alpha);
  const ContinuedFraction cb = cf_expand(beta);
  const auto w = gl2z_equivalent(alpha, beta);
  if (w && (!witnesses(*w, alpha, beta) || abs_of(w->det()) != 1)) {
    throw std::logic_error("witness failed verification");
  }
  if (json) {
    Json j = witness_header(ctx, "witness diffeo");
    j["alpha"] = to_string(alpha);
    j["beta"] = to_string(beta);
    j["cf_alpha"] = to_json(ca);
    j["cf_beta"] = to_json(cb);
    j["witness"] = w ? to_json(*w) : Json(nullptr);
    emit(ctx, j);
  } else {
    ctx.out << "cf(α):   " << to_string(ca) << "\n"
            << "cf(β):   " << to_string(cb) << "\n"
            << "witness: " << (w ? to_string(*w) + ", det " + w->det().str() : "none (no common tail)") << "\n";
  }
  return w ? kExitDetermined : kExitNoWitness;
}

inline int cmd_witness_embed(CliContext& ctx, unsigned m, unsigned n, bool json) {
  std::optional<LiftWitness> w;
  if (m <= n) w = lift_witness(standard_embedding(m, n));
  if (json) {
    Json j = witness_header(ctx, "witness embed");
    j["m"] = m;
    j["n"] = n;
    j["witness"] = w ? to_json(*w) : Json(nullptr);
    emit(ctx, j);
  } else if (w) {
    ctx.out << "lift:        " << witness_text(*w).substr(0, witness_text(*w).find(", pushforward")) << "\n"
            << "pushforward: " << to_string(w->pushforward) << "\n";
  } else {
    ctx.out << "lift: none (no embedding R^" << m << " -> R^" << n << " for m > n)\n";
  }
  return w ? kExitDetermined : kExitNoWitness;
}

inline int cmd_lift(CliContext& ctx, unsigned m, const std::string& text, bool json) {
  const PolyLift f = PolyLift::parse(m, text);
  const auto v = validate_lift(f);
  const auto* germ = std::get_if<InvariantGerm>(&v);
  Json j = witness_header(ctx, "lift");
  j["m"] = f.m();
  j["n"] = f.n();
  j["lift"] = to_string(f);
  j["valid"] = germ != nullptr;
  if (germ) {
    const RankObstruction ro = rank_obstruction(f);
    Json a = Json::array();
    for (const auto& row : ro.a) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(to_string(x));
      a.push_back(r);
    }
    j["psi"] = to_string(germ->psi);
    j["pushforward"] = to_string(pushforward(f, Derivation{}).coeff);
    j["linear_part"] = a;
    j["gram_scalar"] = to_string(*ro.scalar);
  } else {
    const auto& bad = std::get<InvalidLift>(v);
    j["reason"] = bad.reason;
    j["counterexample"] = to_string(bad.counterexample);
  }
  if (json) {
    emit(ctx, j);
  } else if (germ) {
    ctx.out << "lift:        " << j["lift"].get<std::string>() << "\n"
            << "psi:         " << j["psi"].get<std::string>() << "\n"
            << "pushforward: " << j["pushforward"].get<std::string>() << "\n"
            << "gram scalar: " << j["gram_scalar"].get<std::string>() << "\n";
  } else {
    ctx.out << "lift:    " << j["lift"].get<std::string>() << "\n"
            << "invalid: " << j["reason"].get<std::string>() << " (monomial " << j["counterexample"].get<std::string>()
            << ")\n";
  }
  return germ ? kExitDetermined : kExitNoWitness;
}

}  // namespace detail

/// Runs one invocation; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tangent-space dimensions and witnesses for diffeological spaces", "tangentlab"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  detail::CliContext ctx{args, out, err};
  std::function<int()> action;

  bool json = false;
  std::string space, functor, test, slopes, alpha, beta, lift_text;
  unsigned max = 0, m = 0, n = 0;

  auto* tangent_cmd = app.add_subcommand("tangent", "tangent space of one catalog space");
  tangent_cmd->add_option("--space", space, "R^k | torus:<expr> | orbit:<n>")->required();
  tangent_cmd->add_option("--functor", functor, "internal | right | vincent | y-internal | y-right")->required();
  tangent_cmd->add_option("--test", test, "test space for y-internal and y-right");
  tangent_cmd->add_flag("--json", json, "emit a JSON record");
  tangent_cmd->callback([&] { action = [&] { return detail::cmd_tangent(ctx, space, functor, test, json); }; });

  auto* table = app.add_subcommand("table", "dimension tables")->require_subcommand(1);
  auto* classical = table->add_subcommand("classical", "internal, Vincent and right dimensions");
  classical->add_flag("--json", json, "emit an array of JSON records");
  classical->callback([&] { action = [&] { return detail::cmd_table_classical(ctx, json); }; });
  auto* torus = table->add_subcommand("torus", "y-internal matrix over irrational tori");
  torus->add_option("--slopes", slopes, "comma-separated slope expressions")->required();
  torus->add_flag("--json", json, "emit an array of JSON records");
  torus->callback([&] { action = [&] { return detail::cmd_table_torus(ctx, slopes, json); }; });
  auto* orbit = table->add_subcommand("orbit", "y-right matrix over orbit spaces H_1..H_N");
  orbit->add_option("--max", max, "largest orbit-space index")->required()->check(CLI::Range(1u, 16u));
  orbit->add_flag("--json", json, "emit an array of JSON records");
  orbit->callback([&] { action = [&] { return detail::cmd_table_orbit(ctx, max, json); }; });

  auto* witness = app.add_subcommand("witness", "constructive witnesses")->require_subcommand(1);
  auto* mobius = witness->add_subcommand("mobius", "integer Möbius relation α = (a+bβ)/(c+dβ)");
  auto* diffeo = witness->add_subcommand("diffeo", "GL2(Z) relation and continued fractions");
  for (auto* sub : {mobius, diffeo}) {
    sub->add_option("--alpha", alpha, "slope expression")->required();
    sub->add_option("--beta", beta, "slope expression")->required();
    sub->add_flag("--json", json, "emit a JSON record");
  }
  mobius->callback([&] { action = [&] { return detail::cmd_witness_mobius(ctx, alpha, beta, json); }; });
  diffeo->callback([&] { action = [&] { return detail::cmd_witness_diffeo(ctx, alpha, beta, json); }; });
  auto* embed = witness->add_subcommand("embed", "standard embedding H_m -> H_n");
  embed->add_option("--m", m, "source dimension")->required()->check(CLI::Range(1u, 64u));
  embed->add_option("--n", n, "target dimension")->required()->check(CLI::Range(1u, 64u));
  embed->add_flag("--json", json, "emit a JSON record");
  embed->callback([&] { action = [&] { return detail::cmd_witness_embed(ctx, m, n, json); }; });

  auto* lift = app.add_subcommand("lift", "validate a polynomial lift R^m -> R^n of a map H_m -> H_n");
  lift->add_option("--m", m, "source dimension")->required()->check(CLI::Range(1u, 16u));
  lift->add_option("--f", lift_text, "components separated by ';', e.g. \"x1^2+x2^2; 0\"")->required();
  lift->add_flag("--json", json, "emit a JSON record");
  lift->callback([&] { action = [&] { return detail::cmd_lift(ctx, m, lift_text, json); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace tangentlab
