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

/// @file output.hpp
/// @brief JSON records and plain-text rendering of reports and witnesses.
///
/// Integers that can grow without bound (witness entries, rationals) are
/// emitted as decimal strings; dimensions are JSON integers. Keys keep
/// insertion order so identical inputs give byte-identical output.

#include "tangentlab/continued_fraction.hpp"
#include "tangentlab/orbit_space.hpp"
#include "tangentlab/report.hpp"

#include <json.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace tangentlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

inline Json to_json(const MobiusWitness& w) {
  return Json{{"kind", "mobius"}, {"a", w.a.str()}, {"b", w.b.str()},
              {"c", w.c.str()},   {"d", w.d.str()}, {"det", w.det().str()}};
}

inline Json to_json(const LiftWitness& w) {
  return Json{{"kind", "lift"},
              {"m", w.m},
              {"n", w.n},
              {"components", w.components},
              {"pushforward", to_string(w.pushforward)}};
}

inline Json to_json(const Witness& w) {
  if (const auto* m = std::get_if<MobiusWitness>(&w)) return to_json(*m);
  if (const auto* l = std::get_if<LiftWitness>(&w)) return to_json(*l);
  return nullptr;
}

inline Json to_json(const ContinuedFraction& cf) {
  std::vector<std::string> pre, per;
  for (const auto& v : cf.preperiod()) pre.push_back(v.str());
  for (const auto& v : cf.period()) per.push_back(v.str());
  return Json{{"text", to_string(cf)}, {"preperiod", pre}, {"period", per}};
}

/// The report fields of an output record, without version and input echo.
inline Json to_json(const TangentReport& r) {
  Json out;
  out["space"] = to_string(r.space);
  out["functor"] = family_name(r.functor.family);
  out["test"] = r.functor.test ? Json(to_string(*r.functor.test)) : Json(nullptr);
  out["dimension"] = r.dimension ? Json(*r.dimension) : Json("undetermined");
  out["generators"] = r.generators;
  out["witness"] = to_json(r.witness);
  out["status"] = to_string(r.status);
  out["justification"] = r.justification;
  return out;
}

inline Json output_record(const TangentReport& r, const std::vector<std::string>& input) {
  Json out{{"version", kToolVersion}, {"input", input}};
  out.update(to_json(r));
  return out;
}

/// "(a,b,c,d)" or "(x1; x2; 0), pushforward 1"
inline std::string witness_text(const Witness& w) {
  if (const auto* m = std::get_if<MobiusWitness>(&w)) return to_string(*m) + ", det " + m->det().str();
  if (const auto* l = std::get_if<LiftWitness>(&w)) {
    std::string out = "(";
    for (std::size_t i = 0; i < l->components.size(); ++i) out += (i ? "; " : "") + l->components[i];
    return out + "), pushforward " + to_string(l->pushforward);
  }
  return "none";
}

inline std::string report_text(const TangentReport& r) {
  std::ostringstream out;
  std::string gens;
  for (std::size_t i = 0; i < r.generators.size(); ++i) gens += (i ? ", " : "") + r.generators[i];
  out << "space:         " << to_string(r.space) << "\n"
      << "functor:       " << to_string(r.functor) << "\n"
      << "dimension:     " << dimension_text(r) << "\n"
      << "generators:    " << (gens.empty() ? "none" : gens) << "\n"
      << "witness:       " << witness_text(r.witness) << "\n"
      << "status:        " << to_string(r.status) << "\n"
      << "justification: " << r.justification << "\n";
  return out.str();
}

/// Left-aligned columns separated by two spaces.
inline std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  auto display = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;  // count UTF-8 code points
    return n;
  };
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display(row[i]));
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - display(row[i]) + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace tangentlab
