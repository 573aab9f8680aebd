/* Copyright 2026 The isowein Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// JSON and CSV serialization for reports, family specs and trajectories.
//
// FamilySpec objects carry a "kind" discriminator plus the numeric fields of
// the family, e.g. {"kind": "CaseC", "c8": 2, "d15": 1, "c9": 3, "d16": 4}.
// Every field is required and unknown keys are rejected.

#pragma once

#include <initializer_list>
#include <ostream>
#include <set>
#include <string>

#include "json.hpp"

#include "isowein/curvature.hpp"
#include "isowein/errors.hpp"
#include "isowein/expr.hpp"
#include "isowein/families.hpp"
#include "isowein/grid.hpp"
#include "isowein/jet.hpp"
#include "isowein/ode.hpp"
#include "isowein/point.hpp"
#include "isowein/weingarten.hpp"

namespace isowein {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline json to_json(const Point2& p) { return json::array({p.x, p.y}); }

inline json to_json(const Jet2& j) {
  return {{"v", j.v}, {"dx", j.dx}, {"dy", j.dy}, {"dxx", j.dxx}, {"dxy", j.dxy}, {"dyy", j.dyy}};
}

inline json to_json(const CurvaturePair& k) { return {{"K", k.K}, {"H", k.H}}; }

inline json to_json(const LWParams& p) { return {{"a", p.a}, {"b", p.b}, {"c", p.c}}; }

inline json to_json(const ResidualReport& r) {
  return {{"n_samples", r.n_samples},
          {"max_abs", r.max_abs},
          {"mean_abs", r.mean_abs},
          {"std_dev", r.std_dev},
          {"worst_point", to_json(r.worst_point)}};
}

inline json to_json(const FamilyPrediction& p) {
  json out = json::object();
  out["K_expected"] = p.K ? json(*p.K) : json(nullptr);
  out["H_expected"] = p.H ? json(*p.H) : json(nullptr);
  out["lw"] = p.lw ? to_json(*p.lw) : json(nullptr);
  return out;
}

inline json to_json(const GridDomain& d) {
  json loci = json::array();
  for (const auto& l : d.singular_loci) {
    if (const auto* v = std::get_if<VerticalLine>(&l))
      loci.push_back({{"vertical_line", v->x}});
    else
      loci.push_back({{"point", to_json(std::get<SingularPointLocus>(l).at)}});
  }
  return {{"x_min", d.x_min},     {"x_max", d.x_max},
          {"y_min", d.y_min},     {"y_max", d.y_max},
          {"nx", d.nx},           {"ny", d.ny},
          {"exclusion_radius", d.exclusion_radius},
          {"singular_loci", loci}};
}

inline json to_json(const FamilySpec& spec) {
  json out = {{"kind", std::string(kind_name(spec))}};
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, CaseA>) {
          out.update({{"f0", s.f0}, {"m0", s.m0}, {"n0", s.n0}, {"d1", s.d1}, {"d2", s.d2}});
        } else if constexpr (std::is_same_v<S, CaseB>) {
          out.update({{"g0", s.g0}, {"m0", s.m0}, {"n0", s.n0}, {"d3", s.d3}, {"d4", s.d4}});
        } else if constexpr (std::is_same_v<S, CaseC>) {
          out.update({{"c8", s.c8}, {"d15", s.d15}, {"c9", s.c9}, {"d16", s.d16}});
        } else if constexpr (std::is_same_v<S, ParabolicSphere>) {
          out.update({{"c3", s.c3}, {"d8", s.d8}, {"d9", s.d9}, {"d10", s.d10}});
        } else if constexpr (std::is_same_v<S, NonIsotropicPlane>) {
          out.update({{"p", s.p}, {"q", s.q}, {"r", s.r}});
        } else {
          out.update({{"c3", s.c3},
                      {"c4", s.c4},
                      {"d7", s.d7},
                      {"d8", s.d8},
                      {"d9", s.d9},
                      {"m0", s.m0}});
        }
      },
      spec);
  return out;
}

namespace detail {

inline double number_field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidSpec(std::string("missing field '") + key + "'");
  if (!it->is_number()) throw InvalidSpec(std::string("field '") + key + "' is not a number");
  return it->get<double>();
}

}  // namespace detail

// `extra` names additional keys tolerated (and ignored) by the caller, such as
// the "n0" used by the contradiction scan of Case31Candidate.
inline FamilySpec family_spec_from_json(const json& j,
                                        std::initializer_list<const char*> extra = {}) {
  using detail::number_field;
  if (!j.is_object()) throw InvalidSpec("family spec must be a JSON object");
  const auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string()) throw InvalidSpec("missing string 'kind'");
  const std::string kind = kind_it->get<std::string>();
  auto check = [&](std::initializer_list<const char*> fields) {
    std::set<std::string> allowed;
    for (const char* f : fields) allowed.insert(f);
    for (const char* f : extra) allowed.insert(f);
    for (const auto& item : j.items()) {
      if (item.key() != "kind" && !allowed.contains(item.key()))
        throw InvalidSpec("unknown field '" + item.key() + "' for kind " + kind);
    }
  };
  FamilySpec spec;
  if (kind == "CaseA") {
    check({"f0", "m0", "n0", "d1", "d2"});
    spec = CaseA{number_field(j, "f0"), number_field(j, "m0"), number_field(j, "n0"),
                 number_field(j, "d1"), number_field(j, "d2")};
  } else if (kind == "CaseB") {
    check({"g0", "m0", "n0", "d3", "d4"});
    spec = CaseB{number_field(j, "g0"), number_field(j, "m0"), number_field(j, "n0"),
                 number_field(j, "d3"), number_field(j, "d4")};
  } else if (kind == "CaseC") {
    check({"c8", "d15", "c9", "d16"});
    spec = CaseC{number_field(j, "c8"), number_field(j, "d15"), number_field(j, "c9"),
                 number_field(j, "d16")};
  } else if (kind == "ParabolicSphere") {
    check({"c3", "d8", "d9", "d10"});
    spec = ParabolicSphere{number_field(j, "c3"), number_field(j, "d8"), number_field(j, "d9"),
                           number_field(j, "d10")};
  } else if (kind == "NonIsotropicPlane") {
    check({"p", "q", "r"});
    spec = NonIsotropicPlane{number_field(j, "p"), number_field(j, "q"), number_field(j, "r")};
  } else if (kind == "Case31Candidate") {
    check({"c3", "c4", "d7", "d8", "d9", "m0"});
    spec = Case31Candidate{number_field(j, "c3"), number_field(j, "c4"), number_field(j, "d7"),
                           number_field(j, "d8"), number_field(j, "d9"), number_field(j, "m0")};
  } else {
    throw InvalidSpec("unknown family kind '" + kind + "'");
  }
  validate(spec);
  return spec;
}

// Header "t,f,fp", one row per node, shortest round-trip number formatting.
inline void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,f,fp\n";
  for (const auto& p : traj) {
    os << format_number(p.t) << ',' << format_number(p.f) << ',' << format_number(p.fp) << '\n';
  }
}

}  // namespace isowein
