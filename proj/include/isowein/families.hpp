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

// Closed-form families of linear Weingarten factorable surfaces and of graph
// surfaces with K = H^2, together with their predicted invariants.
//
//   CaseA              z = f0 * (n0/(f0 m0) y^2 + d1 y + d2)      K = 0, H = n0/m0
//   CaseB              z = (n0/(g0 m0) x^2 + d3 x + d4) * g0      K = 0, H = n0/m0
//   CaseC              z = (c8 x + d15)(c9 y + d16)               K = -(c8 c9)^2, H = 0
//   ParabolicSphere    z = c3 (x^2 + y^2) + d8 x + d9 y + d10     K = 4 c3^2, H = 2 c3
//   NonIsotropicPlane  z = p x + q y + r                          K = 0, H = 0
//   Case31Candidate    z = f(x) g(y) with
//                        f = -(1/(c4 x + d9) + m0/(2 c3)),  g = c3 y^2 + d7 y + d8
//
// Case31Candidate is a negative control: its LW residual 2 m0 H + K - n0
// reduces to a function L(x) that is never constant, so it is not an LW
// surface for any n0.

#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "isowein/curvature.hpp"
#include "isowein/errors.hpp"
#include "isowein/expr.hpp"
#include "isowein/grid.hpp"
#include "isowein/jet_eval.hpp"
#include "isowein/weingarten.hpp"

namespace isowein {

struct CaseA {
  double f0 = 1, m0 = 1, n0 = 0, d1 = 0, d2 = 0;
};
struct CaseB {
  double g0 = 1, m0 = 1, n0 = 0, d3 = 0, d4 = 0;
};
struct CaseC {
  double c8 = 1, d15 = 0, c9 = 1, d16 = 0;
};
struct ParabolicSphere {
  double c3 = 1, d8 = 0, d9 = 0, d10 = 0;
};
struct NonIsotropicPlane {
  double p = 0, q = 0, r = 0;
};
struct Case31Candidate {
  double c3 = 1, c4 = 1, d7 = 0, d8 = 0, d9 = 0, m0 = 1;
};

using FamilySpec =
    std::variant<CaseA, CaseB, CaseC, ParabolicSphere, NonIsotropicPlane, Case31Candidate>;

inline std::string_view kind_name(const FamilySpec& spec) {
  static constexpr std::string_view kNames[] = {"CaseA",           "CaseB",
                                                "CaseC",           "ParabolicSphere",
                                                "NonIsotropicPlane", "Case31Candidate"};
  return kNames[spec.index()];
}

struct FamilyPrediction {
  std::optional<double> K;
  std::optional<double> H;
  std::optional<LWParams> lw;
};

namespace detail {

inline void require_nonzero(double v, const char* name) {
  if (!std::isfinite(v)) throw InvalidSpec(std::string(name) + " must be finite");
  if (v == 0) throw InvalidSpec(std::string(name) + " must be nonzero");
}

inline void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw InvalidSpec(std::string(name) + " must be finite");
}

// Appends coef * term to acc, dropping zero coefficients and folding the sign
// of negative ones into a subtraction.
// Unit coefficients on a variable term are left implicit.
inline void add_term(std::optional<Expr>& acc, double coef, std::optional<Expr> term) {
  if (coef == 0) return;
  auto scaled = [&](double c) {
    if (!term) return constant(c);
    return c == 1 ? *term : constant(c) * *term;
  };
  if (!acc) {
    acc = scaled(coef);
    return;
  }
  acc = coef < 0 ? *acc - scaled(-coef) : *acc + scaled(coef);
}

inline Expr finish(std::optional<Expr> acc) { return acc ? *acc : constant(0); }

// a2 t^2 + a1 t + a0 with zero terms omitted.
inline Expr quadratic(double a2, double a1, double a0, const Expr& t) {
  std::optional<Expr> acc;
  add_term(acc, a2, pow(t, 2));
  add_term(acc, a1, t);
  add_term(acc, a0, std::nullopt);
  return finish(acc);
}

}  // namespace detail

inline void validate(const FamilySpec& spec) {
  using detail::require_finite;
  using detail::require_nonzero;
  std::visit(
      [](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, CaseA>) {
          require_nonzero(s.f0, "f0");
          require_nonzero(s.m0, "m0");
          require_finite(s.n0, "n0");
          require_finite(s.d1, "d1");
          require_finite(s.d2, "d2");
        } else if constexpr (std::is_same_v<S, CaseB>) {
          require_nonzero(s.g0, "g0");
          require_nonzero(s.m0, "m0");
          require_finite(s.n0, "n0");
          require_finite(s.d3, "d3");
          require_finite(s.d4, "d4");
        } else if constexpr (std::is_same_v<S, CaseC>) {
          require_nonzero(s.c8, "c8");
          require_nonzero(s.c9, "c9");
          require_finite(s.d15, "d15");
          require_finite(s.d16, "d16");
        } else if constexpr (std::is_same_v<S, ParabolicSphere>) {
          require_nonzero(s.c3, "c3");
          require_finite(s.d8, "d8");
          require_finite(s.d9, "d9");
          require_finite(s.d10, "d10");
        } else if constexpr (std::is_same_v<S, NonIsotropicPlane>) {
          require_finite(s.p, "p");
          require_finite(s.q, "q");
          require_finite(s.r, "r");
        } else {
          require_nonzero(s.c3, "c3");
          require_nonzero(s.c4, "c4");
          require_nonzero(s.m0, "m0");
          require_finite(s.d7, "d7");
          require_finite(s.d8, "d8");
          require_finite(s.d9, "d9");
        }
      },
      spec);
}

// Closed-form surface z(x, y) of the family.
inline Expr build(const FamilySpec& spec) {
  validate(spec);
  const Expr x = var_x();
  const Expr y = var_y();
  return std::visit(
      [&](const auto& s) -> Expr {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, CaseA>) {
          return constant(s.f0) * detail::quadratic(s.n0 / (s.f0 * s.m0), s.d1, s.d2, y);
        } else if constexpr (std::is_same_v<S, CaseB>) {
          return detail::quadratic(s.n0 / (s.g0 * s.m0), s.d3, s.d4, x) * constant(s.g0);
        } else if constexpr (std::is_same_v<S, CaseC>) {
          return detail::quadratic(0, s.c8, s.d15, x) * detail::quadratic(0, s.c9, s.d16, y);
        } else if constexpr (std::is_same_v<S, ParabolicSphere>) {
          std::optional<Expr> acc = constant(s.c3) * (pow(x, 2) + pow(y, 2));
          detail::add_term(acc, s.d8, x);
          detail::add_term(acc, s.d9, y);
          detail::add_term(acc, s.d10, std::nullopt);
          return *acc;
        } else if constexpr (std::is_same_v<S, NonIsotropicPlane>) {
          std::optional<Expr> acc;
          detail::add_term(acc, s.p, x);
          detail::add_term(acc, s.q, y);
          detail::add_term(acc, s.r, std::nullopt);
          return detail::finish(acc);
        } else {
          const Expr f = -(constant(1) / detail::quadratic(0, s.c4, s.d9, x) +
                           constant(s.m0 / (2 * s.c3)));
          return f * detail::quadratic(s.c3, s.d7, s.d8, y);
        }
      },
      spec);
}

// Loci where the built surface is undefined.
inline std::vector<SingularLocus> singular_loci(const FamilySpec& spec) {
  if (const auto* s = std::get_if<Case31Candidate>(&spec)) {
    validate(spec);
    return {VerticalLine{-s->d9 / s->c4}};
  }
  return {};
}

// Predicted constant invariants. Case31Candidate has none and throws
// NoConstantPrediction; use case31_contradiction_scan for it.
//
// CaseA/CaseB surfaces have 2H = 2 n0/m0, so the LW triple they satisfy is
// (m0, 1, n0), i.e. the normalized relation holds with m0/2 in place of m0.
//
// CaseC surfaces are isotropic minimal and satisfy 2 m0 H + K = n0 for every m0
// once n0 = K, so no single LW triple is reported for them.
inline FamilyPrediction predict(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& s) -> FamilyPrediction {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, CaseA> || std::is_same_v<S, CaseB>) {
          return {0.0, s.n0 / s.m0, LWParams{s.m0, 1, s.n0}};
        } else if constexpr (std::is_same_v<S, CaseC>) {
          const double k = s.c8 * s.c9;
          return {-(k * k), 0.0, std::nullopt};
        } else if constexpr (std::is_same_v<S, ParabolicSphere>) {
          return {4 * s.c3 * s.c3, 2 * s.c3, std::nullopt};
        } else if constexpr (std::is_same_v<S, NonIsotropicPlane>) {
          return {0.0, 0.0, std::nullopt};
        } else {
          throw NoConstantPrediction(
              "Case31Candidate has no constant invariants; run the contradiction scan");
        }
      },
      spec);
}

struct FamilyVerification {
  FamilyPrediction prediction;
  ResidualReport report;  // deviation max(|K - K*|, |H - H*|) per node
  double tol = 0;
  bool pass = false;
};

// Samples K and H of the built surface over the domain (minus the family's own
// singular loci) and compares them with the predicted constants.
inline FamilyVerification verify_family(const FamilySpec& spec, GridDomain d, double tol) {
  FamilyVerification out;
  out.prediction = predict(spec);
  const Expr z = build(spec);
  for (auto& locus : singular_loci(spec)) d.singular_loci.push_back(locus);
  const FamilyPrediction& pr = out.prediction;
  out.report = scan_nodes(d, [&](Point2 p) {
    const CurvaturePair k = curvatures(eval_jet(z, p));
    double dev = 0;
    if (pr.K) dev = std::fmax(dev, std::fabs(k.K - *pr.K));
    if (pr.H) dev = std::fmax(dev, std::fabs(k.H - *pr.H));
    return dev;
  });
  out.tol = tol;
  out.pass = out.report.max_abs <= tol;
  return out;
}

// L(x) = c4^2 (4 c3 d8 - d7^2) / (c4 x + d9)^4 - 2 m0 c3 / (c4 x + d9) - m0^2 - n0,
// the LW residual 2 m0 H + K - n0 of the Case31Candidate surface (independent
// of y).
inline double case31_residual(const Case31Candidate& s, double n0, double x) {
  validate(FamilySpec{s});
  const double u = s.c4 * x + s.d9;
  if (u == 0) throw SingularPoint("c4*x + d9 vanishes at x=" + format_number(x));
  const double u2 = u * u;
  const double l =
      s.c4 * s.c4 * (4 * s.c3 * s.d8 - s.d7 * s.d7) / (u2 * u2) - 2 * s.m0 * s.c3 / u -
      s.m0 * s.m0 - n0;
  if (!std::isfinite(l)) throw SingularPoint("residual overflows near the pole at x=" +
                                             format_number(x));
  return l;
}

// Statistics of L over xs. A positive std_dev over three or more samples shows
// that L is not constant, so no (m0, n0) makes the candidate an LW surface.
inline ResidualReport case31_contradiction_scan(const Case31Candidate& s, double n0,
                                                std::span<const double> xs) {
  ResidualAccumulator acc;
  for (double x : xs) acc.add(case31_residual(s, n0, x), {x, 0});
  if (acc.count() == 0) throw EmptyDomain("contradiction scan needs at least one sample");
  return acc.report();
}

inline bool case31_rejected(const ResidualReport& r) { return r.n_samples >= 3 && r.std_dev > 0; }

}  // namespace isowein
