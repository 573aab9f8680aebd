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

// Linear Weingarten relations a*H + b*K = c, the Euler equality K = H^2, and
// the Jacobian test for general Weingarten surfaces.
//
// Coefficient naming: `a` always multiplies the isotropic mean curvature H and
// `b` the relative curvature K. Normalizing by b gives 2*m0*H + K = n0.

#pragma once

#include <cmath>
#include <variant>

#include "isowein/curvature.hpp"
#include "isowein/errors.hpp"
#include "isowein/expr.hpp"
#include "isowein/grid.hpp"
#include "isowein/jet_eval.hpp"

namespace isowein {

struct LWParams {
  double a = 0;  // on H
  double b = 0;  // on K
  double c = 0;

  void validate() const {
    if (a == 0 && b == 0 && c == 0) throw DegenerateError("(a, b, c) must not all vanish");
  }
};

struct NormalizedLW {
  double m0 = 0;
  double n0 = 0;
};

inline double lw_residual(const CurvaturePair& k, const LWParams& p) {
  return p.a * k.H + p.b * k.K - p.c;
}

inline NormalizedLW normalize(const LWParams& p) {
  p.validate();
  if (p.b == 0) throw DegenerateError("cannot normalize: coefficient on K is zero");
  return {p.a / (2 * p.b), p.c / p.b};
}

// 2*m0*H + K - n0.
inline double normalized_residual(const CurvaturePair& k, const NormalizedLW& n) {
  return 2 * n.m0 * k.H + k.K - n.n0;
}

// (z_xx - z_yy)^2 + 4 z_xy^2, which equals 4 (H^2 - K). Zero exactly when
// z_xy = 0 and z_xx = z_yy.
inline double euler_residual(const Jet2& j) {
  const double d = j.dxx - j.dyy;
  return d * d + 4 * j.dxy * j.dxy;
}

// Central-difference estimate of det d(K, H)/d(x, y) = K_x H_y - K_y H_x.
// Vanishes on any Weingarten surface.
inline double weingarten_jacobian(const Expr& s, Point2 p, double h = 1e-3) {
  if (!(h > 0)) throw DomainError("jacobian step must be positive");
  auto at = [&](double x, double y) { return curvatures(eval_jet(s, {x, y})); };
  const CurvaturePair xp = at(p.x + h, p.y);
  const CurvaturePair xm = at(p.x - h, p.y);
  const CurvaturePair yp = at(p.x, p.y + h);
  const CurvaturePair ym = at(p.x, p.y - h);
  const double kx = (xp.K - xm.K) / (2 * h);
  const double hx = (xp.H - xm.H) / (2 * h);
  const double ky = (yp.K - ym.K) / (2 * h);
  const double hy = (yp.H - ym.H) / (2 * h);
  return kx * hy - ky * hx;
}

struct LWResidual {
  LWParams params;
};
struct EulerResidual {};
struct JacobianResidual {
  double h = 1e-3;
};

using ResidualKind = std::variant<LWResidual, EulerResidual, JacobianResidual>;

inline double residual_at(const Expr& s, Point2 p, const ResidualKind& kind) {
  if (const auto* lw = std::get_if<LWResidual>(&kind))
    return lw_residual(curvatures(eval_jet(s, p)), lw->params);
  if (std::holds_alternative<EulerResidual>(kind)) return euler_residual(eval_jet(s, p));
  return weingarten_jacobian(s, p, std::get<JacobianResidual>(kind).h);
}

// Evaluates the chosen residual at every surviving node of the grid, in
// row-major order.
inline ResidualReport scan_grid(const Expr& s, const GridDomain& d, const ResidualKind& kind) {
  if (const auto* lw = std::get_if<LWResidual>(&kind)) lw->params.validate();
  return scan_nodes(d, [&](Point2 p) { return residual_at(s, p, kind); });
}

}  // namespace isowein
