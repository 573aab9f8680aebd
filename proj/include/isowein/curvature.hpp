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

// Isotropic invariants of graph surfaces z(x, y).
//
//   relative curvature       K = z_xx z_yy - z_xy^2
//   isotropic mean curvature H = (z_xx + z_yy) / 2
//
// The induced metric of a graph is dx^2 + dy^2, so both are read off the
// Euclidean Hessian of z directly.

#pragma once

#include "isowein/jet.hpp"
#include "isowein/point.hpp"

namespace isowein {

struct CurvaturePair {
  double K = 0;
  double H = 0;

  friend constexpr bool operator==(const CurvaturePair&, const CurvaturePair&) = default;
};

inline CurvaturePair curvatures(const Jet2& j) {
  return {j.dxx * j.dyy - j.dxy * j.dxy, (j.dxx + j.dyy) / 2};
}

// Curvatures of z = f(x) g(y) from the factor jets alone:
//   K = (f'' f)(g'' g) - f'^2 g'^2,   2H = f'' g + f g''.
inline CurvaturePair factorable_curvatures(const Jet1& f, const Jet1& g) {
  return {(f.dd * f.v) * (g.dd * g.v) - (f.d * f.d) * (g.d * g.d),
          (f.dd * g.v + f.v * g.dd) / 2};
}

// Isotropic distance: only the projection onto the xy-plane counts. Returned
// as the sum of squares without a square root.
inline double isotropic_distance(const Point3& p, const Point3& q) {
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  return dx * dx + dy * dy;
}

}  // namespace isowein
