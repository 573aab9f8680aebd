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

// Finite-difference differentiation of expressions.
//
// Used as an independent check on jet arithmetic: it only ever calls the
// plain real evaluator and never touches a jet.

#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "isowein/errors.hpp"
#include "isowein/expr.hpp"
#include "isowein/jet.hpp"
#include "isowein/point.hpp"

namespace isowein {

enum class FDScheme { kCentral5 };

// Steps for the first-order and second-order stencils. Both must lie in
// [1e-6, 1e-2].
struct FDConfig {
  double h_first = 1e-4;
  double h_second = 1e-3;
  FDScheme scheme = FDScheme::kCentral5;

  FDConfig() = default;
  explicit FDConfig(double h) : h_first(h), h_second(h) {}
  FDConfig(double first, double second) : h_first(first), h_second(second) {}

  void validate() const {
    auto ok = [](double h) { return h >= 1e-6 && h <= 1e-2; };
    if (!ok(h_first) || !ok(h_second))
      throw DomainError("finite-difference step outside [1e-6, 1e-2]");
  }
};

// First partials: (-f(+2h) + 8 f(+h) - 8 f(-h) + f(-2h)) / 12h.
// Pure second partials: (-f(+2h) + 16 f(+h) - 30 f(0) + 16 f(-h) - f(-2h)) / 12h^2.
// Mixed partial: 4-point cross stencil / 4h^2.
inline Jet2 fd_jet(const Expr& s, Point2 p, const FDConfig& cfg = {}) {
  cfg.validate();
  auto f = [&](double x, double y) { return evaluate(s, x, y); };
  const double h1 = cfg.h_first;
  const double h2 = cfg.h_second;
  const double f0 = f(p.x, p.y);

  Jet2 j;
  j.v = f0;
  j.dx = (-f(p.x + 2 * h1, p.y) + 8 * f(p.x + h1, p.y) - 8 * f(p.x - h1, p.y) +
          f(p.x - 2 * h1, p.y)) /
         (12 * h1);
  j.dy = (-f(p.x, p.y + 2 * h1) + 8 * f(p.x, p.y + h1) - 8 * f(p.x, p.y - h1) +
          f(p.x, p.y - 2 * h1)) /
         (12 * h1);
  j.dxx = (-f(p.x + 2 * h2, p.y) + 16 * f(p.x + h2, p.y) - 30 * f0 + 16 * f(p.x - h2, p.y) -
           f(p.x - 2 * h2, p.y)) /
          (12 * h2 * h2);
  j.dyy = (-f(p.x, p.y + 2 * h2) + 16 * f(p.x, p.y + h2) - 30 * f0 + 16 * f(p.x, p.y - h2) -
           f(p.x, p.y - 2 * h2)) /
          (12 * h2 * h2);
  j.dxy = (f(p.x + h2, p.y + h2) - f(p.x + h2, p.y - h2) - f(p.x - h2, p.y + h2) +
           f(p.x - h2, p.y - h2)) /
          (4 * h2 * h2);
  return j;
}

inline constexpr std::array<const char*, 6> kJetComponentNames = {"v",   "dx",  "dy",
                                                                  "dxx", "dxy", "dyy"};

struct ComponentDeviation {
  std::string component;
  double a = 0;
  double b = 0;
  double abs_diff = 0;
  bool flagged = false;
};

struct JetComparison {
  std::array<ComponentDeviation, 6> components;
  int n_flagged = 0;

  bool ok() const { return n_flagged == 0; }
};

inline std::array<double, 6> jet_components(const Jet2& j) {
  return {j.v, j.dx, j.dy, j.dxx, j.dxy, j.dyy};
}

// Flags every component with |a - b| > tol_rel * (1 + |a|).
inline JetComparison compare(const Jet2& a, const Jet2& b, double tol_rel) {
  const auto ca = jet_components(a);
  const auto cb = jet_components(b);
  JetComparison out;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    ComponentDeviation& d = out.components[i];
    d.component = kJetComponentNames[i];
    d.a = ca[i];
    d.b = cb[i];
    d.abs_diff = std::fabs(ca[i] - cb[i]);
    d.flagged = !(d.abs_diff <= tol_rel * (1 + std::fabs(ca[i])));
    if (d.flagged) ++out.n_flagged;
  }
  return out;
}

}  // namespace isowein
