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

// Samples K and H of z = f(x) g(y) along the diagonal, once from the factor
// jets and once from the product surface, and says whether the surface looks
// like a linear Weingarten candidate (both invariants constant).
//
//   factorable_invariants "2*x+1" "3*y+4"
//   factorable_invariants "exp(x)" "cos(y)"

#include <cmath>
#include <cstdio>
#include <exception>

#include "isowein.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: %s F_OF_X G_OF_Y\n", argv[0]);
    return 2;
  }
  try {
    const isowein::Expr f = isowein::parse(argv[1]);
    const isowein::Expr g = isowein::parse(argv[2]);
    const isowein::Expr z = f * g;
    std::printf("z = %s\n", isowein::print(z).c_str());

    double k_min = INFINITY, k_max = -INFINITY, h_min = INFINITY, h_max = -INFINITY;
    for (int i = 0; i <= 8; ++i) {
      const double t = -0.8 + 0.2 * i;
      const auto by_factors =
          isowein::factorable_curvatures(isowein::lift_1d(f, t), isowein::lift_1d(g, t));
      const auto by_surface = isowein::curvatures(isowein::eval_jet(z, {t, t}));
      std::printf("(%5.2f,%5.2f)  K=%12.6g  H=%12.6g  |dK|=%.1e  |dH|=%.1e\n", t, t,
                  by_surface.K, by_surface.H, std::fabs(by_surface.K - by_factors.K),
                  std::fabs(by_surface.H - by_factors.H));
      k_min = std::fmin(k_min, by_surface.K);
      k_max = std::fmax(k_max, by_surface.K);
      h_min = std::fmin(h_min, by_surface.H);
      h_max = std::fmax(h_max, by_surface.H);
    }
    const bool constant = k_max - k_min <= 1e-9 && h_max - h_min <= 1e-9;
    std::printf("K and H %s along the diagonal\n", constant ? "are constant" : "vary");
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
