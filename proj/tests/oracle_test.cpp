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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "isowein/errors.hpp"
#include "isowein/expr.hpp"
#include "isowein/jet_eval.hpp"
#include "isowein/oracle.hpp"
#include "support/random_expr.hpp"

namespace isowein {
namespace {

TEST(FdJetTest, Bilinear) {
  const Jet2 j = fd_jet(parse("x*y"), {2, 3}, FDConfig(1e-3));
  EXPECT_NEAR(j.dxy, 1, 1e-8);
  EXPECT_NEAR(j.dx, 3, 1e-8);
  EXPECT_NEAR(j.dy, 2, 1e-8);
}

TEST(FdJetTest, Quadratic) {
  for (Point2 p : {Point2{0, 0}, Point2{0.7, -0.2}, Point2{-3, 4}}) {
    const Jet2 j = fd_jet(parse("0.5*(x^2+y^2)"), p, FDConfig(1e-3));
    EXPECT_NEAR(j.dxx, 1, 1e-8);
    EXPECT_NEAR(j.dyy, 1, 1e-8);
    EXPECT_NEAR(j.dxy, 0, 1e-8);
  }
}

TEST(FdJetTest, ExpSinAgreesWithJets) {
  const Expr e = parse("exp(x)*sin(y)");
  EXPECT_TRUE(compare(eval_jet(e, {0.3, 0.7}), fd_jet(e, {0.3, 0.7}, FDConfig(1e-3)), 1e-6).ok());
}

TEST(FdJetTest, StepBounds) {
  EXPECT_THROW(fd_jet(parse("x"), {0, 0}, FDConfig(1e-7)), DomainError);
  EXPECT_THROW(fd_jet(parse("x"), {0, 0}, FDConfig(0.1)), DomainError);
  EXPECT_THROW(fd_jet(parse("ln(x)"), {0.001, 0}, FDConfig(1e-2)), DomainError);
}

TEST(CompareTest, Contract) {
  const Jet2 a{1, 2, 3, 4, 5, 6};
  EXPECT_TRUE(compare(a, a, 1e-12).ok());
  Jet2 b = a;
  b.dxy += 1e-3;
  const JetComparison cmp = compare(a, b, 1e-5);
  EXPECT_EQ(cmp.n_flagged, 1);
  EXPECT_TRUE(cmp.components[4].flagged);
  EXPECT_EQ(cmp.components[4].component, "dxy");
  Jet2 nan_jet = a;
  nan_jet.v = NAN;
  EXPECT_EQ(compare(a, nan_jet, 1).n_flagged, 1);
}

TEST(CompareTest, RandomExpressionsHaveNoFlags) {
  testing::RandomExprGenerator gen(99);
  for (int i = 0; i < 100; ++i) {
    const Expr e = gen.generate(3);
    const Point2 p = gen.point();
    const JetComparison cmp = compare(eval_jet(e, p), fd_jet(e, p, FDConfig(1e-4, 1e-3)), 1e-5);
    EXPECT_TRUE(cmp.ok()) << print(e);
  }
}

TEST(FdJetTest, FirstPartialsExactOnCubics) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 50; ++i) {
    // Random cubic in x and y.
    Expr e = constant(u(rng));
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; a + b <= 3; ++b) {
        if (a + b == 0) continue;
        e = e + constant(u(rng)) * pow(var_x(), a) * pow(var_y(), b);
      }
    }
    const Point2 p{u(rng), u(rng)};
    const Jet2 fd = fd_jet(e, p, FDConfig(1e-2));
    const Jet2 ad = eval_jet(e, p);
    EXPECT_NEAR(fd.dx, ad.dx, 1e-10) << print(e);
    EXPECT_NEAR(fd.dy, ad.dy, 1e-10) << print(e);
  }
}

// Observed convergence order from errors at h and h/2.
double ObservedOrder(double err_h, double err_half) { return std::log2(err_h / err_half); }

TEST(FdJetTest, ConvergenceOrders) {
  const Expr e = parse("exp(3*x)*sin(4*y)+cos(2*x*y)");
  const Point2 p{0.4, -0.3};
  const Jet2 exact = eval_jet(e, p);
  const Jet2 coarse = fd_jet(e, p, FDConfig(1e-2));
  const Jet2 fine = fd_jet(e, p, FDConfig(5e-3));
  EXPECT_GE(ObservedOrder(std::fabs(coarse.dx - exact.dx), std::fabs(fine.dx - exact.dx)), 3.5);
  EXPECT_GE(ObservedOrder(std::fabs(coarse.dy - exact.dy), std::fabs(fine.dy - exact.dy)), 3.5);
  EXPECT_GE(ObservedOrder(std::fabs(coarse.dxy - exact.dxy), std::fabs(fine.dxy - exact.dxy)),
            1.8);
  EXPECT_GE(ObservedOrder(std::fabs(coarse.dxx - exact.dxx), std::fabs(fine.dxx - exact.dxx)),
            1.8);
  EXPECT_GE(ObservedOrder(std::fabs(coarse.dyy - exact.dyy), std::fabs(fine.dyy - exact.dyy)),
            1.8);
}

}  // namespace
}  // namespace isowein
