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

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "isowein/errors.hpp"
#include "isowein/ode.hpp"

namespace isowein {
namespace {

double MaxDeviationFromCosh(double step) {
  const Trajectory traj = integrate({Eq318{1, 0}, 0, 1, 0, 1, step});
  double dev = 0;
  for (const auto& p : traj) dev = std::fmax(dev, std::fabs(p.f - std::cosh(p.t)));
  return dev;
}

TEST(IntegrateTest, CoshBenchmark) {
  const auto start = std::chrono::steady_clock::now();
  const Trajectory traj = integrate({Eq318{1, 0}, 0, 1, 0, 1, 1e-3});
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_EQ(traj.size(), 1001u);
  EXPECT_EQ(traj.back().t, 1);
  EXPECT_NEAR(traj.back().f, 1.5430806348, 1e-6);
  EXPECT_NEAR(traj.back().f, std::cosh(1.0), 1e-12);
  EXPECT_LT(std::chrono::duration<double>(elapsed).count(), 0.05);
}

TEST(IntegrateTest, SineBenchmark) {
  const double half_pi = std::numbers::pi / 2;
  const Trajectory traj = integrate({Eq318{-1, 0}, 0, 0, 1, half_pi, 1e-3});
  EXPECT_DOUBLE_EQ(traj.back().t, half_pi);
  EXPECT_NEAR(traj.back().f, 1, 1e-6);
  EXPECT_NEAR(traj.back().fp, 0, 1e-6);
}

TEST(IntegrateTest, Eq311MatchesClosedForm) {
  // c3 = 1, m0 = 1, c4 = 1, d9 = 2: f(0) = -1, f'(0) = 1/4.
  const ClosedFormJet start = closed_form_312_jet(1, 1, 2, 1, 0);
  EXPECT_DOUBLE_EQ(start.f, -1);
  EXPECT_DOUBLE_EQ(start.fp, 0.25);
  const Trajectory traj = integrate({Eq311{1, 1}, 0, start.f, start.fp, 1, 1e-3});
  for (double x : {0.5, 1.0}) {
    EXPECT_NEAR(sample(traj, x).f, closed_form_312(1, 1, 2, 1, x), 1e-6);
  }
  for (const auto& p : traj) EXPECT_NEAR(p.f, closed_form_312(1, 1, 2, 1, p.t), 1e-6);
}

TEST(IntegrateTest, ObservedOrderOnCosh) {
  const double coarse = MaxDeviationFromCosh(1e-2);
  const double fine = MaxDeviationFromCosh(5e-3);
  EXPECT_GE(coarse / fine, 8) << coarse << " " << fine;
}

TEST(IntegrateTest, EnergyInvariant) {
  for (double c5 : {1.0, -2.0, 0.5}) {
    const Trajectory traj = integrate({Eq318{c5, 0}, 0, 0.7, -0.3, 2, 1e-3});
    const double e0 = traj.front().fp * traj.front().fp - c5 * traj.front().f * traj.front().f;
    for (const auto& p : traj) EXPECT_NEAR(p.fp * p.fp - c5 * p.f * p.f, e0, 1e-6);
  }
}

TEST(IntegrateTest, NonzeroD10RunsNumerically) {
  // No closed form; check the ODE residual along the run with the exact rhs.
  const Eq318 rhs{2, 0.3};
  const Trajectory traj = integrate({rhs, 0, 0.5, 0.1, 1, 1e-3});
  EXPECT_EQ(traj.size(), 1001u);
  for (std::size_t i = 1; i + 1 < traj.size(); i += 100) {
    const double h = traj[i + 1].t - traj[i].t;
    const double fpp_fd = (traj[i + 1].fp - traj[i - 1].fp) / (2 * h);
    EXPECT_NEAR(fpp_fd, second_derivative(rhs, traj[i].t, traj[i].f, traj[i].fp), 1e-5);
  }
}

TEST(IntegrateTest, DegenerateStart) {
  // f(0) = -m0/(2 c3) puts the Eq311 denominator at zero.
  try {
    integrate({Eq311{1, 1}, 0, -0.5, 0.25, 1, 1e-3});
    FAIL() << "expected DegenerateODE";
  } catch (const DegenerateODE& e) {
    EXPECT_EQ(e.t(), 0);
  }
  EXPECT_THROW(integrate({Eq318{1, 1}, 0, -1, 0, 1, 1e-3}), DegenerateODE);
}

TEST(IntegrateTest, BlowUpNearPoleAborts) {
  // The closed form with c4 = 1, d9 = 2 has a pole at x = -2; starting at
  // x = -3 and integrating forward runs into it.
  const ClosedFormJet j = closed_form_312_jet(1, 1, 2, 1, -3);
  EXPECT_THROW(integrate({Eq311{1, 1}, -3, j.f, j.fp, 1, 1e-3}), StepTooLarge);
}

TEST(IntegrateTest, SingularityAlongTrajectoryAborts) {
  // f'' = f / (f + 1) with f driven down through -1.
  EXPECT_THROW(integrate({Eq318{1, 1}, 0, 0, -2, 2, 1e-3}), Error);
}

TEST(IntegrateTest, InvalidArguments) {
  EXPECT_THROW(integrate({Eq318{1, 0}, 0, 1, 0, 1, 0}), DomainError);
  EXPECT_THROW(integrate({Eq318{1, 0}, 0, 1, 0, 1, 2}), DomainError);
  EXPECT_THROW(integrate({Eq318{1, 0}, 1, 1, 0, 0, 1e-3}), DomainError);
  EXPECT_THROW(integrate({Eq318{0, 0}, 0, 1, 0, 1, 1e-3}), DomainError);
  EXPECT_THROW(integrate({Eq311{0, 1}, 0, 1, 0, 1, 1e-3}), DomainError);
}

TEST(IntegrateTest, StepTooLargeIsDetected) {
  EXPECT_THROW(integrate({Eq318{400, 0}, 0, 1, 0, 1, 0.5}), StepTooLarge);
}

TEST(ClosedForm312Test, Examples) {
  EXPECT_DOUBLE_EQ(closed_form_312(1, 1, 2, 1, 0), -1.0);
  EXPECT_DOUBLE_EQ(closed_form_312(1, 1, 2, 0, 0), -0.5);
  EXPECT_THROW(closed_form_312(1, 1, 2, 1, -2), SingularPoint);
}

TEST(Check311Test, Examples) {
  EXPECT_DOUBLE_EQ(check_311_residual(1, 1, -1, 0.25, -0.25), 0);
  EXPECT_DOUBLE_EQ(check_311_residual(1, 1, 3, 2, 0), -8);
  EXPECT_EQ(check_311_residual(1, 1, 3, 0, 0), 0);
}

TEST(Check311Test, ClosedFormSolvesEq311) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-2, 2);
  int checked = 0;
  while (checked < 100) {
    const double c3 = u(rng), c4 = u(rng), d9 = u(rng), m0 = u(rng), x = u(rng);
    if (std::fabs(c3) < 0.1 || std::fabs(c4) < 0.1 || std::fabs(c4 * x + d9) < 0.2) continue;
    const ClosedFormJet j = closed_form_312_jet(c3, c4, d9, m0, x);
    EXPECT_LE(std::fabs(check_311_residual(c3, m0, j.f, j.fp, j.fpp)), 1e-9);
    ++checked;
  }
}

TEST(SampleTest, HermiteInterpolation) {
  const Trajectory traj = integrate({Eq318{1, 0}, 0, 1, 0, 1, 0.1});
  EXPECT_NEAR(sample(traj, 0.55).f, std::cosh(0.55), 1e-6);
  EXPECT_NEAR(sample(traj, 0.55).fp, std::sinh(0.55), 1e-4);
  EXPECT_EQ(sample(traj, 0).f, 1);
  EXPECT_THROW(sample(traj, 1.5), DomainError);
}

}  // namespace
}  // namespace isowein
