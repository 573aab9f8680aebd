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

// Fixed-step RK4 integration of the second-order ODEs met while classifying
// factorable LW surfaces, plus the closed forms they are checked against.
//
//   Eq311:  (m0/(2 c3) + f) f'' - 2 f'^2 = 0,  integrated as
//           f'' = 2 f'^2 / (m0/(2 c3) + f)
//   Eq318:  f'' = c5 f / (c5 d10 f + 1)

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "isowein/errors.hpp"
#include "isowein/expr.hpp"

namespace isowein {

struct Eq311 {
  double c3 = 1;
  double m0 = 0;
};

struct Eq318 {
  double c5 = 1;
  double d10 = 0;
};

using OdeRhs = std::variant<Eq311, Eq318>;

struct IVP {
  OdeRhs rhs;
  double t0 = 0;
  double y0 = 0;   // f(t0)
  double yp0 = 0;  // f'(t0)
  double t_end = 1;
  double step = 1e-3;
};

struct TrajectoryPoint {
  double t = 0;
  double f = 0;
  double fp = 0;
};

using Trajectory = std::vector<TrajectoryPoint>;

inline constexpr double kDegenerateDenominator = 1e-8;
inline constexpr double kMaxLocalError = 1e-3;

// f'' as a function of (f, f'); throws DegenerateODE when the denominator
// magnitude falls below kDegenerateDenominator.
inline double second_derivative(const OdeRhs& rhs, double t, double f, double fp) {
  if (const auto* e = std::get_if<Eq311>(&rhs)) {
    const double den = e->m0 / (2 * e->c3) + f;
    if (!(std::fabs(den) >= kDegenerateDenominator))
      throw DegenerateODE("m0/(2c3) + f vanishes", t);
    return 2 * fp * fp / den;
  }
  const auto& e = std::get<Eq318>(rhs);
  const double den = e.c5 * e.d10 * f + 1;
  if (!(std::fabs(den) >= kDegenerateDenominator))
    throw DegenerateODE("c5*d10*f + 1 vanishes", t);
  return e.c5 * f / den;
}

namespace detail {

struct OdeState {
  double f;
  double fp;
};

inline OdeState rk4_step(const OdeRhs& rhs, double t, OdeState s, double h) {
  auto accel = [&](double tt, double f, double fp) { return second_derivative(rhs, tt, f, fp); };
  const double k1f = s.fp;
  const double k1p = accel(t, s.f, s.fp);
  const double k2f = s.fp + h / 2 * k1p;
  const double k2p = accel(t + h / 2, s.f + h / 2 * k1f, s.fp + h / 2 * k1p);
  const double k3f = s.fp + h / 2 * k2p;
  const double k3p = accel(t + h / 2, s.f + h / 2 * k2f, s.fp + h / 2 * k2p);
  const double k4f = s.fp + h * k3p;
  const double k4p = accel(t + h, s.f + h * k3f, s.fp + h * k3p);
  return {s.f + h / 6 * (k1f + 2 * k2f + 2 * k3f + k4f),
          s.fp + h / 6 * (k1p + 2 * k2p + 2 * k3p + k4p)};
}

inline void validate_rhs(const OdeRhs& rhs) {
  if (const auto* e = std::get_if<Eq311>(&rhs)) {
    if (e->c3 == 0 || !std::isfinite(e->c3) || !std::isfinite(e->m0))
      throw DomainError("Eq311 needs finite c3 != 0 and finite m0");
  } else {
    const auto& q = std::get<Eq318>(rhs);
    if (q.c5 == 0 || !std::isfinite(q.c5) || !std::isfinite(q.d10))
      throw DomainError("Eq318 needs finite c5 != 0 and finite d10");
  }
}

}  // namespace detail

// Classic RK4 on the system (f, f'). The interval is split into
// ceil((t_end - t0) / step) equal steps, so the last node lands on t_end.
// Each step is also repeated as two half steps; if the two results disagree by
// more than kMaxLocalError the step is rejected with StepTooLarge.
inline Trajectory integrate(const IVP& ivp) {
  detail::validate_rhs(ivp.rhs);
  const double span = ivp.t_end - ivp.t0;
  if (!(ivp.step > 0) || !std::isfinite(span) || !(span > 0))
    throw DomainError("integration needs t_end > t0 and step > 0");
  if (ivp.step > span) throw DomainError("step exceeds the integration interval");
  const double raw = span / ivp.step;
  const long n = std::max(1L, static_cast<long>(std::ceil(raw - 1e-9 * raw)));
  const double h = span / static_cast<double>(n);

  Trajectory out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  detail::OdeState s{ivp.y0, ivp.yp0};
  // Probe the initial state so a trajectory starting on the degeneracy fails.
  second_derivative(ivp.rhs, ivp.t0, s.f, s.fp);
  out.push_back({ivp.t0, s.f, s.fp});
  for (long i = 0; i < n; ++i) {
    const double t = ivp.t0 + h * static_cast<double>(i);
    const detail::OdeState full = detail::rk4_step(ivp.rhs, t, s, h);
    const detail::OdeState half = detail::rk4_step(ivp.rhs, t, s, h / 2);
    const detail::OdeState twice = detail::rk4_step(ivp.rhs, t + h / 2, half, h / 2);
    const double err = std::fmax(std::fabs(full.f - twice.f), std::fabs(full.fp - twice.fp));
    if (!(err <= kMaxLocalError))
      throw StepTooLarge("local error estimate " + format_number(err) + " exceeds " +
                         format_number(kMaxLocalError) + " at t=" + format_number(t));
    s = full;
    const double t_next = i + 1 == n ? ivp.t_end : ivp.t0 + h * static_cast<double>(i + 1);
    out.push_back({t_next, s.f, s.fp});
  }
  return out;
}

// Cubic Hermite interpolation of (f, f') between trajectory nodes.
inline TrajectoryPoint sample(const Trajectory& traj, double t) {
  if (traj.empty()) throw DomainError("empty trajectory");
  if (t < traj.front().t || t > traj.back().t) throw DomainError("t outside trajectory");
  auto it = std::lower_bound(traj.begin(), traj.end(), t,
                             [](const TrajectoryPoint& p, double v) { return p.t < v; });
  if (it == traj.begin()) return traj.front();
  if (it->t == t) return *it;
  const TrajectoryPoint& b = *it;
  const TrajectoryPoint& a = *(it - 1);
  const double h = b.t - a.t;
  const double s = (t - a.t) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double f = (2 * s3 - 3 * s2 + 1) * a.f + (s3 - 2 * s2 + s) * h * a.fp +
                   (-2 * s3 + 3 * s2) * b.f + (s3 - s2) * h * b.fp;
  const double fp = ((6 * s2 - 6 * s) * a.f + (3 * s2 - 4 * s + 1) * h * a.fp +
                     (-6 * s2 + 6 * s) * b.f + (3 * s2 - 2 * s) * h * b.fp) /
                    h;
  return {t, f, fp};
}

// f(x) = -(1/(c4 x + d9) + m0/(2 c3)), the closed-form solution of Eq311.
inline double closed_form_312(double c3, double c4, double d9, double m0, double x) {
  if (c3 == 0 || c4 == 0) throw DomainError("c3 and c4 must be nonzero");
  const double u = c4 * x + d9;
  if (u == 0) throw SingularPoint("c4*x + d9 vanishes at x=" + format_number(x));
  return -(1 / u + m0 / (2 * c3));
}

struct ClosedFormJet {
  double f = 0;
  double fp = 0;
  double fpp = 0;
};

// closed_form_312 with its first two derivatives.
inline ClosedFormJet closed_form_312_jet(double c3, double c4, double d9, double m0, double x) {
  const double f = closed_form_312(c3, c4, d9, m0, x);
  const double u = c4 * x + d9;
  return {f, c4 / (u * u), -2 * c4 * c4 / (u * u * u)};
}

// (m0/(2 c3) + f) f'' - 2 f'^2.
inline double check_311_residual(double c3, double m0, double f, double fp, double fpp) {
  return (m0 / (2 * c3) + f) * fpp - 2 * fp * fp;
}

// Exact solution of f'' = c5 f (Eq318 with d10 = 0) through (t0, f0, fp0).
inline TrajectoryPoint closed_form_318_linear(double c5, double t0, double f0, double fp0,
                                              double t) {
  if (c5 == 0) throw DomainError("c5 must be nonzero");
  const double w = std::sqrt(std::fabs(c5));
  const double s = t - t0;
  if (c5 > 0) {
    return {t, f0 * std::cosh(w * s) + fp0 / w * std::sinh(w * s),
            f0 * w * std::sinh(w * s) + fp0 * std::cosh(w * s)};
  }
  return {t, f0 * std::cos(w * s) + fp0 / w * std::sin(w * s),
          -f0 * w * std::sin(w * s) + fp0 * std::cos(w * s)};
}

}  // namespace isowein
