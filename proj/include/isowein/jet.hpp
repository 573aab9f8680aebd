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

// Second-order truncated Taylor arithmetic.
//
// BasicJet2 carries a bivariate function value together with its first and
// second partials at one point; BasicJet1 does the same for a univariate
// factor. Every operation propagates the chain and product rules exactly to
// second order, so polynomial surfaces come out with exact Hessians.
//
// A single mixed slot (dxy) is kept: inputs are assumed C^2.

#pragma once

#include <cmath>
#include <cstdlib>

#include "isowein/errors.hpp"

namespace isowein {

template <class T>
struct BasicJet2 {
  T v{};
  T dx{};
  T dy{};
  T dxx{};
  T dxy{};
  T dyy{};

  friend constexpr bool operator==(const BasicJet2&, const BasicJet2&) = default;
};

template <class T>
struct BasicJet1 {
  T v{};
  T d{};
  T dd{};

  friend constexpr bool operator==(const BasicJet1&, const BasicJet1&) = default;
};

using Jet2 = BasicJet2<double>;
using Jet1 = BasicJet1<double>;

template <class T = double>
constexpr BasicJet2<T> seed_x(T x0) {
  return {x0, T(1), T(0), T(0), T(0), T(0)};
}

template <class T = double>
constexpr BasicJet2<T> seed_y(T y0) {
  return {y0, T(0), T(1), T(0), T(0), T(0)};
}

template <class T = double>
constexpr BasicJet2<T> seed_const(T c) {
  return {c, T(0), T(0), T(0), T(0), T(0)};
}

template <class T = double>
constexpr BasicJet1<T> seed_var(T t0) {
  return {t0, T(1), T(0)};
}

template <class T = double>
constexpr BasicJet1<T> seed_const1(T c) {
  return {c, T(0), T(0)};
}

namespace detail {

template <class T>
bool all_finite(const BasicJet2<T>& j) {
  using std::isfinite;
  return isfinite(j.v) && isfinite(j.dx) && isfinite(j.dy) && isfinite(j.dxx) &&
         isfinite(j.dxy) && isfinite(j.dyy);
}

template <class T>
bool all_finite(const BasicJet1<T>& j) {
  using std::isfinite;
  return isfinite(j.v) && isfinite(j.d) && isfinite(j.dd);
}

template <class J>
const J& checked(const J& j, const char* op) {
  if (!all_finite(j)) throw OverflowError(std::string("non-finite jet produced by ") + op);
  return j;
}

// Composes phi(u) with the jet u, given phi, phi' and phi'' at u.v.
template <class T>
BasicJet2<T> compose(const BasicJet2<T>& u, T f0, T f1, T f2) {
  return {f0,
          f1 * u.dx,
          f1 * u.dy,
          f2 * u.dx * u.dx + f1 * u.dxx,
          f2 * u.dx * u.dy + f1 * u.dxy,
          f2 * u.dy * u.dy + f1 * u.dyy};
}

template <class T>
BasicJet1<T> compose(const BasicJet1<T>& u, T f0, T f1, T f2) {
  return {f0, f1 * u.d, f2 * u.d * u.d + f1 * u.dd};
}

}  // namespace detail

// ---- bivariate ring operations -------------------------------------------

template <class T>
BasicJet2<T> operator-(const BasicJet2<T>& a) {
  return {-a.v, -a.dx, -a.dy, -a.dxx, -a.dxy, -a.dyy};
}

template <class T>
BasicJet2<T> operator+(const BasicJet2<T>& a, const BasicJet2<T>& b) {
  return detail::checked(BasicJet2<T>{a.v + b.v, a.dx + b.dx, a.dy + b.dy, a.dxx + b.dxx,
                                      a.dxy + b.dxy, a.dyy + b.dyy},
                         "add");
}

template <class T>
BasicJet2<T> operator-(const BasicJet2<T>& a, const BasicJet2<T>& b) {
  return detail::checked(BasicJet2<T>{a.v - b.v, a.dx - b.dx, a.dy - b.dy, a.dxx - b.dxx,
                                      a.dxy - b.dxy, a.dyy - b.dyy},
                         "sub");
}

// Terms are grouped pairwise so that a*b and b*a agree bit for bit.
template <class T>
BasicJet2<T> operator*(const BasicJet2<T>& a, const BasicJet2<T>& b) {
  BasicJet2<T> r;
  r.v = a.v * b.v;
  r.dx = a.dx * b.v + a.v * b.dx;
  r.dy = a.dy * b.v + a.v * b.dy;
  r.dxx = (a.dxx * b.v + a.v * b.dxx) + T(2) * (a.dx * b.dx);
  r.dxy = (a.dxy * b.v + a.v * b.dxy) + (a.dx * b.dy + a.dy * b.dx);
  r.dyy = (a.dyy * b.v + a.v * b.dyy) + T(2) * (a.dy * b.dy);
  return detail::checked(r, "mul");
}

template <class T>
BasicJet2<T> reciprocal(const BasicJet2<T>& a) {
  if (a.v == T(0)) throw DivisionByZero("division by zero");
  const T inv = T(1) / a.v;
  return detail::checked(detail::compose(a, inv, -inv * inv, T(2) * inv * inv * inv),
                         "div");
}

template <class T>
BasicJet2<T> operator/(const BasicJet2<T>& a, const BasicJet2<T>& b) {
  return a * reciprocal(b);
}

// ---- univariate ring operations ------------------------------------------

template <class T>
BasicJet1<T> operator-(const BasicJet1<T>& a) {
  return {-a.v, -a.d, -a.dd};
}

template <class T>
BasicJet1<T> operator+(const BasicJet1<T>& a, const BasicJet1<T>& b) {
  return detail::checked(BasicJet1<T>{a.v + b.v, a.d + b.d, a.dd + b.dd}, "add");
}

template <class T>
BasicJet1<T> operator-(const BasicJet1<T>& a, const BasicJet1<T>& b) {
  return detail::checked(BasicJet1<T>{a.v - b.v, a.d - b.d, a.dd - b.dd}, "sub");
}

template <class T>
BasicJet1<T> operator*(const BasicJet1<T>& a, const BasicJet1<T>& b) {
  return detail::checked(BasicJet1<T>{a.v * b.v, a.d * b.v + a.v * b.d,
                                      (a.dd * b.v + a.v * b.dd) + T(2) * (a.d * b.d)},
                         "mul");
}

template <class T>
BasicJet1<T> reciprocal(const BasicJet1<T>& a) {
  if (a.v == T(0)) throw DivisionByZero("division by zero");
  const T inv = T(1) / a.v;
  return detail::checked(detail::compose(a, inv, -inv * inv, T(2) * inv * inv * inv),
                         "div");
}

template <class T>
BasicJet1<T> operator/(const BasicJet1<T>& a, const BasicJet1<T>& b) {
  return a * reciprocal(b);
}

// ---- elementary functions (shared by both jet kinds) ---------------------

template <class J>
concept SecondOrderJet = requires(const J& j) {
  j.v;
  detail::compose(j, j.v, j.v, j.v);
};

template <SecondOrderJet J>
J exp(const J& a) {
  const auto e = std::exp(a.v);
  return detail::checked(detail::compose(a, e, e, e), "exp");
}

template <SecondOrderJet J>
J ln(const J& a) {
  if (!(a.v > 0)) throw DomainError("ln of a non-positive value");
  const auto inv = 1 / a.v;
  return detail::checked(detail::compose(a, std::log(a.v), inv, -inv * inv), "ln");
}

template <SecondOrderJet J>
J sin(const J& a) {
  const auto s = std::sin(a.v);
  return detail::checked(detail::compose(a, s, std::cos(a.v), -s), "sin");
}

template <SecondOrderJet J>
J cos(const J& a) {
  const auto c = std::cos(a.v);
  return detail::checked(detail::compose(a, c, -std::sin(a.v), -c), "cos");
}

template <SecondOrderJet J>
J sqrt(const J& a) {
  if (!(a.v > 0)) throw DomainError("sqrt of a non-positive value");
  const auto r = std::sqrt(a.v);
  const auto d1 = 1 / (2 * r);
  return detail::checked(detail::compose(a, r, d1, -d1 / (2 * a.v)), "sqrt");
}

// a^r for real r; the base must be positive.
template <SecondOrderJet J>
J pow_real(const J& a, double r) {
  if (!(a.v > 0)) throw DomainError("real power of a non-positive value");
  const auto p = std::pow(a.v, r);
  const auto d1 = r * std::pow(a.v, r - 1);
  const auto d2 = r * (r - 1) * std::pow(a.v, r - 2);
  return detail::checked(detail::compose(a, p, d1, d2), "pow");
}

// a^n by repeated squaring with jet multiplication, so polynomials stay exact.
template <SecondOrderJet J>
J pow_int(const J& a, long n) {
  if (n == 0) {
    J one{};
    one.v = 1;
    return one;
  }
  J result{};
  J base = a;
  unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
  bool first = true;
  while (k != 0) {
    if (k & 1UL) {
      result = first ? base : result * base;
      first = false;
    }
    k >>= 1UL;
    if (k != 0) base = base * base;
  }
  return n < 0 ? reciprocal(result) : result;
}

}  // namespace isowein
