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

// Jet evaluation of expression trees.

#pragma once

#include <cmath>

#include "isowein/errors.hpp"
#include "isowein/expr.hpp"
#include "isowein/jet.hpp"
#include "isowein/point.hpp"

namespace isowein {

namespace detail {

// Walks the tree once; `leaf` maps variable nodes to seeded jets.
template <class J, class Leaf>
J eval_jet_walk(const Expr& e, const Leaf& leaf) {
  const Node& n = e.node();
  switch (n.kind) {
    case NodeKind::kConst: {
      J c{};
      c.v = n.value;
      return c;
    }
    case NodeKind::kVarX:
    case NodeKind::kVarY:
      return leaf(n.kind);
    case NodeKind::kNeg:
      return -eval_jet_walk<J>(n.lhs, leaf);
    case NodeKind::kAdd:
      return eval_jet_walk<J>(n.lhs, leaf) + eval_jet_walk<J>(n.rhs, leaf);
    case NodeKind::kSub:
      return eval_jet_walk<J>(n.lhs, leaf) - eval_jet_walk<J>(n.rhs, leaf);
    case NodeKind::kMul:
      return eval_jet_walk<J>(n.lhs, leaf) * eval_jet_walk<J>(n.rhs, leaf);
    case NodeKind::kDiv:
      return eval_jet_walk<J>(n.lhs, leaf) / eval_jet_walk<J>(n.rhs, leaf);
    case NodeKind::kPowInt:
      return pow_int(eval_jet_walk<J>(n.lhs, leaf), n.int_exp);
    case NodeKind::kPowReal:
      return pow_real(eval_jet_walk<J>(n.lhs, leaf), n.value);
    case NodeKind::kExp:
      return isowein::exp(eval_jet_walk<J>(n.lhs, leaf));
    case NodeKind::kLn:
      return isowein::ln(eval_jet_walk<J>(n.lhs, leaf));
    case NodeKind::kSin:
      return isowein::sin(eval_jet_walk<J>(n.lhs, leaf));
    case NodeKind::kCos:
      return isowein::cos(eval_jet_walk<J>(n.lhs, leaf));
    case NodeKind::kSqrt:
      return isowein::sqrt(eval_jet_walk<J>(n.lhs, leaf));
  }
  throw Error("corrupt expression node");
}

}  // namespace detail

// Value, gradient and Hessian of e at p.
inline Jet2 eval_jet(const Expr& e, Point2 p) {
  const Jet2 jx = seed_x(p.x);
  const Jet2 jy = seed_y(p.y);
  return detail::eval_jet_walk<Jet2>(
      e, [&](NodeKind k) { return k == NodeKind::kVarX ? jx : jy; });
}

// (f(t0), f'(t0), f''(t0)) for an expression in a single variable, which may be
// either x or y. Constant expressions are accepted.
inline Jet1 lift_1d(const Expr& e, double t0) {
  const VariableUse use = variables(e);
  if (use.x && use.y) throw MixedVariableError("factor mentions both x and y");
  const Jet1 t = seed_var(t0);
  return detail::eval_jet_walk<Jet1>(e, [&](NodeKind) { return t; });
}

}  // namespace isowein
