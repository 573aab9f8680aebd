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

// Rectangular sampling domains and residual statistics.

#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <variant>
#include <vector>

#include "isowein/errors.hpp"
#include "isowein/point.hpp"

namespace isowein {

// The line x = x0.
struct VerticalLine {
  double x = 0;
};

struct SingularPointLocus {
  Point2 at;
};

using SingularLocus = std::variant<VerticalLine, SingularPointLocus>;

inline double distance_to(const SingularLocus& locus, Point2 p) {
  if (const auto* line = std::get_if<VerticalLine>(&locus)) return std::fabs(p.x - line->x);
  const Point2 q = std::get<SingularPointLocus>(locus).at;
  return std::hypot(p.x - q.x, p.y - q.y);
}

struct GridDomain {
  double x_min = -1;
  double x_max = 1;
  double y_min = -1;
  double y_max = 1;
  int nx = 101;
  int ny = 101;
  double exclusion_radius = 1e-2;
  std::vector<SingularLocus> singular_loci;

  void validate() const {
    if (!(x_min < x_max) || !(y_min < y_max)) throw EmptyDomain("grid bounds are empty");
    if (nx < 2 || ny < 2) throw EmptyDomain("grid needs at least 2 nodes per axis");
    if (!(exclusion_radius >= 0)) throw EmptyDomain("negative exclusion radius");
  }

  double x_at(int i) const { return x_min + (x_max - x_min) * i / (nx - 1); }
  double y_at(int j) const { return y_min + (y_max - y_min) * j / (ny - 1); }
  Point2 node(int i, int j) const { return {x_at(i), y_at(j)}; }

  // Nodes within exclusion_radius of a declared locus are dropped. With a zero
  // radius, only nodes exactly on a locus are dropped.
  bool excluded(Point2 p) const {
    for (const auto& locus : singular_loci) {
      if (distance_to(locus, p) <= exclusion_radius) return true;
    }
    return false;
  }

  // Surviving nodes in row-major order (y outer, x inner).
  std::vector<Point2> surviving_nodes() const {
    validate();
    std::vector<Point2> out;
    out.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        const Point2 p = node(i, j);
        if (!excluded(p)) out.push_back(p);
      }
    }
    if (out.empty()) throw EmptyDomain("no grid node survives singularity exclusion");
    return out;
  }
};

struct ResidualReport {
  long n_samples = 0;
  double max_abs = 0;
  double mean_abs = 0;
  double std_dev = 0;  // population standard deviation of the signed values
  Point2 worst_point;
};

// Sequential accumulation; feeding the same values in the same order yields a
// bit-identical report.
class ResidualAccumulator {
 public:
  void add(double r, Point2 p) {
    ++n_;
    const double a = std::fabs(r);
    if (n_ == 1 || a > max_abs_) {
      max_abs_ = a;
      worst_ = p;
    }
    sum_abs_ += a;
    const double delta = r - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (r - mean_);
  }

  long count() const { return n_; }

  ResidualReport report() const {
    if (n_ == 0) throw EmptyDomain("no samples");
    ResidualReport rep;
    rep.n_samples = n_;
    rep.max_abs = max_abs_;
    rep.mean_abs = std::fmin(sum_abs_ / static_cast<double>(n_), max_abs_);
    rep.std_dev = std::sqrt(m2_ / static_cast<double>(n_));
    rep.worst_point = worst_;
    return rep;
  }

 private:
  long n_ = 0;
  double max_abs_ = 0;
  double sum_abs_ = 0;
  double mean_ = 0;
  double m2_ = 0;
  Point2 worst_;
};

// Applies `residual` at every surviving node of `d`.
inline ResidualReport scan_nodes(const GridDomain& d,
                                 const std::function<double(Point2)>& residual) {
  ResidualAccumulator acc;
  for (const Point2& p : d.surviving_nodes()) acc.add(residual(p), p);
  return acc.report();
}

}  // namespace isowein
