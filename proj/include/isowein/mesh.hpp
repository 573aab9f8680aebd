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

// Triangulated height-field meshes over a GridDomain and Wavefront OBJ output.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <variant>
#include <vector>

#include "isowein/expr.hpp"
#include "isowein/grid.hpp"
#include "isowein/point.hpp"

namespace isowein {

struct Mesh {
  std::vector<Point3> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;  // 0-based vertex indices
};

namespace detail {

// True when the triangle spans a singular locus without having a vertex
// inside the exclusion band.
inline bool crosses_locus(const std::array<Point2, 3>& tri, const SingularLocus& locus) {
  if (const auto* line = std::get_if<VerticalLine>(&locus)) {
    const double lo = std::fmin(tri[0].x, std::fmin(tri[1].x, tri[2].x));
    const double hi = std::fmax(tri[0].x, std::fmax(tri[1].x, tri[2].x));
    return lo < line->x && line->x < hi;
  }
  const Point2 q = std::get<SingularPointLocus>(locus).at;
  auto side = [&](Point2 a, Point2 b) { return (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x); };
  const double s0 = side(tri[0], tri[1]);
  const double s1 = side(tri[1], tri[2]);
  const double s2 = side(tri[2], tri[0]);
  return (s0 >= 0 && s1 >= 0 && s2 >= 0) || (s0 <= 0 && s1 <= 0 && s2 <= 0);
}

}  // namespace detail

// One vertex per surviving grid node (row-major: y outer, x inner); each grid
// cell becomes two triangles. Triangles touching an excluded node, or lying
// across a singular locus, are skipped.
inline Mesh build_mesh(const Expr& z, const GridDomain& d) {
  d.validate();
  constexpr std::size_t kMissing = static_cast<std::size_t>(-1);
  const auto nx = static_cast<std::size_t>(d.nx);
  const auto ny = static_cast<std::size_t>(d.ny);
  std::vector<std::size_t> index(nx * ny, kMissing);
  Mesh mesh;
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const Point2 p = d.node(static_cast<int>(i), static_cast<int>(j));
      if (d.excluded(p)) continue;
      index[j * nx + i] = mesh.vertices.size();
      mesh.vertices.push_back({p.x, p.y, evaluate(z, p.x, p.y)});
    }
  }
  if (mesh.vertices.empty()) throw EmptyDomain("no grid node survives singularity exclusion");

  auto emit = [&](std::array<std::size_t, 3> nodes) {
    std::array<std::size_t, 3> tri{};
    std::array<Point2, 3> xy{};
    for (std::size_t k = 0; k < 3; ++k) {
      tri[k] = index[nodes[k]];
      if (tri[k] == kMissing) return;
      const Point3& v = mesh.vertices[tri[k]];
      xy[k] = {v.x, v.y};
    }
    for (const auto& locus : d.singular_loci) {
      if (detail::crosses_locus(xy, locus)) return;
    }
    mesh.triangles.push_back(tri);
  };
  for (std::size_t j = 0; j + 1 < ny; ++j) {
    for (std::size_t i = 0; i + 1 < nx; ++i) {
      const std::size_t a = j * nx + i;
      const std::size_t b = a + 1;
      const std::size_t c = b + nx;
      const std::size_t e = a + nx;
      emit({a, b, c});
      emit({a, c, e});
    }
  }
  return mesh;
}

// "v x y z" lines followed by "f i j k" lines (1-based); no normals or UVs.
inline void write_obj(std::ostream& os, const Mesh& mesh) {
  for (const Point3& v : mesh.vertices) {
    os << "v " << format_number(v.x) << ' ' << format_number(v.y) << ' ' << format_number(v.z)
       << '\n';
  }
  for (const auto& t : mesh.triangles) {
    os << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  }
}

}  // namespace isowein
