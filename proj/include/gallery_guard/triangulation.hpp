// Copyright 2026 The gallery-guard Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "gallery_guard/geometry.hpp"

namespace gg {

using VertexPair = std::pair<int, int>;  // first < second

inline VertexPair make_pair_sorted(int a, int b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

// Triangulation of a (weakly) simple counterclockwise polygon. Vertices are
// identified by index, so the two copies of a cut-wall vertex are distinct.
struct Triangulation {
  std::vector<Point> vertices;
  std::vector<std::array<int, 3>> triangles;  // counterclockwise
  std::vector<VertexPair> diagonals;          // internal edges, sorted
  // neighbors[t][k] is the triangle across edge (t[k], t[k+1]), or -1.
  std::vector<std::array<int, 3>> neighbors;

  size_t n() const { return vertices.size(); }
  // Internal diagonals and polygon edges, sorted.
  std::vector<VertexPair> all_edges() const;
  std::vector<std::vector<int>> dual() const;
  double triangle_area(int t) const;
  std::vector<Point> triangle_points(int t) const;
  bool triangle_has_vertex(int t, int v) const;

  // Builds neighbor and diagonal tables from explicit triangles.
  static Triangulation from_triangles(std::vector<Point> vertices,
                                      std::vector<std::array<int, 3>> triangles);
};

// Ear clipping; the ear with the lowest vertex index is clipped first.
// Throws DomainError when no ear exists (non-simple input).
Triangulation triangulate(const std::vector<Point>& polygon);

}  // namespace gg
