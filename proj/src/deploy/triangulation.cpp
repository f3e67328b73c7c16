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

#include "gallery_guard/triangulation.hpp"

#include <algorithm>
#include <map>

namespace gg {

namespace {

bool in_cone(Point prev, Point v, Point next, Point q) {
  if (orient(prev, v, next) > 0) {
    return orient_sign(v, next, q) > 0 && orient_sign(prev, v, q) > 0;
  }
  return orient_sign(v, next, q) > 0 || orient_sign(prev, v, q) > 0;
}

bool strictly_inside_triangle(Point p, Point a, Point b, Point c) {
  return orient_sign(a, b, p) > 0 && orient_sign(b, c, p) > 0 && orient_sign(c, a, p) > 0;
}

}  // namespace

std::vector<VertexPair> Triangulation::all_edges() const {
  std::vector<VertexPair> edges = diagonals;
  for (size_t i = 0; i < vertices.size(); ++i) {
    edges.push_back(make_pair_sorted(static_cast<int>(i), static_cast<int>((i + 1) % vertices.size())));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<std::vector<int>> Triangulation::dual() const {
  std::vector<std::vector<int>> adj(triangles.size());
  for (size_t t = 0; t < triangles.size(); ++t) {
    for (int nb : neighbors[t]) {
      if (nb >= 0) adj[t].push_back(nb);
    }
    std::sort(adj[t].begin(), adj[t].end());
  }
  return adj;
}

double Triangulation::triangle_area(int t) const {
  const auto& tri = triangles[t];
  return 0.5 * orient(vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]);
}

std::vector<Point> Triangulation::triangle_points(int t) const {
  const auto& tri = triangles[t];
  return {vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]};
}

bool Triangulation::triangle_has_vertex(int t, int v) const {
  const auto& tri = triangles[t];
  return tri[0] == v || tri[1] == v || tri[2] == v;
}

Triangulation Triangulation::from_triangles(std::vector<Point> vertices,
                                            std::vector<std::array<int, 3>> triangles) {
  Triangulation tri;
  tri.vertices = std::move(vertices);
  tri.triangles = std::move(triangles);
  const int n = static_cast<int>(tri.vertices.size());
  std::map<VertexPair, std::vector<std::pair<int, int>>> by_edge;  // (triangle, slot)
  for (size_t t = 0; t < tri.triangles.size(); ++t) {
    auto& tv = tri.triangles[t];
    if (orient(tri.vertices[tv[0]], tri.vertices[tv[1]], tri.vertices[tv[2]]) < 0) {
      std::swap(tv[1], tv[2]);
    }
    for (int k = 0; k < 3; ++k) {
      by_edge[make_pair_sorted(tv[k], tv[(k + 1) % 3])].push_back({static_cast<int>(t), k});
    }
  }
  tri.neighbors.assign(tri.triangles.size(), {-1, -1, -1});
  for (const auto& [edge, owners] : by_edge) {
    if (owners.size() == 2) {
      tri.neighbors[owners[0].first][owners[0].second] = owners[1].first;
      tri.neighbors[owners[1].first][owners[1].second] = owners[0].first;
    }
    const bool boundary = (edge.second - edge.first == 1) || (edge.first == 0 && edge.second == n - 1);
    if (!boundary) tri.diagonals.push_back(edge);
  }
  std::sort(tri.diagonals.begin(), tri.diagonals.end());
  return tri;
}

Triangulation triangulate(const std::vector<Point>& polygon) {
  const int n = static_cast<int>(polygon.size());
  if (n < 3) throw DomainError("triangulate requires at least 3 vertices");
  if (signed_area(polygon) <= 0) throw DomainError("triangulate requires a counterclockwise polygon");
  std::vector<int> ring(n);
  for (int i = 0; i < n; ++i) ring[i] = i;
  std::vector<std::array<int, 3>> tris;
  const double tol = eps();

  auto is_ear = [&](size_t pos) {
    const size_t m = ring.size();
    const int ip = ring[(pos + m - 1) % m];
    const int ic = ring[pos];
    const int in = ring[(pos + 1) % m];
    const Point a = polygon[ip], b = polygon[ic], c = polygon[in];
    if (orient_sign(a, b, c) <= 0) return false;
    for (size_t k = 0; k < m; ++k) {
      const int iv = ring[k];
      if (iv == ip || iv == ic || iv == in) continue;
      const Point v = polygon[iv];
      if (near(v, a, tol) || near(v, b, tol) || near(v, c, tol)) continue;
      if (strictly_inside_triangle(v, a, b, c)) return false;
      if (on_segment(v, a, c, tol)) return false;
    }
    for (size_t k = 0; k < m; ++k) {
      const Point e0 = polygon[ring[k]];
      const Point e1 = polygon[ring[(k + 1) % m]];
      if (segments_properly_cross(a, c, e0, e1)) return false;
    }
    if (m > 3) {
      const Point pp = polygon[ring[(pos + m - 2) % m]];
      const Point nn = polygon[ring[(pos + 2) % m]];
      if (!in_cone(pp, a, b, c) || !in_cone(b, c, nn, a)) return false;
    }
    return true;
  };

  while (ring.size() > 3) {
    size_t best = ring.size();
    for (size_t pos = 0; pos < ring.size(); ++pos) {
      if (is_ear(pos) && (best == ring.size() || ring[pos] < ring[best])) best = pos;
    }
    if (best == ring.size()) throw DomainError("triangulate found no ear; polygon is not simple");
    const size_t m = ring.size();
    tris.push_back({ring[(best + m - 1) % m], ring[best], ring[(best + 1) % m]});
    ring.erase(ring.begin() + best);
  }
  if (orient_sign(polygon[ring[0]], polygon[ring[1]], polygon[ring[2]]) <= 0) {
    throw DomainError("triangulate left a degenerate final triangle");
  }
  tris.push_back({ring[0], ring[1], ring[2]});
  return Triangulation::from_triangles(polygon, std::move(tris));
}

}  // namespace gg
