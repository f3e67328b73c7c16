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

#include <utility>
#include <vector>

#include "gallery_guard/geometry.hpp"
#include "gallery_guard/scene.hpp"

namespace gg {

struct GeodesicPath {
  std::vector<Point> waypoints;
  double length = 0.0;
};

struct VisibilityGraph {
  std::vector<Point> nodes;  // scene vertices (flat order) then extras
  std::vector<std::vector<std::pair<int, double>>> adj;

  bool has_edge(int u, int v) const;
};

// Read-only query structure over a validated scene. All distances are
// geodesic in the closed scene; shortest paths bend only at reflex vertices.
class Environment {
 public:
  explicit Environment(PolygonScene scene);

  const PolygonScene& scene() const { return scene_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<std::pair<Point, Point>>& edges() const { return edges_; }
  const Box& box() const { return box_; }
  double diameter() const { return box_.diagonal(); }

  bool contains(Point p) const;
  Location locate(Point p) const;

  // True iff the closed segment lies in the closed scene. Grazing the
  // boundary counts as clear.
  bool segment_clear(Point a, Point b) const;

  // Reflex vertices used as shortest-path waypoints.
  const std::vector<int>& reflex() const { return reflex_; }
  Point reflex_point(int k) const { return vertices_[reflex_[k]]; }
  // Geodesic distance between reflex waypoints k and m.
  double reflex_distance(int k, int m) const { return dist_[k][m]; }
  // Indices k into reflex() visible from p.
  std::vector<int> visible_reflex(Point p) const;

  double distance(Point a, Point b) const;
  GeodesicPath geodesic(Point a, Point b) const;

  VisibilityGraph build_visibility_graph(const std::vector<Point>& extra) const;

  // Nearest point of the closed scene.
  Point project_inside(Point p) const;

 private:
  PolygonScene scene_;
  std::vector<Point> vertices_;
  std::vector<std::pair<Point, Point>> edges_;
  Box box_;
  std::vector<int> reflex_;
  std::vector<std::vector<double>> dist_;
  std::vector<std::vector<int>> next_;

  void require_inside(Point p, const char* what) const;
};

}  // namespace gg
