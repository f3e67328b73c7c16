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

#include <functional>
#include <random>
#include <vector>

#include "gallery_guard/arc_region.hpp"
#include "gallery_guard/deploy.hpp"
#include "gallery_guard/environment.hpp"
#include "gallery_guard/scene.hpp"

// Reference implementations used only by tests. They avoid the library's
// predicates where practical so that agreement is meaningful.
namespace gg::testing {

bool oracle_point_in_scene(const PolygonScene& scene, Point p);

// Closed segment inside the closed scene: no strict crossing with any edge
// and sampled points inside.
bool oracle_segment_inside(const PolygonScene& scene, Point a, Point b);

// Shortest path on a grid of spacing h whose nodes link to every visible
// node within `reach` cells. Scene vertices are added as extra nodes so that
// paths hugging reflex corners are not rounded off.
class GridOracle {
 public:
  GridOracle(const PolygonScene& scene, double h, int reach = 6);

  double distance(Point a, Point b) const;
  // Geodesic distance between the sets, with membership tests supplied.
  // Boundary samples of each set join the graph as extra terminals.
  double set_distance(const std::function<bool(Point)>& in_a,
                      const std::function<bool(Point)>& in_b,
                      const std::vector<Point>& samples_a = {},
                      const std::vector<Point>& samples_b = {}) const;

 private:
  PolygonScene scene_;
  double h_;
  int reach_;
  double x0_, y0_;
  int nx_, ny_;
  std::vector<char> inside_;
  std::vector<Point> extra_;
  std::vector<std::vector<std::pair<int, double>>> extra_links_;  // grid id, length

  std::vector<double> dijkstra(const std::vector<std::pair<int, double>>& sources) const;
  Point node(int id) const;
  std::vector<std::pair<int, double>> attach(Point p) const;
};

double monte_carlo_area(const std::function<bool(Point)>& inside, const Box& box, int samples,
                        std::mt19937_64& rng);

// d(p, region) from point-to-point geodesics to the region's boundary,
// minimized per edge by dense sampling and golden-section refinement.
double oracle_region_distance(const Environment& env, const ArcRegion& region, Point p);

// Every triangle has a vertex equal to some guard endpoint; a direct scan
// independent of deploy's bookkeeping.
bool scan_domination(const Triangulation& tri, const Deployment& dep);

// Uniform point inside the scene.
Point random_point_in_scene(const PolygonScene& scene, std::mt19937_64& rng);

}  // namespace gg::testing
