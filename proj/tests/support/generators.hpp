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
#include <random>
#include <vector>

#include "gallery_guard/guard_graph.hpp"
#include "gallery_guard/scene.hpp"

namespace gg::testing {

using Rng = std::mt19937_64;

// Star-shaped about the origin, counterclockwise, radii in [rmin, rmax].
std::vector<Point> random_star_polygon(Rng& rng, int n, double rmin = 30.0, double rmax = 100.0);

// Random points untangled by 2-opt moves; counterclockwise.
std::vector<Point> random_two_opt_polygon(Rng& rng, int n, double extent = 100.0);

// Either generator, chosen at random.
std::vector<Point> random_simple_polygon(Rng& rng, int n);

std::vector<Point> convex_polygon(int n, double radius = 100.0, Point center = {0, 0});

// Outer star polygon with `holes` small convex holes.
PolygonScene random_scene_with_holes(Rng& rng, int outer_n, int holes);

PolygonScene l_shape();
PolygonScene u_shape();
PolygonScene square(double side = 10.0);

// Synthetic guard adjacency graph: each triangle touches 1 to 3 guards,
// each at a random endpoint; opposite-endpoint pairs get random positive
// distances. Triangle ids are 0..triangles-1.
GuardAdjacencyGraph random_gag(Rng& rng, int triangles, int guards);

// All triangulations of the convex polygon lo..hi, as vertex triples.
std::vector<std::vector<std::array<int, 3>>> convex_triangulations(int lo, int hi);

}  // namespace gg::testing
