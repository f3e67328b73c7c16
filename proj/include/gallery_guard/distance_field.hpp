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

#include <limits>
#include <vector>

#include "gallery_guard/arc_region.hpp"
#include "gallery_guard/environment.hpp"

namespace gg {

// Geodesic distance from points of the scene to a fixed closed region Q.
// A shortest path to Q is straight to a critical point of the boundary of Q
// (edge endpoint, perpendicular foot, radial projection) or first bends at a
// reflex vertex v, whose own distance to Q is precomputed as weight(v).
class RegionField {
 public:
  RegionField(const Environment& env, ArcRegion region);

  const Environment& env() const { return *env_; }
  const ArcRegion& region() const { return region_; }

  // Distance over straight clear segments only; +inf if none.
  double direct(Point p) const;
  // d(p, Q). Values above cutoff may be reported as +inf.
  double distance(Point p, double cutoff = std::numeric_limits<double>::infinity()) const;
  // Indexed like Environment::reflex().
  const std::vector<double>& weights() const { return weights_; }

 private:
  const Environment* env_;
  ArcRegion region_;
  Box box_;
  std::vector<double> weights_;
  double tol_;

  bool in_region(Point p) const;
  void direct_candidates(Point p, std::vector<std::pair<double, Point>>& out) const;
};

// Geodesic distance between closed regions; 0 iff their closures meet.
double set_distance(const Environment& env, const ArcRegion& a, const ArcRegion& b);
// Same, reusing prebuilt fields over one environment.
double set_distance(const RegionField& fa, const RegionField& fb);

// Curves that contain the level set {d(., Q) = dist}, plus the scene edges.
std::vector<Edge> offset_generators(const RegionField& field, double dist);

// {p in scene : d(p, Q) <= dist}.
ArcRegion geodesic_offset(const RegionField& field, double dist);
ArcRegion geodesic_offset(const Environment& env, const ArcRegion& region, double dist);

// {p in within : d(p, Q) > dist}; within must lie in the scene.
ArcRegion outside_offset(const RegionField& field, double dist, const ArcRegion& within);

// The scene itself as a region.
ArcRegion scene_region(const Environment& env);

}  // namespace gg
