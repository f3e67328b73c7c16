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

#include <algorithm>
#include <cmath>
#include <limits>

#include "gallery_guard/tracking.hpp"

namespace gg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double GuardCritical::distance(Point p) const {
  if (!field) return kInf;
  if (u1.contains(p)) return 0.0;
  return field->distance(p);
}

CriticalStructure build_critical(const Environment& env, const Triangulation& tri, const AllocationPlan& plan) {
  CriticalStructure out;
  for (const GuardPlan& gp : plan.guards) {
    if (!gp.allocated) throw DomainError("critical curves need a complete allocation");
    GuardCritical gc;
    gc.guard = gp.guard;
    gc.v1 = gp.v1;
    gc.v2 = gp.v2;
    gc.p1 = tri.vertices[gp.v1];
    gc.p2 = tri.vertices[gp.v2];
    gc.reach = gp.reach;
    gc.u1 = gp.u1;
    if (gp.u1.empty() || gp.u2.empty()) {
      gc.parked = true;
      gc.park_vertex = gp.u1.empty() && !gp.u2.empty() ? gp.v2 : gp.v1;
      gc.park = tri.vertices[gc.park_vertex];
    } else {
      gc.field = std::make_shared<RegionField>(env, gp.u1);
      gc.s_int = gp.u1.edges();
      gc.offset = geodesic_offset(*gc.field, gc.reach);
      gc.band = region_boolean(BooleanOp::kDifference, gc.offset, gc.u1);
      const double tol = 1e-6 * std::max(1.0, gc.reach);
      for (const Edge& e : gc.offset.edges()) {
        const Point mid = e.at(0.5);
        if (!gc.u1.contains(mid) && std::abs(gc.field->distance(mid) - gc.reach) <= tol) gc.s_ext.push_back(e);
      }
    }
    out.guards.push_back(std::move(gc));
  }
  return out;
}

bool CriticalStructure::in_extended(const Triangulation& tri, int g, int t, Point p) const {
  const GuardCritical& gc = guards[g];
  if (gc.parked) return !tri.triangle_has_vertex(t, gc.park_vertex);
  const bool has1 = tri.triangle_has_vertex(t, gc.v1);
  const bool has2 = tri.triangle_has_vertex(t, gc.v2);
  if (has1 == has2) return false;
  if (has2) return gc.distance(p) < gc.reach;
  return !gc.u1.contains(p);
}

ArcRegion CriticalStructure::extended(const Environment& env, const Triangulation& tri, int g, int t) const {
  const GuardCritical& gc = guards[g];
  if (gc.parked) return tri.triangle_has_vertex(t, gc.park_vertex) ? ArcRegion() : scene_region(env);
  const bool has1 = tri.triangle_has_vertex(t, gc.v1);
  const bool has2 = tri.triangle_has_vertex(t, gc.v2);
  if (has1 == has2) return ArcRegion();
  if (has2) return gc.offset;
  return region_boolean(BooleanOp::kDifference, scene_region(env), gc.u1);
}

Point guard_position(const GuardCritical& gc, const std::vector<Point>& intruders) {
  if (gc.parked) return gc.park;
  double nearest = kInf;
  for (Point p : intruders) {
    if (gc.u1.contains(p)) return gc.p1;
    nearest = std::min(nearest, gc.field->distance(p, gc.reach));
  }
  if (nearest >= gc.reach) return gc.p2;
  return lerp(gc.p1, gc.p2, nearest / gc.reach);
}

std::vector<int> covered_by(const Triangulation& tri, const TriangleClasses& classes, int t,
                            const std::vector<Point>& guard_positions, const Deployment& dep, double tol) {
  std::vector<int> out;
  for (int g : classes.guards[t]) {
    const auto [a, b] = dep.guards[g].diag;
    for (int v : {a, b}) {
      if (tri.triangle_has_vertex(t, v) && dist(guard_positions[g], tri.vertices[v]) <= tol) {
        out.push_back(g);
        break;
      }
    }
  }
  return out;
}

std::vector<CoverageCertificate> coverage_certificates(const Environment& env, const Triangulation& tri,
                                                       const TriangleClasses& classes,
                                                       const CriticalStructure& critical) {
  std::vector<CoverageCertificate> out;
  for (int t : classes.nonsafe_triangles()) {
    CoverageCertificate cert;
    cert.triangle = t;
    ArcRegion common = ArcRegion::from_polygon(tri.triangle_points(t));
    for (int g : classes.guards[t]) {
      if (common.empty()) break;
      common = region_boolean(BooleanOp::kIntersection, common, critical.extended(env, tri, g, t));
    }
    cert.common_area = common.empty() ? 0.0 : common.area();
    cert.holds = area_empty(common, tri.triangle_area(t), kEmptyAreaFraction);
    out.push_back(cert);
  }
  return out;
}

std::vector<int> locate_triangles(const Triangulation& tri, Point p, double tol) {
  std::vector<int> out;
  for (size_t t = 0; t < tri.triangles.size(); ++t) {
    const auto pts = tri.triangle_points(static_cast<int>(t));
    bool hit = locate_in_ring(p, pts) != Location::kOutside;
    for (int k = 0; k < 3 && !hit; ++k) hit = point_segment_distance(p, pts[k], pts[(k + 1) % 3]) <= tol;
    if (hit) out.push_back(static_cast<int>(t));
  }
  return out;
}

}  // namespace gg
