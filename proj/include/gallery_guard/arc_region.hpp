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
#include <optional>
#include <vector>

#include "gallery_guard/geometry.hpp"

namespace gg {

// A line segment or a circular arc. Arcs keep their endpoints explicitly so
// that pieces split at a shared point meet exactly.
struct Edge {
  enum class Kind { kSegment, kArc };

  Kind kind = Kind::kSegment;
  Point a, b;
  Point center;
  double radius = 0.0;
  double start = 0.0;  // angle of a about center
  double sweep = 0.0;  // signed; positive is counterclockwise

  static Edge segment(Point a, Point b);
  static Edge arc(Point center, double radius, double start, double sweep);
  static Edge circle(Point center, double radius);

  bool is_arc() const { return kind == Kind::kArc; }
  Point at(double t) const;
  // Direction of travel at t (not normalized).
  Point tangent(double t) const;
  double length() const;
  Box bbox() const;
  Edge reversed() const;
  // Piece over [t0, t1] whose endpoints are forced to pa and pb.
  Edge sub(double t0, double t1, Point pa, Point pb) const;
  // Parameter of p if it lies on the edge within tol.
  std::optional<double> param_of(Point p, double tol) const;
  double distance_to(Point p) const;
};

// Region bounded by segments and circular arcs, stored as a set of oriented
// boundary edges with the interior on their left.
class ArcRegion {
 public:
  ArcRegion() = default;
  explicit ArcRegion(std::vector<Edge> edges);
  static ArcRegion from_polygon(const std::vector<Point>& ring);

  const std::vector<Edge>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }
  double area() const;
  // Strict interior by nonzero winding; points on the boundary are unreliable.
  bool contains(Point p) const;
  bool on_boundary(Point p, double tol) const;
  double boundary_distance(Point p) const;
  Box bbox() const;
  // Chains edges into closed loops by endpoint matching.
  std::vector<std::vector<Edge>> loops() const;
  // Uniform samples along the boundary, at least one per edge.
  std::vector<Point> sample_boundary(int count) const;
  // Edge endpoints.
  std::vector<Point> corners() const;

 private:
  std::vector<Edge> edges_;
};

// Closed edges share a point (within tol).
bool edges_intersect(const Edge& e, const Edge& f, double tol);

// Closures of the two regions share a point (within tol).
bool regions_touch(const ArcRegion& a, const ArcRegion& b, double tol);

using RegionPredicate = std::function<bool(Point)>;

// Boundary of {p : inside(p)}, assuming it is contained in the union of the
// candidate curves. Candidates are split at all mutual intersections and each
// piece is kept when the predicate differs on its two sides.
ArcRegion extract_region(const std::vector<Edge>& candidates, const RegionPredicate& inside);

enum class BooleanOp { kUnion, kIntersection, kDifference, kComplementWithin };

// kComplementWithin returns b \ a (b is typically a triangle).
ArcRegion region_boolean(BooleanOp op, const ArcRegion& a, const ArcRegion& b);
ArcRegion region_union(const std::vector<ArcRegion>& parts);

// Area below which a region is treated as empty relative to a reference area.
bool area_empty(const ArcRegion& r, double reference_area, double rel = 1e-9);

}  // namespace gg
