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

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gg {

// Raised when an input violates an operation's domain (e.g. a point outside
// the scene).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Absolute incidence tolerance. Defaults to 1e-9; GALLERY_GUARD_EPS overrides
// it once, at first use.
double eps();

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
  Point operator/(double s) const { return {x / s, y / s}; }
  Point operator-() const { return {-x, -y}; }
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point perp(Point a) { return {-a.y, a.x}; }
inline Point lerp(Point a, Point b, double t) { return a + (b - a) * t; }
inline bool near(Point a, Point b, double tol) { return dist(a, b) <= tol; }

// Twice the signed area of (a, b, c); positive for a left turn.
inline double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

// Sign of orient() after snapping points within eps() of line ab to zero.
int orient_sign(Point a, Point b, Point c);

Point closest_on_segment(Point p, Point a, Point b);
double point_segment_distance(Point p, Point a, Point b);
bool on_segment(Point p, Point a, Point b, double tol);

// Interiors cross at a single point with strict sign changes on both sides.
bool segments_properly_cross(Point a, Point b, Point c, Point d);
// Closed segments share at least one point (within eps()).
bool segments_intersect(Point a, Point b, Point c, Point d);

double signed_area(const std::vector<Point>& poly);

enum class Location { kOutside, kBoundary, kInside };

// Ring is closed implicitly; orientation does not matter.
Location locate_in_ring(Point p, const std::vector<Point>& ring);

// Normalizes an angle into [0, 2pi).
double normalize_angle(double a);

struct Box {
  double xmin = 1e300, ymin = 1e300, xmax = -1e300, ymax = -1e300;

  void add(Point p);
  void add(const Box& b);
  bool overlaps(const Box& b, double pad = 0.0) const;
  bool valid() const { return xmin <= xmax && ymin <= ymax; }
  double diagonal() const;
};

}  // namespace gg
