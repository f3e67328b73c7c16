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

#include "gallery_guard/geometry.hpp"

#include <algorithm>
#include <cstdlib>

namespace gg {

double eps() {
  static const double value = [] {
    const char* env = std::getenv("GALLERY_GUARD_EPS");
    if (env == nullptr) return 1e-9;
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || !(v > 0.0) || !std::isfinite(v)) return 1e-9;
    return v;
  }();
  return value;
}

int orient_sign(Point a, Point b, Point c) {
  const double len = dist(a, b);
  const double o = orient(a, b, c);
  if (len == 0.0) return 0;
  if (std::abs(o) <= eps() * len) return 0;
  return o > 0 ? 1 : -1;
}

Point closest_on_segment(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return a;
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return a + ab * t;
}

double point_segment_distance(Point p, Point a, Point b) {
  return dist(p, closest_on_segment(p, a, b));
}

bool on_segment(Point p, Point a, Point b, double tol) {
  return point_segment_distance(p, a, b) <= tol;
}

bool segments_properly_cross(Point a, Point b, Point c, Point d) {
  const int o1 = orient_sign(a, b, c);
  const int o2 = orient_sign(a, b, d);
  const int o3 = orient_sign(c, d, a);
  const int o4 = orient_sign(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool segments_intersect(Point a, Point b, Point c, Point d) {
  if (segments_properly_cross(a, b, c, d)) return true;
  const double tol = eps();
  return on_segment(c, a, b, tol) || on_segment(d, a, b, tol) ||
         on_segment(a, c, d, tol) || on_segment(b, c, d, tol);
}

double signed_area(const std::vector<Point>& poly) {
  double s = 0.0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) s += cross(poly[i], poly[(i + 1) % n]);
  return 0.5 * s;
}

Location locate_in_ring(Point p, const std::vector<Point>& ring) {
  const size_t n = ring.size();
  const double tol = eps();
  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point a = ring[j];
    const Point b = ring[i];
    if (on_segment(p, a, b, tol)) return Location::kBoundary;
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x > p.x) inside = !inside;
    }
  }
  return inside ? Location::kInside : Location::kOutside;
}

double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

void Box::add(Point p) {
  xmin = std::min(xmin, p.x);
  ymin = std::min(ymin, p.y);
  xmax = std::max(xmax, p.x);
  ymax = std::max(ymax, p.y);
}

void Box::add(const Box& b) {
  if (!b.valid()) return;
  add(Point{b.xmin, b.ymin});
  add(Point{b.xmax, b.ymax});
}

bool Box::overlaps(const Box& b, double pad) const {
  return valid() && b.valid() && xmin <= b.xmax + pad && b.xmin <= xmax + pad &&
         ymin <= b.ymax + pad && b.ymin <= ymax + pad;
}

double Box::diagonal() const {
  if (!valid()) return 0.0;
  return std::hypot(xmax - xmin, ymax - ymin);
}

}  // namespace gg
