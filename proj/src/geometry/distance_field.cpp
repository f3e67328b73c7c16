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

#include "gallery_guard/distance_field.hpp"

#include <algorithm>

namespace gg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kFallbackSamplesPerLoop = 512;

double box_distance(const Box& b, Point p) {
  const double dx = std::max({b.xmin - p.x, 0.0, p.x - b.xmax});
  const double dy = std::max({b.ymin - p.y, 0.0, p.y - b.ymax});
  return std::hypot(dx, dy);
}

bool angle_in_arc(const Edge& e, double angle) {
  const double delta = e.sweep > 0 ? normalize_angle(angle - e.start)
                                   : normalize_angle(e.start - angle);
  return delta <= std::abs(e.sweep);
}

}  // namespace

RegionField::RegionField(const Environment& env, ArcRegion region)
    : env_(&env), region_(std::move(region)) {
  box_ = region_.bbox();
  tol_ = std::max(eps(), 1e-12 * env.diameter());
  const size_t r = env.reflex().size();
  std::vector<double> direct_w(r);
  for (size_t k = 0; k < r; ++k) direct_w[k] = direct(env.reflex_point(static_cast<int>(k)));
  weights_.assign(r, kInf);
  for (size_t k = 0; k < r; ++k) {
    for (size_t m = 0; m < r; ++m) {
      if (direct_w[m] == kInf) continue;
      weights_[k] = std::min(weights_[k], direct_w[m] + env.reflex_distance(k, m));
    }
  }
}

bool RegionField::in_region(Point p) const {
  if (region_.empty() || box_distance(box_, p) > tol_) return false;
  return region_.contains(p) || region_.on_boundary(p, tol_);
}

void RegionField::direct_candidates(Point p, std::vector<std::pair<double, Point>>& out) const {
  for (const Edge& e : region_.edges()) {
    out.push_back({dist(p, e.a), e.a});
    if (e.kind == Edge::Kind::kSegment) {
      const Point d = e.b - e.a;
      const double len2 = dot(d, d);
      if (len2 == 0.0) continue;
      const double t = dot(p - e.a, d) / len2;
      if (t > 0.0 && t < 1.0) {
        const Point q = e.a + d * t;
        out.push_back({dist(p, q), q});
      }
    } else {
      out.push_back({dist(p, e.b), e.b});
      const double pc = dist(p, e.center);
      if (pc == 0.0) continue;
      const double ang = std::atan2(p.y - e.center.y, p.x - e.center.x);
      if (angle_in_arc(e, ang)) {
        const Point q = e.center + (p - e.center) * (e.radius / pc);
        out.push_back({std::abs(pc - e.radius), q});
      }
    }
  }
}

double RegionField::direct(Point p) const {
  if (in_region(p)) return 0.0;
  std::vector<std::pair<double, Point>> cands;
  direct_candidates(p, cands);
  std::sort(cands.begin(), cands.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [d, q] : cands) {
    if (env_->segment_clear(p, q)) return d;
  }
  return kInf;
}

double RegionField::distance(Point p, double cutoff) const {
  if (region_.empty()) return kInf;
  if (box_distance(box_, p) > cutoff) return kInf;
  if (in_region(p)) return 0.0;
  std::vector<std::pair<double, Point>> cands;
  direct_candidates(p, cands);
  struct Cand {
    double value;
    Point target;
  };
  std::vector<Cand> all;
  all.reserve(cands.size() + weights_.size());
  for (const auto& [d, q] : cands) {
    if (d <= cutoff) all.push_back({d, q});
  }
  for (size_t k = 0; k < weights_.size(); ++k) {
    if (weights_[k] == kInf) continue;
    const Point v = env_->reflex_point(static_cast<int>(k));
    const double d = dist(p, v) + weights_[k];
    if (d <= cutoff) all.push_back({d, v});
  }
  std::sort(all.begin(), all.end(), [](const Cand& x, const Cand& y) { return x.value < y.value; });
  for (const Cand& c : all) {
    if (env_->segment_clear(p, c.target)) return c.value;
  }
  return kInf;
}

double set_distance(const Environment& env, const ArcRegion& a, const ArcRegion& b) {
  if (a.empty() || b.empty()) throw DomainError("set_distance requires nonempty regions");
  return set_distance(RegionField(env, a), RegionField(env, b));
}

double set_distance(const RegionField& fa, const RegionField& fb) {
  const ArcRegion& a = fa.region();
  const ArcRegion& b = fb.region();
  const Environment& env = fa.env();
  if (a.empty() || b.empty()) throw DomainError("set_distance requires nonempty regions");
  const double tol = std::max(eps(), 1e-12 * env.diameter());
  if (regions_touch(a, b, tol)) return 0.0;
  double best = kInf;
  for (Point p : a.corners()) best = std::min(best, fb.direct(p));
  for (Point p : b.corners()) best = std::min(best, fa.direct(p));
  for (size_t k = 0; k < fa.weights().size(); ++k) {
    best = std::min(best, fa.weights()[k] + fb.weights()[k]);
  }

  auto try_pair = [&](Point p, Point q) {
    const double d = dist(p, q);
    if (d < best && env.segment_clear(p, q)) best = d;
  };
  auto seg_arc = [&](const Edge& s, const Edge& c) {
    const Point d = s.b - s.a;
    const double len2 = dot(d, d);
    if (len2 == 0.0) return;
    const double t = dot(c.center - s.a, d) / len2;
    if (t <= 0.0 || t >= 1.0) return;
    const Point foot = s.a + d * t;
    const double fc = dist(foot, c.center);
    if (fc == 0.0) return;
    const Point u = (foot - c.center) / fc;
    for (double sign : {1.0, -1.0}) {
      const Point q = c.center + u * (sign * c.radius);
      if (angle_in_arc(c, std::atan2(q.y - c.center.y, q.x - c.center.x))) try_pair(foot, q);
    }
  };
  for (const Edge& e : a.edges()) {
    for (const Edge& f : b.edges()) {
      if (!e.is_arc() && !f.is_arc()) continue;
      if (!e.is_arc()) {
        seg_arc(e, f);
      } else if (!f.is_arc()) {
        seg_arc(f, e);
      } else {
        const double cc = dist(e.center, f.center);
        if (cc == 0.0) continue;
        const Point u = (f.center - e.center) / cc;
        for (double s1 : {1.0, -1.0}) {
          const Point p = e.center + u * (s1 * e.radius);
          if (!angle_in_arc(e, std::atan2(p.y - e.center.y, p.x - e.center.x))) continue;
          for (double s2 : {1.0, -1.0}) {
            const Point q = f.center + u * (s2 * f.radius);
            if (angle_in_arc(f, std::atan2(q.y - f.center.y, q.x - f.center.x))) try_pair(p, q);
          }
        }
      }
    }
  }

  if (best == kInf) {
    for (const auto& loop : a.loops()) {
      const ArcRegion part(loop);
      for (Point p : part.sample_boundary(kFallbackSamplesPerLoop)) {
        best = std::min(best, fb.distance(p));
      }
    }
  }
  return best;
}

ArcRegion scene_region(const Environment& env) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : env.edges()) edges.push_back(Edge::segment(a, b));
  return ArcRegion(std::move(edges));
}

std::vector<Edge> offset_generators(const RegionField& field, double d) {
  std::vector<Edge> gens;
  const Environment& env = field.env();
  for (const auto& [a, b] : env.edges()) gens.push_back(Edge::segment(a, b));
  const ArcRegion& q = field.region();
  const double tol = std::max(eps(), 1e-12 * env.diameter());
  std::vector<Point> corners;
  for (const Edge& e : q.edges()) {
    if (e.kind == Edge::Kind::kSegment) {
      const double len = dist(e.a, e.b);
      if (len > 0.0) {
        const Point n = perp((e.b - e.a) / len) * d;
        gens.push_back(Edge::segment(e.a + n, e.b + n));
        gens.push_back(Edge::segment(e.a - n, e.b - n));
      }
    } else {
      gens.push_back(Edge::arc(e.center, e.radius + d, e.start, e.sweep));
      if (e.radius > d + tol) {
        gens.push_back(Edge::arc(e.center, e.radius - d, e.start, e.sweep));
      } else if (e.radius < d - tol) {
        gens.push_back(Edge::arc(e.center, d - e.radius, e.start + kPi, e.sweep));
      }
    }
    for (Point c : {e.a, e.b}) {
      bool seen = false;
      for (Point o : corners) {
        if (near(o, c, tol)) {
          seen = true;
          break;
        }
      }
      if (!seen) corners.push_back(c);
    }
  }
  for (Point c : corners) gens.push_back(Edge::circle(c, d));
  const auto& w = field.weights();
  for (size_t k = 0; k < w.size(); ++k) {
    if (w[k] < d - tol) gens.push_back(Edge::circle(env.reflex_point(static_cast<int>(k)), d - w[k]));
  }
  return gens;
}

ArcRegion geodesic_offset(const RegionField& field, double d) {
  if (field.region().empty()) return {};
  if (!(d > 0.0)) throw DomainError("geodesic_offset requires dist > 0");
  const Environment& env = field.env();
  return extract_region(offset_generators(field, d), [&](Point p) {
    return env.contains(p) && field.distance(p, d) <= d;
  });
}

ArcRegion geodesic_offset(const Environment& env, const ArcRegion& region, double d) {
  return geodesic_offset(RegionField(env, region), d);
}

ArcRegion outside_offset(const RegionField& field, double d, const ArcRegion& within) {
  if (within.empty()) return {};
  if (field.region().empty()) return within;
  const Box wb = within.bbox();
  std::vector<Edge> cands = within.edges();
  for (const Edge& g : offset_generators(field, d)) {
    if (g.bbox().overlaps(wb, 1e-9 * (1.0 + wb.diagonal()))) cands.push_back(g);
  }
  return extract_region(cands, [&](Point p) {
    return within.contains(p) && field.distance(p, d) > d;
  });
}

}  // namespace gg
