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

#include "gallery_guard/arc_region.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <set>

namespace gg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Point unit_at(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

Edge Edge::segment(Point a, Point b) {
  Edge e;
  e.kind = Kind::kSegment;
  e.a = a;
  e.b = b;
  return e;
}

Edge Edge::arc(Point center, double radius, double start, double sweep) {
  Edge e;
  e.kind = Kind::kArc;
  e.center = center;
  e.radius = radius;
  e.start = start;
  e.sweep = sweep;
  e.a = center + unit_at(start) * radius;
  e.b = center + unit_at(start + sweep) * radius;
  return e;
}

Edge Edge::circle(Point center, double radius) {
  Edge e = arc(center, radius, 0.0, kTwoPi);
  e.b = e.a;
  return e;
}

Point Edge::at(double t) const {
  if (t <= 0.0) return a;
  if (t >= 1.0) return b;
  if (kind == Kind::kSegment) return lerp(a, b, t);
  return center + unit_at(start + t * sweep) * radius;
}

Point Edge::tangent(double t) const {
  if (kind == Kind::kSegment) return b - a;
  const Point radial = unit_at(start + t * sweep);
  return perp(radial) * (sweep > 0 ? radius : -radius);
}

double Edge::length() const {
  if (kind == Kind::kSegment) return dist(a, b);
  return std::abs(sweep) * radius;
}

Box Edge::bbox() const {
  Box box;
  box.add(a);
  box.add(b);
  if (kind == Kind::kArc) {
    for (int q = 0; q < 4; ++q) {
      const double ang = q * kPi / 2;
      const double delta = sweep > 0 ? normalize_angle(ang - start) : normalize_angle(start - ang);
      if (delta <= std::abs(sweep)) box.add(center + unit_at(ang) * radius);
    }
  }
  return box;
}

Edge Edge::reversed() const {
  Edge e = *this;
  std::swap(e.a, e.b);
  if (kind == Kind::kArc) {
    e.start = start + sweep;
    e.sweep = -sweep;
  }
  return e;
}

Edge Edge::sub(double t0, double t1, Point pa, Point pb) const {
  Edge e = *this;
  if (kind == Kind::kArc) {
    e.start = start + t0 * sweep;
    e.sweep = (t1 - t0) * sweep;
  }
  e.a = pa;
  e.b = pb;
  return e;
}

std::optional<double> Edge::param_of(Point p, double tol) const {
  if (kind == Kind::kSegment) {
    const Point d = b - a;
    const double len2 = dot(d, d);
    if (len2 == 0.0) return near(p, a, tol) ? std::optional<double>(0.0) : std::nullopt;
    const double t = dot(p - a, d) / len2;
    const double len = std::sqrt(len2);
    if (t < -tol / len || t > 1.0 + tol / len) return std::nullopt;
    const double tc = std::clamp(t, 0.0, 1.0);
    if (dist(p, lerp(a, b, tc)) > tol) return std::nullopt;
    return tc;
  }
  if (std::abs(dist(p, center) - radius) > tol) return std::nullopt;
  if (near(p, a, tol)) return 0.0;
  if (near(p, b, tol)) return 1.0;
  const double th = std::atan2(p.y - center.y, p.x - center.x);
  const double delta = sweep > 0 ? normalize_angle(th - start) : normalize_angle(start - th);
  const double total = std::abs(sweep);
  const double angtol = tol / radius;
  if (delta <= total + angtol) return std::min(1.0, delta / total);
  if (delta >= kTwoPi - angtol) return 0.0;
  return std::nullopt;
}

double Edge::distance_to(Point p) const {
  if (kind == Kind::kSegment) return point_segment_distance(p, a, b);
  const double th = std::atan2(p.y - center.y, p.x - center.x);
  const double delta = sweep > 0 ? normalize_angle(th - start) : normalize_angle(start - th);
  if (delta <= std::abs(sweep)) return std::abs(dist(p, center) - radius);
  return std::min(dist(p, a), dist(p, b));
}

ArcRegion::ArcRegion(std::vector<Edge> edges) : edges_(std::move(edges)) {}

ArcRegion ArcRegion::from_polygon(const std::vector<Point>& ring) {
  std::vector<Point> r = ring;
  if (signed_area(r) < 0) std::reverse(r.begin(), r.end());
  std::vector<Edge> edges;
  for (size_t i = 0; i < r.size(); ++i) edges.push_back(Edge::segment(r[i], r[(i + 1) % r.size()]));
  return ArcRegion(std::move(edges));
}

double ArcRegion::area() const {
  double s = 0.0;
  for (const Edge& e : edges_) {
    if (e.kind == Edge::Kind::kSegment) {
      s += cross(e.a, e.b);
    } else {
      s += e.center.x * (e.b.y - e.a.y) - e.center.y * (e.b.x - e.a.x) +
           e.radius * e.radius * e.sweep;
    }
  }
  return 0.5 * s;
}

bool ArcRegion::contains(Point p) const {
  if (edges_.empty()) return false;
  static constexpr std::array<double, 6> kAngles = {0.7313, 2.3561 + 0.1234, 4.0123,
                                                    5.5371, 1.1291, 3.3313};
  for (double ang : kAngles) {
    const Point u = unit_at(ang);
    int winding = 0;
    bool ambiguous = false;
    for (const Edge& e : edges_) {
      if (e.kind == Edge::Kind::kSegment) {
        const Point d = e.b - e.a;
        const double den = cross(u, d);
        if (std::abs(den) <= 1e-15 * norm(d)) continue;
        const double s = cross(e.a - p, d) / den;
        const double t = cross(e.a - p, u) / den;
        if (s <= 0.0 || t < 0.0 || t > 1.0) continue;
        if (t < 1e-10 || t > 1.0 - 1e-10) {
          ambiguous = true;
          break;
        }
        winding += den > 0 ? 1 : -1;
      } else {
        const Point w = p - e.center;
        const double bq = dot(u, w);
        const double cq = dot(w, w) - e.radius * e.radius;
        const double disc = bq * bq - cq;
        if (disc < 0.0) continue;
        const double sq = std::sqrt(disc);
        if (sq < 1e-12 * e.radius) {
          if (-bq > 0.0) {
            ambiguous = true;
            break;
          }
          continue;
        }
        for (double s : {-bq - sq, -bq + sq}) {
          if (s <= 0.0) continue;
          const Point q = p + u * s;
          const double th = std::atan2(q.y - e.center.y, q.x - e.center.x);
          const double delta =
              e.sweep > 0 ? normalize_angle(th - e.start) : normalize_angle(e.start - th);
          const double total = std::abs(e.sweep);
          const double t = delta / total;
          const double near_wrap = (kTwoPi - delta) / total;
          if (t <= 1.0 + 1e-10 && (t < 1e-10 || t > 1.0 - 1e-10)) {
            ambiguous = true;
            break;
          }
          if (near_wrap < 1e-10 && total < kTwoPi - 1e-12) {
            ambiguous = true;
            break;
          }
          if (t > 1.0) continue;
          const Point tan = perp(q - e.center) * (e.sweep > 0 ? 1.0 : -1.0);
          winding += cross(u, tan) > 0 ? 1 : -1;
        }
        if (ambiguous) break;
      }
    }
    if (!ambiguous) return winding != 0;
  }
  return false;
}

double ArcRegion::boundary_distance(Point p) const {
  double best = kInf;
  for (const Edge& e : edges_) best = std::min(best, e.distance_to(p));
  return best;
}

bool ArcRegion::on_boundary(Point p, double tol) const { return boundary_distance(p) <= tol; }

Box ArcRegion::bbox() const {
  Box box;
  for (const Edge& e : edges_) box.add(e.bbox());
  return box;
}

std::vector<std::vector<Edge>> ArcRegion::loops() const {
  std::vector<std::vector<Edge>> out;
  const double tol = std::max(eps(), 1e-9 * bbox().diagonal());
  std::vector<bool> used(edges_.size(), false);
  for (size_t s = 0; s < edges_.size(); ++s) {
    if (used[s]) continue;
    std::vector<Edge> loop{edges_[s]};
    used[s] = true;
    const Point origin = edges_[s].a;
    Point cur = edges_[s].b;
    while (!near(cur, origin, tol)) {
      int next = -1;
      double best = tol;
      for (size_t k = 0; k < edges_.size(); ++k) {
        if (used[k]) continue;
        const double d = dist(edges_[k].a, cur);
        if (d <= best) {
          best = d;
          next = static_cast<int>(k);
          if (d == 0.0) break;
        }
      }
      if (next < 0) break;
      used[next] = true;
      loop.push_back(edges_[next]);
      cur = edges_[next].b;
    }
    out.push_back(std::move(loop));
  }
  return out;
}

std::vector<Point> ArcRegion::sample_boundary(int count) const {
  std::vector<Point> out;
  double total = 0.0;
  for (const Edge& e : edges_) total += e.length();
  if (total <= 0.0) return out;
  for (const Edge& e : edges_) {
    const int k = std::max(1, static_cast<int>(std::lround(count * e.length() / total)));
    for (int i = 0; i < k; ++i) out.push_back(e.at((i + 0.5) / k));
  }
  return out;
}

std::vector<Point> ArcRegion::corners() const {
  std::vector<Point> out;
  for (const Edge& e : edges_) out.push_back(e.a);
  return out;
}

namespace {

// Snaps points within tol to a single representative.
class VertexPool {
 public:
  explicit VertexPool(double tol) : tol_(tol) {}

  int id(Point p) {
    for (size_t i = 0; i < pts_.size(); ++i) {
      if (std::abs(pts_[i].x - p.x) <= tol_ && std::abs(pts_[i].y - p.y) <= tol_ &&
          dist(pts_[i], p) <= tol_) {
        return static_cast<int>(i);
      }
    }
    pts_.push_back(p);
    return static_cast<int>(pts_.size() - 1);
  }
  Point operator[](int i) const { return pts_[i]; }

 private:
  double tol_;
  std::vector<Point> pts_;
};

void line_circle(Point p, Point q, Point c, double r, double tol, std::vector<Point>& out) {
  const Point d = q - p;
  const double a = dot(d, d);
  if (a == 0.0) return;
  const Point w = p - c;
  const double b = dot(d, w);
  const double cc = dot(w, w) - r * r;
  const double disc = b * b - a * cc;
  const double foot_t = -b / a;
  const double foot_dist = dist(p + d * foot_t, c);
  if (disc < 0.0) {
    if (foot_dist >= r - tol && foot_dist <= r + tol) out.push_back(p + d * foot_t);
    return;
  }
  const double sq = std::sqrt(disc);
  out.push_back(p + d * ((-b - sq) / a));
  if (sq > 0.0) out.push_back(p + d * ((-b + sq) / a));
}

void circle_circle(Point c1, double r1, Point c2, double r2, double tol, std::vector<Point>& out) {
  const double d = dist(c1, c2);
  if (d <= tol) return;  // concentric or coincident; handled by endpoint projection
  if (d > r1 + r2 + tol || d < std::abs(r1 - r2) - tol) return;
  const Point u = (c2 - c1) / d;
  const double x = (d * d + r1 * r1 - r2 * r2) / (2 * d);
  const double h2 = r1 * r1 - x * x;
  const Point base = c1 + u * x;
  if (h2 <= 0.0) {
    out.push_back(base);
    return;
  }
  const double h = std::sqrt(h2);
  out.push_back(base + perp(u) * h);
  out.push_back(base - perp(u) * h);
}

void intersect_curves(const Edge& e, const Edge& f, double tol, std::vector<Point>& out) {
  if (!e.is_arc() && !f.is_arc()) {
    const Point d1 = e.b - e.a;
    const Point d2 = f.b - f.a;
    const double den = cross(d1, d2);
    if (std::abs(den) <= 1e-14 * norm(d1) * norm(d2)) return;
    const double t = cross(f.a - e.a, d2) / den;
    out.push_back(e.a + d1 * t);
  } else if (!e.is_arc()) {
    line_circle(e.a, e.b, f.center, f.radius, tol, out);
  } else if (!f.is_arc()) {
    line_circle(f.a, f.b, e.center, e.radius, tol, out);
  } else {
    circle_circle(e.center, e.radius, f.center, f.radius, tol, out);
  }
}

struct SplitEvent {
  double t;
  int vid;
};

}  // namespace

bool edges_intersect(const Edge& e, const Edge& f, double tol) {
  if (!e.bbox().overlaps(f.bbox(), tol)) return false;
  for (Point p : {f.a, f.b}) {
    if (e.param_of(p, tol)) return true;
  }
  for (Point p : {e.a, e.b}) {
    if (f.param_of(p, tol)) return true;
  }
  std::vector<Point> pts;
  intersect_curves(e, f, tol, pts);
  for (Point p : pts) {
    if (e.param_of(p, tol) && f.param_of(p, tol)) return true;
  }
  return false;
}

bool regions_touch(const ArcRegion& a, const ArcRegion& b, double tol) {
  if (a.empty() || b.empty() || !a.bbox().overlaps(b.bbox(), tol)) return false;
  for (const Edge& e : a.edges()) {
    for (const Edge& f : b.edges()) {
      if (edges_intersect(e, f, tol)) return true;
    }
  }
  return b.contains(a.edges()[0].a) || a.contains(b.edges()[0].a);
}

ArcRegion extract_region(const std::vector<Edge>& candidates, const RegionPredicate& inside) {
  std::vector<Edge> curves;
  Box all;
  for (const Edge& e : candidates) {
    if (e.length() <= 0.0 || !std::isfinite(e.length())) continue;
    curves.push_back(e);
    all.add(e.bbox());
  }
  if (curves.empty()) return {};
  const double scale = std::max(1.0, all.diagonal());
  const double tol = std::max(eps(), 1e-12 * scale);
  const double delta_base = 1e-8 * scale;

  VertexPool pool(tol);
  std::vector<Box> boxes;
  std::vector<std::vector<SplitEvent>> events(curves.size());
  for (size_t i = 0; i < curves.size(); ++i) {
    boxes.push_back(curves[i].bbox());
    events[i].push_back({0.0, pool.id(curves[i].a)});
    events[i].push_back({1.0, pool.id(curves[i].b)});
  }

  std::vector<Point> pts;
  for (size_t i = 0; i < curves.size(); ++i) {
    for (size_t j = i + 1; j < curves.size(); ++j) {
      if (!boxes[i].overlaps(boxes[j], 2 * tol)) continue;
      const Edge& e = curves[i];
      const Edge& f = curves[j];
      pts.clear();
      intersect_curves(e, f, tol, pts);
      for (Point p : pts) {
        const auto ti = e.param_of(p, 4 * tol);
        if (!ti) continue;
        const auto tj = f.param_of(p, 4 * tol);
        if (!tj) continue;
        const int vid = pool.id(p);
        events[i].push_back({*ti, vid});
        events[j].push_back({*tj, vid});
      }
      for (Point p : {f.a, f.b}) {
        if (auto t = e.param_of(p, tol)) events[i].push_back({*t, pool.id(p)});
      }
      for (Point p : {e.a, e.b}) {
        if (auto t = f.param_of(p, tol)) events[j].push_back({*t, pool.id(p)});
      }
    }
  }

  struct Kept {
    Edge edge;
    int va, vb;
  };
  std::vector<Kept> kept;
  for (size_t i = 0; i < curves.size(); ++i) {
    auto& ev = events[i];
    std::sort(ev.begin(), ev.end(), [](const SplitEvent& x, const SplitEvent& y) {
      return x.t < y.t || (x.t == y.t && x.vid < y.vid);
    });
    // The start and end events are pinned to t = 0 and t = 1.
    const Edge& e = curves[i];
    const double len = e.length();
    std::vector<SplitEvent> clean;
    for (const SplitEvent& s : ev) {
      // Full circles start and end at the same vertex.
      if (!clean.empty() && clean.back().vid == s.vid && (s.t - clean.back().t) * len <= tol) {
        continue;
      }
      clean.push_back(s);
    }
    for (size_t k = 0; k + 1 < clean.size(); ++k) {
      const double t0 = clean[k].t;
      const double t1 = clean[k + 1].t;
      if ((t1 - t0) * len <= tol) continue;
      Edge piece = e.sub(t0, t1, pool[clean[k].vid], pool[clean[k + 1].vid]);
      const double plen = piece.length();
      const Point mid = piece.at(0.5);
      const Point tan = piece.tangent(0.5);
      const double tn = norm(tan);
      if (tn == 0.0) continue;
      const Point n = perp(tan) / tn;
      const double delta = std::max(std::min(delta_base, 0.25 * plen), 1e-11 * scale);
      const bool left = inside(mid + n * delta);
      const bool right = inside(mid - n * delta);
      if (left == right) continue;
      int va = clean[k].vid;
      int vb = clean[k + 1].vid;
      if (!left) {
        piece = piece.reversed();
        std::swap(va, vb);
      }
      bool duplicate = false;
      for (const Kept& other : kept) {
        if (other.va == va && other.vb == vb && other.edge.kind == piece.kind &&
            dist(other.edge.at(0.5), mid) <= 16 * tol) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) kept.push_back({piece, va, vb});
    }
  }

  // A closed boundary has in-degree equal to out-degree at every vertex.
  // Near-tangent curves can leave short redundant chains beside a kept path;
  // drop the shortest chain from each surplus-out to a surplus-in vertex.
  std::map<int, int> balance;  // out minus in
  std::map<int, std::vector<size_t>> outgoing;
  for (size_t i = 0; i < kept.size(); ++i) {
    ++balance[kept[i].va];
    --balance[kept[i].vb];
    outgoing[kept[i].va].push_back(i);
  }
  std::vector<bool> dropped(kept.size(), false);
  const double max_chain = 1e-5 * scale;
  for (auto& [source, surplus] : balance) {
    while (surplus > 0) {
      std::map<int, double> best{{source, 0.0}};
      std::map<int, size_t> via;
      std::set<std::pair<double, int>> queue{{0.0, source}};
      int sink = -1;
      while (!queue.empty()) {
        const auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        if (d > max_chain) break;
        if (v != source && balance[v] < 0) {
          sink = v;
          break;
        }
        for (size_t i : outgoing[v]) {
          if (dropped[i]) continue;
          const int w = kept[i].vb;
          const double nd = d + kept[i].edge.length();
          const auto it = best.find(w);
          if (it != best.end() && it->second <= nd) continue;
          if (it != best.end()) queue.erase({it->second, w});
          best[w] = nd;
          via[w] = i;
          queue.insert({nd, w});
        }
      }
      if (sink < 0) break;
      for (int v = sink; v != source; v = kept[via[v]].va) dropped[via[v]] = true;
      --surplus;
      ++balance[sink];
    }
  }

  std::vector<Edge> out;
  out.reserve(kept.size());
  for (size_t i = 0; i < kept.size(); ++i) {
    if (!dropped[i]) out.push_back(kept[i].edge);
  }
  return ArcRegion(std::move(out));
}

ArcRegion region_boolean(BooleanOp op, const ArcRegion& a, const ArcRegion& b) {
  std::vector<Edge> cands = a.edges();
  cands.insert(cands.end(), b.edges().begin(), b.edges().end());
  switch (op) {
    case BooleanOp::kUnion:
      return extract_region(cands, [&](Point p) { return a.contains(p) || b.contains(p); });
    case BooleanOp::kIntersection:
      if (!a.bbox().overlaps(b.bbox())) return {};
      return extract_region(cands, [&](Point p) { return a.contains(p) && b.contains(p); });
    case BooleanOp::kDifference:
      return extract_region(cands, [&](Point p) { return a.contains(p) && !b.contains(p); });
    case BooleanOp::kComplementWithin:
      return extract_region(cands, [&](Point p) { return b.contains(p) && !a.contains(p); });
  }
  return {};
}

ArcRegion region_union(const std::vector<ArcRegion>& parts) {
  std::vector<Edge> cands;
  std::vector<const ArcRegion*> nonempty;
  for (const ArcRegion& r : parts) {
    if (r.empty()) continue;
    nonempty.push_back(&r);
    cands.insert(cands.end(), r.edges().begin(), r.edges().end());
  }
  if (nonempty.empty()) return {};
  if (nonempty.size() == 1) return *nonempty[0];
  return extract_region(cands, [&](Point p) {
    for (const ArcRegion* r : nonempty) {
      if (r->contains(p)) return true;
    }
    return false;
  });
}

bool area_empty(const ArcRegion& r, double reference_area, double rel) {
  return r.empty() || r.area() <= rel * reference_area;
}

}  // namespace gg
