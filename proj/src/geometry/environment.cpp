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

#include "gallery_guard/environment.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace gg {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

bool VisibilityGraph::has_edge(int u, int v) const {
  for (const auto& [w, len] : adj[u]) {
    if (w == v) return true;
  }
  return false;
}

Environment::Environment(PolygonScene scene) : scene_(std::move(scene)) {
  auto add_ring = [&](const std::vector<Point>& ring) {
    const size_t n = ring.size();
    const int base = static_cast<int>(vertices_.size());
    for (size_t i = 0; i < n; ++i) {
      vertices_.push_back(ring[i]);
      edges_.push_back({ring[i], ring[(i + 1) % n]});
      box_.add(ring[i]);
    }
    // Domain lies to the left of every ring, so reflex means a right turn.
    for (size_t i = 0; i < n; ++i) {
      if (orient(ring[(i + n - 1) % n], ring[i], ring[(i + 1) % n]) < 0) {
        reflex_.push_back(base + static_cast<int>(i));
      }
    }
  };
  add_ring(scene_.outer);
  for (const auto& h : scene_.holes) add_ring(h);

  const size_t r = reflex_.size();
  dist_.assign(r, std::vector<double>(r, kInf));
  next_.assign(r, std::vector<int>(r, -1));
  for (size_t k = 0; k < r; ++k) {
    dist_[k][k] = 0.0;
    next_[k][k] = static_cast<int>(k);
    for (size_t m = k + 1; m < r; ++m) {
      const Point a = vertices_[reflex_[k]];
      const Point b = vertices_[reflex_[m]];
      if (segment_clear(a, b)) {
        dist_[k][m] = dist_[m][k] = dist(a, b);
        next_[k][m] = static_cast<int>(m);
        next_[m][k] = static_cast<int>(k);
      }
    }
  }
  for (size_t via = 0; via < r; ++via) {
    for (size_t i = 0; i < r; ++i) {
      if (dist_[i][via] == kInf) continue;
      for (size_t j = 0; j < r; ++j) {
        const double d = dist_[i][via] + dist_[via][j];
        if (d < dist_[i][j]) {
          dist_[i][j] = d;
          next_[i][j] = next_[i][via];
        }
      }
    }
  }
}

Location Environment::locate(Point p) const {
  const Location outer = locate_in_ring(p, scene_.outer);
  if (outer != Location::kInside) return outer;
  for (const auto& h : scene_.holes) {
    const Location l = locate_in_ring(p, h);
    if (l == Location::kInside) return Location::kOutside;
    if (l == Location::kBoundary) return Location::kBoundary;
  }
  return Location::kInside;
}

bool Environment::contains(Point p) const { return locate(p) != Location::kOutside; }

bool Environment::segment_clear(Point a, Point b) const {
  if (!contains(a) || !contains(b)) return false;
  const double len = dist(a, b);
  const double tol = eps();
  if (len <= tol) return true;
  Box sb;
  sb.add(a);
  sb.add(b);
  std::vector<double> cuts{0.0, 1.0};
  const Point ab = b - a;
  for (const auto& [c, d] : edges_) {
    Box eb;
    eb.add(c);
    eb.add(d);
    if (!sb.overlaps(eb, tol)) continue;
    if (segments_properly_cross(a, b, c, d)) return false;
    for (Point v : {c, d}) {
      if (on_segment(v, a, b, tol)) cuts.push_back(dot(v - a, ab) / (len * len));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    if ((cuts[i + 1] - cuts[i]) * len <= tol) continue;
    if (!contains(a + ab * (0.5 * (cuts[i] + cuts[i + 1])))) return false;
  }
  return true;
}

std::vector<int> Environment::visible_reflex(Point p) const {
  std::vector<int> out;
  for (size_t k = 0; k < reflex_.size(); ++k) {
    if (segment_clear(p, vertices_[reflex_[k]])) out.push_back(static_cast<int>(k));
  }
  return out;
}

void Environment::require_inside(Point p, const char* what) const {
  if (!contains(p)) {
    throw DomainError(std::string(what) + " (" + std::to_string(p.x) + ", " +
                      std::to_string(p.y) + ") lies outside the scene");
  }
}

double Environment::distance(Point a, Point b) const { return geodesic(a, b).length; }

GeodesicPath Environment::geodesic(Point a, Point b) const {
  require_inside(a, "geodesic endpoint");
  require_inside(b, "geodesic endpoint");
  GeodesicPath path;
  if (a == b) {
    path.waypoints = {a};
    return path;
  }
  if (segment_clear(a, b)) {
    path.waypoints = {a, b};
    path.length = dist(a, b);
    return path;
  }
  const std::vector<int> va = visible_reflex(a);
  const std::vector<int> vb = visible_reflex(b);
  double best = kInf;
  int bu = -1, bv = -1;
  for (int u : va) {
    const double du = dist(a, reflex_point(u));
    if (du >= best) continue;
    for (int v : vb) {
      const double d = du + dist_[u][v] + dist(reflex_point(v), b);
      if (d < best) {
        best = d;
        bu = u;
        bv = v;
      }
    }
  }
  if (bu < 0) throw DomainError("geodesic endpoints are not connected");
  path.waypoints.push_back(a);
  for (int k = bu; k != bv; k = next_[k][bv]) path.waypoints.push_back(reflex_point(k));
  path.waypoints.push_back(reflex_point(bv));
  path.waypoints.push_back(b);
  path.length = best;
  return path;
}

VisibilityGraph Environment::build_visibility_graph(const std::vector<Point>& extra) const {
  for (Point p : extra) require_inside(p, "visibility graph point");
  VisibilityGraph g;
  g.nodes = vertices_;
  g.nodes.insert(g.nodes.end(), extra.begin(), extra.end());
  g.adj.assign(g.nodes.size(), {});
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    for (size_t j = i + 1; j < g.nodes.size(); ++j) {
      if (segment_clear(g.nodes[i], g.nodes[j])) {
        const double w = dist(g.nodes[i], g.nodes[j]);
        g.adj[i].push_back({static_cast<int>(j), w});
        g.adj[j].push_back({static_cast<int>(i), w});
      }
    }
  }
  return g;
}

Point Environment::project_inside(Point p) const {
  if (contains(p)) return p;
  Point best = p;
  double bd = kInf;
  for (const auto& [c, d] : edges_) {
    const Point q = closest_on_segment(p, c, d);
    const double dq = dist(p, q);
    if (dq < bd) {
      bd = dq;
      best = q;
    }
  }
  return best;
}

}  // namespace gg
