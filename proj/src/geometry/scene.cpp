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

#include "gallery_guard/scene.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace gg {
namespace {

constexpr double kCoordinateLimit = 1e6;

std::string ring_name(int ring) {
  return ring == 0 ? std::string("outer") : "hole" + std::to_string(ring - 1);
}

std::string edge_name(int ring, size_t i, size_t n) {
  std::ostringstream os;
  os << ring_name(ring) << "[" << i << "-" << (i + 1) % n << "]";
  return os.str();
}

bool in_cone(Point prev, Point v, Point next, Point q) {
  if (orient(prev, v, next) > 0) {
    return orient(v, next, q) > 0 && orient(prev, v, q) > 0;
  }
  return orient(v, next, q) > 0 || orient(prev, v, q) > 0;
}

}  // namespace

size_t PolygonScene::vertex_count() const {
  size_t n = outer.size();
  for (const auto& h : holes) n += h.size();
  return n;
}

std::vector<Point> PolygonScene::flat_vertices() const {
  std::vector<Point> v = outer;
  for (const auto& h : holes) v.insert(v.end(), h.begin(), h.end());
  return v;
}

std::optional<std::string> find_scene_defect(const PolygonScene& scene) {
  std::vector<const std::vector<Point>*> rings;
  rings.push_back(&scene.outer);
  for (const auto& h : scene.holes) rings.push_back(&h);
  const double tol = eps();

  for (size_t r = 0; r < rings.size(); ++r) {
    const auto& ring = *rings[r];
    if (ring.size() < 3) {
      return ring_name(static_cast<int>(r)) + " has fewer than 3 vertices";
    }
    for (size_t i = 0; i < ring.size(); ++i) {
      const Point p = ring[i];
      if (!std::isfinite(p.x) || !std::isfinite(p.y) ||
          std::abs(p.x) > kCoordinateLimit || std::abs(p.y) > kCoordinateLimit) {
        return ring_name(static_cast<int>(r)) + " vertex " + std::to_string(i) +
               " is not finite or outside [-1e6, 1e6]";
      }
      if (near(p, ring[(i + 1) % ring.size()], tol)) {
        return ring_name(static_cast<int>(r)) + " has duplicate consecutive vertices at " +
               std::to_string(i);
      }
    }
  }

  // Edge pairs across all rings.
  for (size_t r1 = 0; r1 < rings.size(); ++r1) {
    const auto& a = *rings[r1];
    for (size_t i = 0; i < a.size(); ++i) {
      const Point p0 = a[i];
      const Point p1 = a[(i + 1) % a.size()];
      for (size_t r2 = r1; r2 < rings.size(); ++r2) {
        const auto& b = *rings[r2];
        for (size_t j = (r1 == r2 ? i + 1 : 0); j < b.size(); ++j) {
          const Point q0 = b[j];
          const Point q1 = b[(j + 1) % b.size()];
          bool adjacent_next = r1 == r2 && j == (i + 1) % a.size();
          bool adjacent_prev = r1 == r2 && i == (j + 1) % b.size();
          bool bad = false;
          if (adjacent_next || adjacent_prev) {
            // Shared vertex is fine; a fold-back (collinear overlap) is not.
            const Point shared = adjacent_next ? p1 : p0;
            const Point other_a = adjacent_next ? p0 : p1;
            const Point other_b = adjacent_next ? q1 : q0;
            if (orient_sign(other_a, shared, other_b) == 0 &&
                dot(other_a - shared, other_b - shared) > 0) {
              bad = true;
            }
            if (a.size() == 3 && adjacent_next && adjacent_prev) bad = false;
          } else {
            bad = segments_intersect(p0, p1, q0, q1);
          }
          if (bad) {
            return "edges " + edge_name(static_cast<int>(r1), i, a.size()) + " and " +
                   edge_name(static_cast<int>(r2), j, b.size()) + " intersect";
          }
        }
      }
    }
  }

  for (size_t r = 0; r < rings.size(); ++r) {
    if (std::abs(signed_area(*rings[r])) <= tol) {
      return ring_name(static_cast<int>(r)) + " has zero area";
    }
  }

  for (size_t h = 0; h < scene.holes.size(); ++h) {
    if (locate_in_ring(scene.holes[h][0], scene.outer) != Location::kInside) {
      return "hole" + std::to_string(h) + " is not strictly inside outer";
    }
    for (size_t g = 0; g < scene.holes.size(); ++g) {
      if (g == h) continue;
      if (locate_in_ring(scene.holes[h][0], scene.holes[g]) != Location::kOutside) {
        return "hole" + std::to_string(h) + " lies inside hole" + std::to_string(g);
      }
    }
  }
  return std::nullopt;
}

PolygonScene normalize_scene(PolygonScene scene) {
  if (auto defect = find_scene_defect(scene)) {
    throw SceneError("invalid scene: " + *defect);
  }
  if (signed_area(scene.outer) < 0) std::reverse(scene.outer.begin(), scene.outer.end());
  for (auto& h : scene.holes) {
    if (signed_area(h) > 0) std::reverse(h.begin(), h.end());
  }
  return scene;
}

namespace {

std::vector<Point> ring_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw SceneError(what + " must be an array of [x, y] pairs");
  std::vector<Point> ring;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw SceneError(what + " contains a malformed point");
    }
    ring.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return ring;
}

nlohmann::json ring_to_json(const std::vector<Point>& ring) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : ring) arr.push_back({p.x, p.y});
  return arr;
}

}  // namespace

PolygonScene scene_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("outer")) {
    throw SceneError("scene must be an object with an \"outer\" ring");
  }
  PolygonScene scene;
  scene.outer = ring_from_json(j.at("outer"), "outer");
  if (j.contains("holes")) {
    const auto& holes = j.at("holes");
    if (!holes.is_array()) throw SceneError("holes must be an array of rings");
    for (size_t i = 0; i < holes.size(); ++i) {
      scene.holes.push_back(ring_from_json(holes[i], "hole" + std::to_string(i)));
    }
  }
  return normalize_scene(std::move(scene));
}

nlohmann::json scene_to_json(const PolygonScene& scene) {
  nlohmann::json j;
  j["outer"] = ring_to_json(scene.outer);
  j["holes"] = nlohmann::json::array();
  for (const auto& h : scene.holes) j["holes"].push_back(ring_to_json(h));
  return j;
}

PolygonScene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SceneError("cannot open scene file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SceneError("scene file " + path + " is not valid JSON: " + e.what());
  }
  return scene_from_json(j);
}

MergedPolygon merge_holes_detailed(const PolygonScene& scene) {
  const std::vector<Point> flat = scene.flat_vertices();
  std::vector<int> hole_offset;
  int offset = static_cast<int>(scene.outer.size());
  for (const auto& h : scene.holes) {
    hole_offset.push_back(offset);
    offset += static_cast<int>(h.size());
  }

  std::vector<int> ring(scene.outer.size());
  for (size_t i = 0; i < ring.size(); ++i) ring[i] = static_cast<int>(i);
  std::vector<bool> merged(scene.holes.size(), false);
  std::vector<std::pair<int, int>> cut_pairs;  // flat indices
  const double tol = eps();

  auto blocked = [&](Point a, Point b) {
    auto check_ring = [&](const std::vector<Point>& pts) {
      const size_t n = pts.size();
      for (size_t i = 0; i < n; ++i) {
        const Point c = pts[i];
        const Point d = pts[(i + 1) % n];
        if (segments_properly_cross(a, b, c, d)) return true;
        if (!near(c, a, tol) && !near(c, b, tol) && on_segment(c, a, b, tol)) return true;
      }
      return false;
    };
    std::vector<Point> current;
    current.reserve(ring.size());
    for (int idx : ring) current.push_back(flat[idx]);
    if (check_ring(current)) return true;
    for (size_t h = 0; h < scene.holes.size(); ++h) {
      if (!merged[h] && check_ring(scene.holes[h])) return true;
    }
    return false;
  };

  for (size_t step = 0; step < scene.holes.size(); ++step) {
    double best = std::numeric_limits<double>::infinity();
    size_t best_hole = 0, best_hv = 0, best_k = 0;
    for (size_t h = 0; h < scene.holes.size(); ++h) {
      if (merged[h]) continue;
      const auto& hole = scene.holes[h];
      const size_t nh = hole.size();
      for (size_t hv = 0; hv < nh; ++hv) {
        const Point a = hole[hv];
        const Point ha = hole[(hv + nh - 1) % nh];
        const Point hb = hole[(hv + 1) % nh];
        for (size_t k = 0; k < ring.size(); ++k) {
          const Point b = flat[ring[k]];
          const double len = dist(a, b);
          if (len >= best || len <= tol) continue;
          const Point pa = flat[ring[(k + ring.size() - 1) % ring.size()]];
          const Point pb = flat[ring[(k + 1) % ring.size()]];
          if (!in_cone(pa, b, pb, a)) continue;
          if (!in_cone(ha, a, hb, b)) continue;
          if (blocked(a, b)) continue;
          best = len;
          best_hole = h;
          best_hv = hv;
          best_k = k;
        }
      }
    }
    if (!std::isfinite(best)) throw SceneError("internal: no cut diagonal found for a hole");

    const auto& hole = scene.holes[best_hole];
    const int base = hole_offset[best_hole];
    std::vector<int> next;
    next.reserve(ring.size() + hole.size() + 2);
    next.insert(next.end(), ring.begin(), ring.begin() + best_k + 1);
    for (size_t s = 0; s <= hole.size(); ++s) {
      next.push_back(base + static_cast<int>((best_hv + s) % hole.size()));
    }
    next.push_back(ring[best_k]);
    next.insert(next.end(), ring.begin() + best_k + 1, ring.end());
    cut_pairs.push_back({ring[best_k], base + static_cast<int>(best_hv)});
    ring = std::move(next);
    merged[best_hole] = true;
  }

  MergedPolygon out;
  out.origin = ring;
  out.vertices.reserve(ring.size());
  for (int idx : ring) out.vertices.push_back(flat[idx]);
  for (const auto& [u, h] : cut_pairs) {
    int iu = -1, ih = -1;
    for (size_t i = 0; i < ring.size(); ++i) {
      if (ring[i] == u && iu < 0) iu = static_cast<int>(i);
      if (ring[i] == h && ih < 0) ih = static_cast<int>(i);
    }
    out.cuts.push_back({iu, ih});
  }
  return out;
}

PolygonScene merge_holes(const PolygonScene& scene) {
  if (scene.holes.empty()) return scene;
  PolygonScene out;
  out.outer = merge_holes_detailed(scene).vertices;
  return out;
}

std::optional<std::string> find_weak_simplicity_defect(const std::vector<Point>& ring) {
  const size_t n = ring.size();
  if (n < 3) return "fewer than 3 vertices";
  const double tol = eps();
  for (size_t i = 0; i < n; ++i) {
    const Point a = ring[i];
    const Point b = ring[(i + 1) % n];
    if (near(a, b, tol)) return "degenerate edge " + std::to_string(i);
    for (size_t j = i + 1; j < n; ++j) {
      const Point c = ring[j];
      const Point d = ring[(j + 1) % n];
      if (segments_properly_cross(a, b, c, d)) {
        return "edges " + std::to_string(i) + " and " + std::to_string(j) + " cross";
      }
      const bool reversed_pair = near(a, d, tol) && near(b, c, tol);
      if (reversed_pair) continue;
      for (Point v : {c, d}) {
        if (!near(v, a, tol) && !near(v, b, tol) && on_segment(v, a, b, tol)) {
          return "vertex of edge " + std::to_string(j) + " lies on edge " + std::to_string(i);
        }
      }
      for (Point v : {a, b}) {
        if (!near(v, c, tol) && !near(v, d, tol) && on_segment(v, c, d, tol)) {
          return "vertex of edge " + std::to_string(i) + " lies on edge " + std::to_string(j);
        }
      }
    }
  }
  if (signed_area(ring) <= 0) return "ring is not counterclockwise";
  return std::nullopt;
}

}  // namespace gg
