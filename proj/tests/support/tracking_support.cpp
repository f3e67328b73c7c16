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

#include "support/tracking_support.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gg::testing {

TrackedScene::TrackedScene(const BuiltScene& scene, double r)
    : polygon(scene.polygon), env(PolygonScene{scene.polygon, {}}), tri(scene.tri), dep(scene.dep),
      classes(classify(tri, dep)), gag(build_gag(env, tri, dep, classes)),
      outcome(genalloc(env, tri, dep, classes, gag, r)) {
  if (outcome.feasible) critical = build_critical(env, tri, outcome.plan);
}

std::vector<std::unique_ptr<TrackedScene>> feasible_scenes(std::uint64_t seed, int count, int nmin, int nmax) {
  Rng rng(seed);
  std::vector<std::unique_ptr<TrackedScene>> out;
  for (int tries = 0; static_cast<int>(out.size()) < count && tries < 50 * count; ++tries) {
    BuiltScene b;
    b.polygon = random_simple_polygon(rng, std::uniform_int_distribution<int>(nmin, nmax)(rng));
    b.tri = triangulate(b.polygon);
    b.dep = deploy(b.tri);
    const Environment env(PolygonScene{b.polygon, {}});
    const auto gag = build_gag(env, b.tri, b.dep, classify(b.tri, b.dep));
    double w_max = 0.0;
    bool finite = true;
    for (const auto& e : gag.edges) {
      finite = finite && std::isfinite(e.weight);
      w_max = std::max(w_max, e.weight);
    }
    if (!finite) continue;
    if (w_max == 0.0) w_max = 1.0;
    for (double k : {1.5, 3.0, 10.0}) {
      auto s = std::make_unique<TrackedScene>(b, k * w_max);
      if (s->feasible()) {
        out.push_back(std::move(s));
        break;
      }
    }
  }
  return out;
}

Point random_point_in(const Environment& env, Rng& rng) {
  const Box& box = env.box();
  std::uniform_real_distribution<double> ux(box.xmin, box.xmax), uy(box.ymin, box.ymax);
  for (;;) {
    const Point p{ux(rng), uy(rng)};
    if (env.contains(p)) return p;
  }
}

Point random_point_in(const ArcRegion& region, Rng& rng) {
  const Box box = region.bbox();
  std::uniform_real_distribution<double> ux(box.xmin, box.xmax), uy(box.ymin, box.ymax);
  for (;;) {
    const Point p{ux(rng), uy(rng)};
    if (region.contains(p)) return p;
  }
}

namespace {

void append(IntruderPath& path, const GeodesicPath& leg) {
  for (Point p : leg.waypoints) {
    if (path.waypoints.empty() || dist(path.waypoints.back(), p) > 0.0) path.waypoints.push_back(p);
  }
}

}  // namespace

IntruderPath random_path(const Environment& env, Rng& rng, int legs) {
  IntruderPath path;
  Point at = random_point_in(env, rng);
  path.waypoints.push_back(at);
  for (int i = 0; i < legs; ++i) {
    const Point next = random_point_in(env, rng);
    append(path, env.geodesic(at, next));
    at = next;
  }
  return path;
}

std::vector<IntruderPath> sprint_paths(const TrackedScene& s, Rng& rng) {
  std::vector<IntruderPath> out;
  for (const GuardPlan& gp : s.outcome.plan.guards) {
    if (gp.u1.empty() || gp.u2.empty()) continue;
    const Point a = random_point_in(gp.u1, rng);
    const Point b = random_point_in(gp.u2, rng);
    IntruderPath there, back;
    there.waypoints.push_back(a);
    append(there, s.env.geodesic(a, b));
    back.waypoints.push_back(b);
    append(back, s.env.geodesic(b, a));
    out.push_back(std::move(there));
    out.push_back(std::move(back));
  }
  return out;
}

int brute_force_capacity(const TrackedScene& s, int t, int grid, int random_samples, Rng& rng) {
  std::vector<int> blockable, pulling;
  for (int g : s.classes.guards[t]) {
    const GuardCritical& gc = s.critical.guards[g];
    if (gc.parked) {
      if (s.tri.triangle_has_vertex(t, gc.park_vertex)) return -1;
      continue;
    }
    if (s.tri.triangle_has_vertex(t, gc.v2)) blockable.push_back(g);
    else pulling.push_back(g);
  }
  const auto tri_pts = s.tri.triangle_points(t);
  std::vector<Point> samples;
  const Box& box = s.env.box();
  for (int i = 0; i < grid; ++i) {
    for (int k = 0; k < grid; ++k) {
      samples.push_back({box.xmin + (box.xmax - box.xmin) * (i + 0.5) / grid,
                         box.ymin + (box.ymax - box.ymin) * (k + 0.5) / grid});
    }
  }
  for (int i = 0; i < random_samples; ++i) samples.push_back(random_point_in(s.env, rng));
  // A placement uncovers t iff every point avoids the u1 of pulling guards,
  // every blockable guard has a point within its reach, and a point is in t.
  std::set<std::pair<unsigned, bool>> signatures;
  for (Point p : samples) {
    if (!s.env.contains(p)) continue;
    bool free = true;
    for (int g : pulling) free = free && !s.critical.guards[g].u1.contains(p);
    if (!free) continue;
    unsigned mask = 0;
    for (size_t i = 0; i < blockable.size(); ++i) {
      const GuardCritical& gc = s.critical.guards[blockable[i]];
      if (gc.distance(p) < gc.reach) mask |= 1u << i;
    }
    signatures.insert({mask, locate_in_ring(p, tri_pts) == Location::kInside});
  }
  const std::vector<std::pair<unsigned, bool>> sig(signatures.begin(), signatures.end());
  const unsigned full = (1u << blockable.size()) - 1;
  const int m = static_cast<int>(sig.size());
  if (m == 0) return -1;
  for (int k = 1; k <= static_cast<int>(blockable.size()) + 1; ++k) {
    // Combinations of k signatures with repetition allowed.
    std::vector<int> idx(k, 0);
    for (;;) {
      unsigned mask = 0;
      bool inside = false;
      for (int i : idx) {
        mask |= sig[i].first;
        inside = inside || sig[i].second;
      }
      if (mask == full && inside) return k - 1;
      int j = k - 1;
      while (j >= 0 && idx[j] == m - 1) --j;
      if (j < 0) break;
      ++idx[j];
      for (int q = j + 1; q < k; ++q) idx[q] = idx[j];
    }
  }
  return -1;
}

}  // namespace gg::testing
