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
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>

#include "gallery_guard/tracking.hpp"

namespace gg {

namespace {

constexpr int kNoCover = std::numeric_limits<int>::max() / 2;

// Contained point of r farthest from its boundary on a grid over the bbox.
std::optional<Point> deep_point(const ArcRegion& r) {
  if (r.empty()) return std::nullopt;
  const Box box = r.bbox();
  for (int n : {24, 96, 384}) {
    std::optional<Point> best;
    double best_d = -1.0;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        const Point p{box.xmin + (box.xmax - box.xmin) * (i + 0.5) / n,
                      box.ymin + (box.ymax - box.ymin) * (k + 0.5) / n};
        if (!r.contains(p)) continue;
        const double d = r.boundary_distance(p);
        if (d > best_d) {
          best_d = d;
          best = p;
        }
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

struct SetInfo {
  ArcRegion region;  // common part of the members' offsets inside Z
  bool meets = false;
};

std::vector<int> members(uint32_t mask, const std::vector<int>& ids) {
  std::vector<int> out;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (mask & (1u << i)) out.push_back(ids[i]);
  }
  return out;
}

class CoverSolver {
 public:
  explicit CoverSolver(std::vector<uint32_t> maximal) : maximal_(std::move(maximal)) {}

  // Minimum number of family sets covering rem.
  int solve(uint32_t rem) {
    if (rem == 0) return 0;
    if (auto it = memo_.find(rem); it != memo_.end()) return it->second.first;
    const uint32_t low = rem & (~rem + 1);
    int best = kNoCover;
    uint32_t pick = 0;
    for (uint32_t s : maximal_) {
      if (!(s & low)) continue;
      const int sub = solve(rem & ~s);
      if (sub + 1 < best) {
        best = sub + 1;
        pick = s & rem;
      }
    }
    memo_[rem] = {best, pick};
    return best;
  }

  std::vector<uint32_t> sets(uint32_t rem) {
    std::vector<uint32_t> out;
    while (rem) {
      solve(rem);
      const uint32_t s = memo_[rem].second;
      out.push_back(s);
      rem &= ~s;
    }
    return out;
  }

 private:
  std::vector<uint32_t> maximal_;
  std::unordered_map<uint32_t, std::pair<int, uint32_t>> memo_;
};

}  // namespace

CapacityReport capacity(const Environment& env, const Triangulation& tri, const TriangleClasses& classes,
                        const CriticalStructure& critical) {
  CapacityReport report;
  const ArcRegion scene = scene_region(env);
  const double scene_area = scene.area();
  auto empty = [&](const ArcRegion& r) { return area_empty(r, scene_area, kEmptyAreaFraction); };

  for (int t : classes.nonsafe_triangles()) {
    CapacityEntry entry;
    entry.triangle = t;
    entry.guards = classes.guards[t];
    const ArcRegion tri_region = ArcRegion::from_polygon(tri.triangle_points(t));
    bool unbounded = false;
    std::vector<ArcRegion> pulls;
    for (int g : entry.guards) {
      const GuardCritical& gc = critical.guards[g];
      if (gc.parked) {
        if (tri.triangle_has_vertex(t, gc.park_vertex)) unbounded = true;
        entry.always_blocked.push_back(g);
      } else if (tri.triangle_has_vertex(t, gc.v2) && !tri.triangle_has_vertex(t, gc.v1)) {
        entry.blockable.push_back(g);
      } else if (tri.triangle_has_vertex(t, gc.v1) && !tri.triangle_has_vertex(t, gc.v2)) {
        entry.always_blocked.push_back(g);
        pulls.push_back(gc.u1);
      } else {
        unbounded = true;
      }
    }
    const ArcRegion zone = pulls.empty() ? scene : region_boolean(BooleanOp::kDifference, scene, region_union(pulls));
    const ArcRegion zone_t = region_boolean(BooleanOp::kIntersection, tri_region, zone);
    if (empty(zone_t)) unbounded = true;

    const size_t m = entry.blockable.size();
    if (m > 32) throw DomainError("capacity supports at most 32 guards per triangle");
    std::vector<ArcRegion> base;
    for (size_t i = 0; i < m && !unbounded; ++i) {
      base.push_back(region_boolean(BooleanOp::kIntersection, critical.guards[entry.blockable[i]].offset, zone));
      if (empty(base.back())) unbounded = true;
    }
    if (unbounded) {
      entry.n_intruders = -1;
      report.triangles.push_back(std::move(entry));
      continue;
    }

    // Nonempty common regions are closed under taking subsets.
    std::map<uint32_t, SetInfo> family;
    auto add_set = [&](uint32_t mask, ArcRegion region) {
      SetInfo info;
      info.meets = !empty(region_boolean(BooleanOp::kIntersection, region, tri_region));
      info.region = std::move(region);
      family[mask] = std::move(info);
    };
    entry.exact = m <= static_cast<size_t>(kExactCoverGuards);
    if (entry.exact) {
      auto grow = [&](auto&& self, uint32_t mask, const ArcRegion& region, size_t next) -> void {
        for (size_t i = next; i < m; ++i) {
          ArcRegion common = region_boolean(BooleanOp::kIntersection, region, base[i]);
          if (empty(common)) continue;
          const uint32_t bigger = mask | (1u << i);
          add_set(bigger, common);
          self(self, bigger, common, i + 1);
        }
      };
      for (size_t i = 0; i < m; ++i) {
        add_set(1u << i, base[i]);
        grow(grow, 1u << i, base[i], i + 1);
      }
    } else {
      // Greedy: grow a set from the lowest unused guard.
      std::vector<bool> used(m, false);
      for (size_t i = 0; i < m; ++i) {
        if (used[i]) continue;
        uint32_t mask = 1u << i;
        ArcRegion common = base[i];
        used[i] = true;
        for (size_t k = i + 1; k < m; ++k) {
          if (used[k]) continue;
          ArcRegion next = region_boolean(BooleanOp::kIntersection, common, base[k]);
          if (empty(next)) continue;
          mask |= 1u << k;
          common = std::move(next);
          used[k] = true;
        }
        add_set(mask, std::move(common));
      }
    }

    std::vector<uint32_t> maximal;
    for (const auto& [mask, info] : family) {
      const bool dominated = std::any_of(family.begin(), family.end(), [&](const auto& other) {
        return other.first != mask && (other.first & mask) == mask;
      });
      if (!dominated) {
        maximal.push_back(mask);
        entry.family.push_back(members(mask, entry.blockable));
      }
    }

    const uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
    CoverSolver solver(maximal);
    const int c0 = solver.solve(full);
    // c1: covers with a set whose common region meets t.
    int c1 = kNoCover;
    uint32_t meet_mask = 0;
    for (const auto& [mask, info] : family) {
      if (!info.meets) continue;
      const int c = 1 + solver.solve(full & ~mask);
      if (c < c1) {
        c1 = c;
        meet_mask = mask;
      }
    }

    std::vector<uint32_t> chosen;
    bool meeting = false;
    if (c1 <= c0) {
      chosen = solver.sets(full & ~meet_mask);
      chosen.insert(chosen.begin(), meet_mask);
      meeting = true;
      entry.n_intruders = c1 - 1;
    } else {
      chosen = solver.sets(full);
      entry.n_intruders = c0;
    }
    for (size_t i = 0; i < chosen.size(); ++i) {
      const SetInfo& info = family.at(chosen[i]);
      entry.cover.push_back(members(chosen[i], entry.blockable));
      entry.meets_triangle.push_back(info.meets);
      const ArcRegion where =
          meeting && i == 0 ? region_boolean(BooleanOp::kIntersection, info.region, tri_region) : info.region;
      if (auto p = deep_point(where)) entry.witness.push_back(*p);
    }
    if (!meeting) {
      if (auto p = deep_point(zone_t)) entry.witness.push_back(*p);
    }

    if (report.n_star < 0 || entry.n_intruders < report.n_star) {
      report.n_star = entry.n_intruders;
      report.witness_triangle = t;
    }
    report.triangles.push_back(std::move(entry));
  }
  return report;
}

}  // namespace gg
