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

#include "gallery_guard/allocation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <memory>
#include <set>

#include "gallery_guard/distance_field.hpp"

namespace gg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Allocator {
 public:
  Allocator(const Environment& env, const Triangulation& tri, const Deployment& dep,
            const TriangleClasses& classes, const GuardAdjacencyGraph& gag, double r)
      : env_(env), tri_(tri), dep_(dep), classes_(classes), gag_(gag) {
    plan_.r = r;
    plan_.orientation.assign(gag.edges.size(), Orientation::kNone);
    plan_.deleted.assign(gag.edges.size(), false);
    for (const Guard& g : dep.guards) {
      GuardPlan gp;
      gp.guard = g.id;
      gp.length = g.length;
      gp.reach = g.length / r;
      plan_.guards.push_back(gp);
    }
    state_.assign(dep.guards.size(), State::kIdle);
    for (int t : classes.nonsafe_triangles()) {
      plan_.unassigned[t] = ArcRegion::from_polygon(tri.triangle_points(t));
    }
  }

  AllocationOutcome run() {
    AllocationOutcome out;
    refresh_ready();
    for (;;) {
      while (!ready_.empty()) {
        const auto [g, slot] = ready_.front();
        ready_.pop_front();
        plan_.order.push_back(g);
        const int failed = localloc(g, slot);
        if (failed >= 0) {
          out.failed_triangle = failed;
          out.witness = plan_.unassigned[failed];
          out.plan = std::move(plan_);
          return out;
        }
        refresh_ready();
      }
      if (std::none_of(state_.begin(), state_.end(), [](State s) { return s == State::kIdle; })) break;
      arbitalloc();
    }
    for (const auto& [t, free] : plan_.unassigned) {
      if (!area_empty(free, tri_.triangle_area(t), kEmptyAreaFraction)) {
        out.failed_triangle = t;
        out.witness = free;
        out.plan = std::move(plan_);
        return out;
      }
    }
    for (GuardPlan& gp : plan_.guards) {
      gp.type = classify_guard(gp, classes_);
      gp.margin = (gp.u1.empty() || gp.u2.empty()) ? kInf : set_distance(env_, gp.u1, gp.u2);
    }
    out.feasible = true;
    out.plan = std::move(plan_);
    return out;
  }

 private:
  enum class State { kIdle, kReady, kAllocated };

  bool effective(int g, int t) const { return !excluded_.count({g, t}); }

  std::vector<int> side(int g, int slot) const {
    std::vector<int> out;
    for (int t : classes_.nonsafe[g][slot]) {
      if (effective(g, t)) out.push_back(t);
    }
    return out;
  }

  int vertex_of(int g, int slot) const {
    return slot == 0 ? dep_.guards[g].diag.first : dep_.guards[g].diag.second;
  }

  // Slots ordered by vertex index.
  std::array<int, 2> slot_order(int g) const {
    return vertex_of(g, 0) <= vertex_of(g, 1) ? std::array<int, 2>{0, 1} : std::array<int, 2>{1, 0};
  }

  // Every other guard still able to cover a triangle on this side is done.
  bool ready_at(int g, int slot) const {
    for (int t : side(g, slot)) {
      for (int k : classes_.guards[t]) {
        if (k != g && effective(k, t) && state_[k] != State::kAllocated) return false;
      }
    }
    return true;
  }

  void refresh_ready() {
    for (size_t g = 0; g < state_.size(); ++g) {
      if (state_[g] != State::kIdle) continue;
      for (int slot : slot_order(static_cast<int>(g))) {
        if (ready_at(static_cast<int>(g), slot)) {
          state_[g] = State::kReady;
          ready_.push_back({static_cast<int>(g), slot});
          break;
        }
      }
    }
  }

  // Returns the triangle with a nonempty R_empty, or -1.
  int localloc(int g, int slot) {
    GuardPlan& gp = plan_.guards[g];
    gp.slot1 = slot;
    gp.v1 = vertex_of(g, slot);
    gp.v2 = vertex_of(g, 1 - slot);
    std::vector<ArcRegion> parts;
    for (int t : side(g, slot)) {
      ArcRegion& free = plan_.unassigned[t];
      gp.r1[t] = free;
      if (!free.empty()) parts.push_back(free);
      free = ArcRegion();
      for (size_t e = 0; e < gag_.edges.size(); ++e) {
        const GagEdge& edge = gag_.edges[e];
        if (edge.guard != g || plan_.deleted[e]) continue;
        if (slot == 0 && edge.j == t) plan_.orientation[e] = Orientation::kForward;
        if (slot == 1 && edge.k == t) plan_.orientation[e] = Orientation::kBackward;
      }
    }
    gp.u1 = parts.size() == 1 ? parts[0] : region_union(parts);
    state_[g] = State::kAllocated;
    gp.allocated = true;

    std::unique_ptr<RegionField> field;
    if (!gp.u1.empty()) field = std::make_unique<RegionField>(env_, gp.u1);
    std::vector<ArcRegion> parts2;
    int failed = -1;
    for (int t : side(g, 1 - slot)) {
      ArcRegion& free = plan_.unassigned[t];
      ArcRegion r2;
      if (!free.empty()) r2 = field ? outside_offset(*field, gp.reach, free) : free;
      if (!r2.empty()) {
        free = field ? region_boolean(BooleanOp::kDifference, free, r2) : ArcRegion();
        parts2.push_back(r2);
      }
      gp.r2[t] = std::move(r2);
      bool all_done = true;
      for (int k : classes_.guards[t]) {
        if (effective(k, t) && state_[k] != State::kAllocated) all_done = false;
      }
      if (failed < 0 && all_done && !area_empty(free, tri_.triangle_area(t), kEmptyAreaFraction)) failed = t;
    }
    gp.u2 = parts2.size() == 1 ? parts2[0] : region_union(parts2);
    return failed;
  }

  void arbitalloc() {
    int g = 0;
    while (state_[g] != State::kIdle) ++g;
    int best_slot = -1;
    double best_area = -1.0;
    for (int slot : slot_order(g)) {
      double area = 0.0;
      for (int t : side(g, slot)) area += plan_.unassigned[t].area();
      if (area > best_area) {
        best_area = area;
        best_slot = slot;
      }
    }
    for (int t : side(g, best_slot)) {
      for (int k : classes_.guards[t]) {
        if (k == g || state_[k] != State::kIdle || !effective(k, t)) continue;
        excluded_.insert({k, t});
        for (size_t e = 0; e < gag_.edges.size(); ++e) {
          const GagEdge& edge = gag_.edges[e];
          if (edge.guard == k && (edge.j == t || edge.k == t)) plan_.deleted[e] = true;
        }
      }
    }
    plan_.arbitrary.push_back(g);
    state_[g] = State::kReady;
    ready_.push_back({g, best_slot});
  }

  const Environment& env_;
  const Triangulation& tri_;
  const Deployment& dep_;
  const TriangleClasses& classes_;
  const GuardAdjacencyGraph& gag_;
  AllocationPlan plan_;
  std::vector<State> state_;
  std::deque<std::pair<int, int>> ready_;
  std::set<std::pair<int, int>> excluded_;  // (guard, triangle) edges deleted by arbitalloc
};

}  // namespace

const char* to_string(GuardType type) {
  switch (type) {
    case GuardType::kType0:
      return "type0";
    case GuardType::kType1:
      return "type1";
    case GuardType::kType2:
      return "type2";
  }
  return "unknown";
}

int AllocationPlan::owner(int t, Point p) const {
  for (const GuardPlan& gp : guards) {
    for (const auto* regions : {&gp.r1, &gp.r2}) {
      const auto it = regions->find(t);
      if (it == regions->end() || it->second.empty()) continue;
      if (it->second.contains(p) || it->second.on_boundary(p, 1e-9 * (1.0 + it->second.bbox().diagonal()))) {
        return gp.guard;
      }
    }
  }
  return -1;
}

AllocationOutcome genalloc(const Environment& env, const Triangulation& tri, const Deployment& dep,
                           const TriangleClasses& classes, const GuardAdjacencyGraph& gag, double r) {
  if (!(r > 0.0)) throw DomainError("genalloc requires r > 0");
  return Allocator(env, tri, dep, classes, gag, r).run();
}

GuardType classify_guard(const GuardPlan& plan, const TriangleClasses& classes) {
  if (plan.u1.empty() || plan.u2.empty()) return GuardType::kType0;
  for (const auto& [t, region] : plan.r1) {
    if (classes.kind[t] != TriangleKind::kUnsafe) return GuardType::kType2;
  }
  return GuardType::kType1;
}

PlanReport verify_plan(const Environment& env, const Triangulation& tri, const TriangleClasses& classes,
                       const AllocationPlan& plan) {
  PlanReport report;
  auto fail = [&](PlanViolation v) {
    report.ok = false;
    report.violations.push_back(std::move(v));
  };
  for (const GuardPlan& gp : plan.guards) {
    if (gp.u1.empty() || gp.u2.empty()) continue;
    const double d = set_distance(env, gp.u1, gp.u2);
    const double need = gp.length / plan.r;
    if (d < need - kMarginSlack) fail({"margin", gp.guard, -1, d, need});
  }
  for (int t : classes.nonsafe_triangles()) {
    const ArcRegion tri_region = ArcRegion::from_polygon(tri.triangle_points(t));
    const double area = tri.triangle_area(t);
    const double tol = kCoverageRelTol * area;
    std::vector<std::pair<int, const ArcRegion*>> parts;
    for (const GuardPlan& gp : plan.guards) {
      for (const auto* regions : {&gp.r1, &gp.r2}) {
        const auto it = regions->find(t);
        if (it != regions->end() && !it->second.empty()) parts.push_back({gp.guard, &it->second});
      }
    }
    double sum = 0.0;
    for (const auto& [g, region] : parts) {
      const double a = region->area();
      sum += a;
      const double inside = region_boolean(BooleanOp::kIntersection, *region, tri_region).area();
      if (a - inside > tol) fail({"containment", g, t, inside, a});
    }
    if (std::abs(sum - area) > tol) fail({"coverage", -1, t, sum, area});
    for (size_t a = 0; a < parts.size(); ++a) {
      for (size_t b = a + 1; b < parts.size(); ++b) {
        const double overlap = region_boolean(BooleanOp::kIntersection, *parts[a].second, *parts[b].second).area();
        if (overlap > tol) fail({"overlap", parts[b].first, t, overlap, 0.0});
      }
    }
  }
  return report;
}

}  // namespace gg
