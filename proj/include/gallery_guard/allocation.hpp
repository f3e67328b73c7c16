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

#include <map>
#include <string>
#include <vector>

#include "gallery_guard/arc_region.hpp"
#include "gallery_guard/guard_graph.hpp"

namespace gg {

enum class GuardType { kType0, kType1, kType2 };

const char* to_string(GuardType type);

struct GuardPlan {
  int guard = 0;
  int slot1 = 0;     // endpoint slot labeled v_1 (0: diag.first)
  int v1 = -1;       // vertex index of v_1
  int v2 = -1;
  double length = 0.0;
  double reach = 0.0;  // d_I = length / r
  std::map<int, ArcRegion> r1;  // triangle -> R_j^1
  std::map<int, ArcRegion> r2;  // triangle -> R_j^2
  ArcRegion u1;
  ArcRegion u2;
  GuardType type = GuardType::kType0;
  double margin = 0.0;  // d(u1, u2); +inf when either is empty
  bool allocated = false;
};

struct AllocationPlan {
  double r = 0.0;
  std::vector<GuardPlan> guards;
  std::vector<int> order;             // guards in processing order
  std::vector<int> arbitrary;         // guards chosen by arbitalloc
  std::vector<Orientation> orientation;
  std::vector<bool> deleted;          // G# edges removed by arbitalloc
  std::map<int, ArcRegion> unassigned;  // remaining free part per non-safe triangle

  // Guard whose region in triangle t contains p, or -1.
  int owner(int t, Point p) const;
};

struct AllocationOutcome {
  bool feasible = false;
  AllocationPlan plan;  // partial when infeasible
  int failed_triangle = -1;
  ArcRegion witness;    // R_empty(j) when infeasible
};

// The R_empty test treats areas below this fraction of the triangle as empty.
inline constexpr double kEmptyAreaFraction = 1e-9;

AllocationOutcome genalloc(const Environment& env, const Triangulation& tri, const Deployment& dep,
                           const TriangleClasses& classes, const GuardAdjacencyGraph& gag, double r);

// Type0: one side empty; Type1: all side-1 non-safe triangles unsafe.
GuardType classify_guard(const GuardPlan& plan, const TriangleClasses& classes);

struct PlanViolation {
  std::string kind;  // "margin", "coverage", "overlap", "containment"
  int guard = -1;
  int triangle = -1;
  double value = 0.0;
  double required = 0.0;
};

struct PlanReport {
  bool ok = true;
  std::vector<PlanViolation> violations;
};

inline constexpr double kMarginSlack = 1e-9;
inline constexpr double kCoverageRelTol = 1e-6;

// Independent re-check of a plan: margins from set_distance and area-based
// partition of every non-safe triangle.
PlanReport verify_plan(const Environment& env, const Triangulation& tri, const TriangleClasses& classes,
                       const AllocationPlan& plan);

}  // namespace gg
