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

#include <memory>
#include <optional>
#include <vector>

#include "gallery_guard/allocation.hpp"
#include "gallery_guard/distance_field.hpp"

namespace gg {

// Critical curves of one guard. s_int bounds u1; s_ext is the part of the
// d_I level set of d(., u1) outside u1; band is C_1 = offset \ interior(u1).
struct GuardCritical {
  int guard = 0;
  int v1 = -1, v2 = -1;  // vertex indices
  Point p1, p2;
  double reach = 0.0;    // d_I
  bool parked = false;   // Type0: never leaves park
  Point park;
  int park_vertex = -1;
  ArcRegion u1;
  std::vector<Edge> s_int;
  std::vector<Edge> s_ext;
  ArcRegion offset;  // u1 plus band (closed)
  ArcRegion band;
  std::shared_ptr<const RegionField> field;  // null when u1 is empty

  // d(s_int, p) outside u1 and 0 inside; +inf when u1 is empty.
  double distance(Point p) const;
};

struct CriticalStructure {
  std::vector<GuardCritical> guards;

  // Extended critical region of guard g relative to triangle t, pointwise.
  bool in_extended(const Triangulation& tri, int g, int t, Point p) const;
  // Same as a region, clipped to the scene.
  ArcRegion extended(const Environment& env, const Triangulation& tri, int g, int t) const;
};

CriticalStructure build_critical(const Environment& env, const Triangulation& tri, const AllocationPlan& plan);

// Motion law: v1 when an intruder is in u1, v2 when none is within d_I of
// u1, linear in the smallest intruder distance in between.
Point guard_position(const GuardCritical& gc, const std::vector<Point>& intruders);

// Guards of G(t) sitting within tol of a vertex of t.
std::vector<int> covered_by(const Triangulation& tri, const TriangleClasses& classes, int t,
                            const std::vector<Point>& guard_positions, const Deployment& dep, double tol);

struct CoverageCertificate {
  int triangle = -1;
  bool holds = false;          // common part of the extended regions in t is empty
  double common_area = 0.0;
};

// Static coverage check per non-safe triangle: the extended regions of its
// guards share no point of the triangle.
std::vector<CoverageCertificate> coverage_certificates(const Environment& env, const Triangulation& tri,
                                                       const TriangleClasses& classes,
                                                       const CriticalStructure& critical);

// Triangles whose closure contains p (within tol).
std::vector<int> locate_triangles(const Triangulation& tri, Point p, double tol);

struct IntruderPath {
  std::vector<Point> waypoints;
  double length() const;
  // Point at arc length s, clamped to the ends.
  Point at(double s) const;
};

struct SimulationConfig {
  double v_e = 1.0;
  double dt = 0.0;         // required
  double duration = -1.0;  // negative: until every path is finished
  bool record_trace = true;
  int record_every = 1;
};

struct TraceStep {
  double t = 0.0;
  std::vector<Point> intruders;
  std::vector<Point> guards;
  std::vector<std::vector<bool>> visible;  // [guard][intruder]
  std::vector<int> uncovered;              // occupied non-safe triangles left unseen
};

struct SimulationResult {
  std::vector<TraceStep> trace;
  int steps = 0;
  int uncovered_steps = 0;
  std::optional<double> first_uncovered;
  std::vector<int> first_uncovered_triangles;
  int speed_events = 0;          // steps where the law asked for more than v_g * dt
  double max_step_ratio = 0.0;   // max commanded step / (v_g * dt)
  double slack = 0.0;            // endpoint tolerance used for coverage
};

// Discrete-time execution with guards starting at their commanded
// positions. Intruders advance v_e * dt along their paths; guards move
// toward the law's target by at most v_g * dt with v_g = r * v_e. An
// intruder is seen when some triangle containing it is safe or has a guard
// within dt * (v_e + v_g) of one of its vertices.
SimulationResult simulate(const Environment& env, const Triangulation& tri, const Deployment& dep,
                          const TriangleClasses& classes, const AllocationPlan& plan,
                          const CriticalStructure& critical, const std::vector<IntruderPath>& paths,
                          const SimulationConfig& config);

// Intruder positions at time t; frames are sampled in increasing t.
struct IntruderFrame {
  double t = 0.0;
  std::vector<Point> intruders;
};

// Moves each guard toward the law's target by at most cap. Returns the
// number of guards whose commanded step exceeded cap; max_ratio is raised to
// the largest commanded step / cap.
int advance_guards(const CriticalStructure& critical, const std::vector<Point>& intruders, double cap,
                   std::vector<Point>& guards, double& max_ratio);

// Non-safe triangles containing an intruder that no guard sees, sorted.
std::vector<int> unseen_triangles(const Environment& env, const Triangulation& tri, const TriangleClasses& classes,
                                  const Deployment& dep, const std::vector<Point>& guards,
                                  const std::vector<Point>& intruders, double slack);

// [guard][intruder] line of sight.
std::vector<std::vector<bool>> visibility(const Environment& env, const std::vector<Point>& guards,
                                          const std::vector<Point>& intruders);

// Same rules as simulate over explicitly sampled intruder positions. Frame 0
// places guards at their targets; the cap at frame k is v_g times the gap to
// frame k - 1. A negative slack means the largest gap times (v_e + v_g).
SimulationResult simulate_frames(const Environment& env, const Triangulation& tri, const Deployment& dep,
                                 const TriangleClasses& classes, const AllocationPlan& plan,
                                 const CriticalStructure& critical, const std::vector<IntruderFrame>& frames,
                                 double v_e, double slack = -1.0, bool record_trace = true,
                                 int record_every = 1);

// Intruders placed in Z, the part of the scene outside u1 of every guard
// that covers t from v1, keep those guards away from t. Each guard covering
// t from v2 needs an intruder in its offset. t is uncovered once both hold
// and one intruder sits in t.
struct CapacityEntry {
  int triangle = -1;
  std::vector<int> guards;                 // G(t)
  std::vector<int> always_blocked;         // v1-side or parked away from t
  std::vector<int> blockable;              // v2-side: need an intruder in their offset
  std::vector<std::vector<int>> family;    // maximal blockable sets with a common region in Z
  std::vector<std::vector<int>> cover;     // minimum cover chosen
  std::vector<bool> meets_triangle;        // per cover set: common region meets t
  std::vector<Point> witness;              // one point per cover set, then one in t if needed
  int n_intruders = 0;                     // n_I(t); -1 when t can never be left uncovered
  bool exact = true;                       // false when the greedy fallback was used
};

struct CapacityReport {
  std::vector<CapacityEntry> triangles;
  int n_star = -1;       // min of the bounded n_I; -1 when none is bounded
  int witness_triangle = -1;
};

inline constexpr int kExactCoverGuards = 20;

CapacityReport capacity(const Environment& env, const Triangulation& tri, const TriangleClasses& classes,
                        const CriticalStructure& critical);

}  // namespace gg
