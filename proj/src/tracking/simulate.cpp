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
#include <cmath>
#include <set>

#include "gallery_guard/tracking.hpp"

namespace gg {

double IntruderPath::length() const {
  double total = 0.0;
  for (size_t i = 1; i < waypoints.size(); ++i) total += dist(waypoints[i - 1], waypoints[i]);
  return total;
}

Point IntruderPath::at(double s) const {
  if (waypoints.empty()) throw DomainError("intruder path has no waypoints");
  if (s <= 0.0) return waypoints.front();
  for (size_t i = 1; i < waypoints.size(); ++i) {
    const double len = dist(waypoints[i - 1], waypoints[i]);
    if (s <= len) return len > 0.0 ? lerp(waypoints[i - 1], waypoints[i], s / len) : waypoints[i];
    s -= len;
  }
  return waypoints.back();
}

int advance_guards(const CriticalStructure& critical, const std::vector<Point>& intruders, double cap,
                   std::vector<Point>& guards, double& max_ratio) {
  int capped = 0;
  for (size_t g = 0; g < guards.size(); ++g) {
    const Point target = guard_position(critical.guards[g], intruders);
    const double want = dist(guards[g], target);
    max_ratio = std::max(max_ratio, want / cap);
    if (want > cap * (1.0 + 1e-9)) {
      ++capped;
      guards[g] = guards[g] + (target - guards[g]) * (cap / want);
    } else {
      guards[g] = target;
    }
  }
  return capped;
}

std::vector<int> unseen_triangles(const Environment& env, const Triangulation& tri, const TriangleClasses& classes,
                                  const Deployment& dep, const std::vector<Point>& guards,
                                  const std::vector<Point>& intruders, double slack) {
  std::set<int> uncovered;
  for (Point p : intruders) {
    const auto tris = locate_triangles(tri, p, 1e-9 * (1.0 + env.diameter()));
    bool seen = false;
    for (int k : tris) {
      if (classes.safe(k) || !covered_by(tri, classes, k, guards, dep, slack).empty()) {
        seen = true;
        break;
      }
    }
    if (!seen) uncovered.insert(tris.begin(), tris.end());
  }
  return {uncovered.begin(), uncovered.end()};
}

std::vector<std::vector<bool>> visibility(const Environment& env, const std::vector<Point>& guards,
                                          const std::vector<Point>& intruders) {
  std::vector<std::vector<bool>> out(guards.size(), std::vector<bool>(intruders.size(), false));
  for (size_t g = 0; g < guards.size(); ++g) {
    for (size_t i = 0; i < intruders.size(); ++i) out[g][i] = env.segment_clear(guards[g], intruders[i]);
  }
  return out;
}

SimulationResult simulate_frames(const Environment& env, const Triangulation& tri, const Deployment& dep,
                                 const TriangleClasses& classes, const AllocationPlan& plan,
                                 const CriticalStructure& critical, const std::vector<IntruderFrame>& frames,
                                 double v_e, double slack, bool record_trace, int record_every) {
  if (!(v_e > 0.0)) throw DomainError("simulation needs v_e > 0");
  if (record_every < 1) throw DomainError("record_every must be positive");
  if (critical.guards.size() != dep.guards.size()) throw DomainError("critical structure does not match deployment");
  double max_gap = 0.0;
  for (size_t k = 1; k < frames.size(); ++k) {
    const double gap = frames[k].t - frames[k - 1].t;
    if (!(gap > 0.0)) throw DomainError("frame times must increase");
    if (frames[k].intruders.size() != frames[0].intruders.size()) throw DomainError("intruder count changed");
    max_gap = std::max(max_gap, gap);
  }
  const double v_g = plan.r * v_e;

  SimulationResult out;
  out.slack = slack >= 0.0 ? slack : max_gap * (v_e + v_g);
  std::vector<Point> guards(critical.guards.size());
  const int last = static_cast<int>(frames.size()) - 1;
  for (int step = 0; step <= last; ++step) {
    const IntruderFrame& frame = frames[step];
    if (step == 0) {
      for (size_t g = 0; g < guards.size(); ++g) guards[g] = guard_position(critical.guards[g], frame.intruders);
    } else {
      out.speed_events +=
          advance_guards(critical, frame.intruders, v_g * (frame.t - frames[step - 1].t), guards, out.max_step_ratio);
    }
    auto uncovered = unseen_triangles(env, tri, classes, dep, guards, frame.intruders, out.slack);
    ++out.steps;
    if (!uncovered.empty()) {
      ++out.uncovered_steps;
      if (!out.first_uncovered) {
        out.first_uncovered = frame.t;
        out.first_uncovered_triangles = uncovered;
      }
    }
    if (record_trace && (step % record_every == 0 || step == last)) {
      TraceStep rec;
      rec.t = frame.t;
      rec.intruders = frame.intruders;
      rec.guards = guards;
      rec.visible = visibility(env, guards, frame.intruders);
      rec.uncovered = std::move(uncovered);
      out.trace.push_back(std::move(rec));
    }
  }
  return out;
}

SimulationResult simulate(const Environment& env, const Triangulation& tri, const Deployment& dep,
                          const TriangleClasses& classes, const AllocationPlan& plan,
                          const CriticalStructure& critical, const std::vector<IntruderPath>& paths,
                          const SimulationConfig& config) {
  if (!(config.dt > 0.0)) throw DomainError("simulation needs dt > 0");
  if (!(config.v_e > 0.0)) throw DomainError("simulation needs v_e > 0");
  if (config.record_every < 1) throw DomainError("record_every must be positive");
  double longest = 0.0;
  for (const IntruderPath& path : paths) {
    if (path.waypoints.empty()) throw DomainError("intruder path has no waypoints");
    if (!env.contains(path.waypoints.front())) throw DomainError("intruder starts outside the scene");
    for (size_t i = 1; i < path.waypoints.size(); ++i) {
      if (!env.segment_clear(path.waypoints[i - 1], path.waypoints[i])) {
        throw DomainError("intruder path leaves the scene");
      }
    }
    longest = std::max(longest, path.length());
  }
  const double duration = config.duration >= 0.0 ? config.duration : longest / config.v_e;
  const int last = static_cast<int>(std::ceil(duration / config.dt - 1e-9));
  std::vector<IntruderFrame> frames(last + 1);
  for (int step = 0; step <= last; ++step) {
    frames[step].t = std::min(step * config.dt, duration);
    for (const IntruderPath& path : paths) frames[step].intruders.push_back(path.at(config.v_e * frames[step].t));
  }
  // The clamped final frame can sit closer than dt to its predecessor.
  if (last >= 1 && !(frames[last].t > frames[last - 1].t)) frames.pop_back();
  return simulate_frames(env, tri, dep, classes, plan, critical, frames, config.v_e,
                         config.dt * (config.v_e + plan.r * config.v_e), config.record_trace, config.record_every);
}

}  // namespace gg
