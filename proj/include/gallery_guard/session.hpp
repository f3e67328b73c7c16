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
#include <mutex>
#include <string>
#include <vector>

#include "gallery_guard/pipeline.hpp"

namespace gg {

// One interactive game over a shared World. Every public call locks, so a
// session is a single sequential command stream.
//
// Messages (JSON objects, by "type"):
//   move_intruder {id, target: [x, y], dt}   advance time by dt
//   snapshot      {critical_curves?: bool}
//   reset         {}
// Replies are snapshot frames or {"type": "error", "message": ...}; an error
// leaves the session untouched.
class Session {
 public:
  // Throws DomainError when the plan is infeasible or a spawn lies outside
  // the scene.
  Session(std::string id, std::shared_ptr<const World> world, double v_e, std::vector<Point> spawns);

  Json handle(const Json& message);
  Json snapshot(bool critical_curves = false) const;
  void reset();

  // Intruder positions after every accepted move; frame 0 is the spawn.
  std::vector<IntruderFrame> history() const;
  const std::string& id() const { return id_; }
  double v_e() const { return v_e_; }
  double v_g() const { return v_e_ * world_->r(); }
  const World& world() const { return *world_; }

 private:
  Json apply(const Json& message);
  Json snapshot_locked(bool critical_curves) const;
  void reset_locked();

  std::string id_;
  std::shared_ptr<const World> world_;
  double v_e_;
  std::vector<Point> spawns_;

  mutable std::mutex mu_;
  double t_ = 0.0;
  std::vector<Point> intruders_;
  std::vector<Point> guards_;
  std::vector<IntruderFrame> history_;
  double last_dt_ = 0.0;
  bool clamped_ = false;  // last move exceeded v_e * dt or left the scene
  int capped_guards_ = 0;
  double max_step_ratio_ = 0.0;
};

// Default spawns: first waypoint of each scenario path, else the centroid of
// triangle 0.
std::vector<Point> default_spawns(const World& world, const Scenario& scenario);

// Point at arc length s along the geodesic from a to b, clamped to b.
Point walk_geodesic(const Environment& env, Point a, Point b, double s);

}  // namespace gg
