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
#include <stdexcept>
#include <string>
#include <vector>

#include "gallery_guard/io.hpp"

namespace gg {

// Failure of one pipeline stage; what() starts with the stage name.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& message)
      : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// Everything derived from one scene at one r. Shared immutably; the
// critical structure points into env, so a World never moves.
struct World {
  PolygonScene scene;
  Environment env;
  Triangulation tri;
  Deployment dep;
  TriangleClasses classes;
  GuardAdjacencyGraph gag;
  AllocationOutcome outcome;
  CriticalStructure critical;  // empty when infeasible

  explicit World(PolygonScene s);
  World(const World&) = delete;
  World& operator=(const World&) = delete;

  bool feasible() const { return outcome.feasible; }
  double r() const { return outcome.plan.r; }
};

// merge_holes -> triangulate -> deploy -> classify -> build_gag only; the
// outcome is left default (infeasible, no plan).
std::shared_ptr<const World> build_structure(const PolygonScene& scene);

// merge_holes -> triangulate -> deploy -> classify -> build_gag -> genalloc
// -> build_critical. An infeasible allocation is not an error.
std::shared_ptr<const World> build_world(const PolygonScene& scene, double r);

// Reuses the triangulation, guards and allocation stored in a plan file.
std::shared_ptr<const World> world_from_plan(const PlanFile& plan);

struct PipelineResult {
  std::shared_ptr<const World> world;
  MinSpeedResult minspeed;
  std::optional<CapacityReport> capacity;  // feasible plans only
  std::vector<std::string> artifacts;      // file names written, in order
};

// Runs every stage and writes deployment.json/.svg, gag.json/.dot,
// minspeed.json, plan.json/.svg, capacity.json, one trace_<name>.json per
// scenario path (dt = 1e-3 * diameter / v_e) and run.json into out_dir.
PipelineResult run_pipeline(const Scenario& scenario, const std::string& out_dir);

// Replaces every leg with the geodesic between its ends, so scenario paths
// may list waypoints without line of sight. Throws DomainError for
// waypoints outside the scene.
IntruderPath expand_path(const Environment& env, const IntruderPath& path);

// Scene diameter times 1e-3 over v_e.
double default_dt(const Environment& env, double v_e);

}  // namespace gg
