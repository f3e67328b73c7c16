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
#include <optional>
#include <stdexcept>
#include <string>

#include "gallery_guard/min_speed.hpp"
#include "gallery_guard/tracking.hpp"
#include "json.hpp"

namespace gg {

using Json = nlohmann::json;

// Every artifact carries {"version": kFormatVersion, "kind": ...}.
inline constexpr int kFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json point_to_json(Point p);
Point point_from_json(const Json& j);

// Segment: {kind, a, b}. Arc: {kind, center, radius, start, end, sweep, a, b}
// with angles in radians; a and b are stored so regions reload exactly.
Json edge_to_json(const Edge& e);
Edge edge_from_json(const Json& j);
Json region_to_json(const ArcRegion& r);
ArcRegion region_from_json(const Json& j);

// Infinite values are written as null and read back as +inf.
Json number_or_null(double v);
double number_or_inf(const Json& j);

Json triangulation_to_json(const Triangulation& tri);
Triangulation triangulation_from_json(const Json& j);

// Deployment artifact: scene, triangulation and guards.
Json deployment_to_json(const PolygonScene& scene, const Triangulation& tri, const Deployment& dep);
struct DeploymentFile {
  PolygonScene scene;
  Triangulation tri;
  Deployment dep;
};
DeploymentFile deployment_from_json(const Json& j);

Json gag_to_json(const GuardAdjacencyGraph& gag);
GuardAdjacencyGraph gag_from_json(const Json& j);

Json min_speed_to_json(const MinSpeedResult& result);

// Plan artifact embeds the deployment so later stages need only this file.
Json plan_to_json(const PolygonScene& scene, const Triangulation& tri, const Deployment& dep,
                  const TriangleClasses& classes, const AllocationOutcome& outcome);
struct PlanFile {
  DeploymentFile deployment;
  AllocationOutcome outcome;
};
PlanFile plan_from_json(const Json& j);

Json critical_to_json(const CriticalStructure& critical);
Json capacity_to_json(const CapacityReport& report);
Json trace_to_json(const SimulationResult& result);

Json path_to_json(const IntruderPath& path);
IntruderPath path_from_json(const Json& j);
// {"paths": {name: [[x, y], ...]}} or a bare object of that shape.
std::map<std::string, IntruderPath> paths_from_json(const Json& j);

// Speeds in units per second; r = v_g / v_e.
struct Scenario {
  std::string name;
  PolygonScene scene;
  std::string scene_file;  // as written in the scenario, empty when inline
  double v_e = 1.0;
  double v_g = 1.0;
  std::optional<std::uint64_t> seed;
  std::map<std::string, IntruderPath> paths;

  double r() const { return v_g / v_e; }
};

// scene_file is resolved against base_dir.
Scenario scenario_from_json(const Json& j, const std::string& base_dir);
Scenario load_scenario(const std::string& path);

Json read_json_file(const std::string& path);
// Two-space indent and a trailing newline; key order is sorted.
void write_json_file(const std::string& path, const Json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gg
