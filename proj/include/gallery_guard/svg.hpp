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

#include <string>
#include <vector>

#include "gallery_guard/tracking.hpp"

namespace gg {

// Fixed palette: safe triangles blue, u1 orange, u2 pale green, unassigned
// (R_empty witness) red, critical band left unshaded, s_ext green.
namespace palette {
inline constexpr const char* kSafe = "#9ecae1";
inline constexpr const char* kU1 = "#fdae6b";
inline constexpr const char* kU2 = "#c7e9c0";
inline constexpr const char* kWitness = "#e31a1c";
inline constexpr const char* kGuard = "#cb181d";
inline constexpr const char* kSExt = "#238b45";
inline constexpr const char* kSInt = "#2171b5";
inline constexpr const char* kIntruder = "#000000";
}  // namespace palette

// SVG path data for a region, one subpath per boundary loop.
std::string svg_path(const ArcRegion& region);

std::string render_deployment_svg(const PolygonScene& scene, const Triangulation& tri, const Deployment& dep,
                                  const TriangleClasses& classes);

// Partition, critical curves when given, and the R_empty witness of an
// infeasible outcome.
std::string render_plan_svg(const PolygonScene& scene, const Triangulation& tri, const Deployment& dep,
                            const TriangleClasses& classes, const AllocationOutcome& outcome,
                            const CriticalStructure* critical);

// Plan background plus guard and intruder positions of one trace step.
std::string render_frame_svg(const PolygonScene& scene, const Triangulation& tri, const Deployment& dep,
                             const TriangleClasses& classes, const AllocationOutcome& outcome,
                             const CriticalStructure* critical, const TraceStep& step);

// Graphviz description of G#: vertices labeled by triangle, edges by guard
// and weight, directed when oriented.
std::string gag_to_dot(const GuardAdjacencyGraph& gag);

}  // namespace gg
