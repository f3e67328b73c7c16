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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gallery_guard/geometry.hpp"
#include "json.hpp"

namespace gg {

class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Outer boundary counterclockwise, holes clockwise.
struct PolygonScene {
  std::vector<Point> outer;
  std::vector<std::vector<Point>> holes;

  size_t vertex_count() const;
  // Outer vertices first, then each hole in order.
  std::vector<Point> flat_vertices() const;
};

// Returns a description of the first defect, or nullopt for a valid scene.
// Orientation is not checked.
std::optional<std::string> find_scene_defect(const PolygonScene& scene);

// Fixes ring orientation and validates; throws SceneError naming the
// offending edge pair on failure.
PolygonScene normalize_scene(PolygonScene scene);

PolygonScene scene_from_json(const nlohmann::json& j);
nlohmann::json scene_to_json(const PolygonScene& scene);
PolygonScene load_scene(const std::string& path);

// Simple polygon obtained by cutting one zero-thickness wall per hole.
struct MergedPolygon {
  std::vector<Point> vertices;
  // Index into PolygonScene::flat_vertices() for every merged vertex.
  std::vector<int> origin;
  // Cut walls as (merged index, merged index) of the first copy of each end.
  std::vector<std::pair<int, int>> cuts;
};

MergedPolygon merge_holes_detailed(const PolygonScene& scene);

// Scene whose outer ring is the merged polygon and which has no holes.
PolygonScene merge_holes(const PolygonScene& scene);

// Weak simplicity: no proper crossings, no vertex inside another edge, and
// overlapping edges only as exact reversed pairs (zero-thickness walls).
std::optional<std::string> find_weak_simplicity_defect(
    const std::vector<Point>& ring);

}  // namespace gg
