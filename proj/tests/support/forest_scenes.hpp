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

#include <cstdint>
#include <vector>

#include "gallery_guard/guard_graph.hpp"
#include "support/partition_oracle.hpp"

namespace gg::testing {

// No cycles in G# viewed as an undirected multigraph; parallel edges of
// different guards count as a cycle.
bool gag_is_forest(const GuardAdjacencyGraph& gag, int triangles);

struct ForestCase {
  std::vector<Point> polygon;
  Triangulation tri;
  Deployment dep;
  double r = 0.0;
  PartitionOracleResult oracle;  // decided verdict at r
  int regular = 0;
};

struct ForestStats {
  int scanned = 0;
  int wrong_shape = 0;   // G# not a forest, no finite edge, touching pair, or > 2 guards
  int undecided = 0;     // candidate speeds where the oracle could not decide
  int too_large = 0;
};

// Random small polygons (scaled to diameter ~20) whose deployment yields a
// forest G# with at least one finite edge, no touching opposed triangles and
// at most two guards per non-safe triangle. Candidate speeds are multiples of
// the G# weights; the first one where the partition oracle decides is kept.
// Cases alternate between trying slow and fast speeds first.
std::vector<ForestCase> forest_cases(std::uint64_t seed, int count, ForestStats* stats = nullptr);

}  // namespace gg::testing
