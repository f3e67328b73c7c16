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
#include <vector>

#include "gallery_guard/guard_graph.hpp"

namespace gg {

class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Triangle id -> guard id, one entry per non-safe triangle.
using Representatives = std::map<int, int>;

struct MinSpeedResult {
  double r_min = 0.0;
  Representatives allocation;
  std::string method;  // "exact" or "clique-sweep"
  bool exact_decision = true;
  bool feasible = true;  // false only when no threshold admits a full clique
  std::string note;
};

// Complete, unsafe-to-sole-guard, and cost <= r.
bool allocation_feasible(const GuardAdjacencyGraph& gag, const Representatives& rep, double r);

// Exhaustive over representative choices; throws SizeError when the
// product of candidate counts exceeds kExactLimit.
inline constexpr double kExactLimit = 1e6;
MinSpeedResult exact_unialloc(const GuardAdjacencyGraph& gag);

// Clique instance G_3' for threshold r: vertex (j, g) for each non-safe
// triangle j and incident guard g; (j, a) ~ (k, b) iff j != k and
// (a != b or w_{j,k}(a) <= r).
struct CliqueInstance {
  std::vector<int> triangle;  // per clique vertex
  std::vector<int> guard;
  std::vector<std::vector<bool>> adjacent;
  int target = 0;             // number of non-safe triangles
};

CliqueInstance build_clique_instance(const GuardAdjacencyGraph& gag, double r);

// One vertex per triangle forming a clique, or nullopt. `exact` selects
// branch-and-bound; otherwise greedy construction plus min-conflict search.
std::optional<std::vector<int>> find_full_clique(const CliqueInstance& inst, bool exact);

enum class CliqueMode { kAuto, kExact, kHeuristic };
// kAuto is exact up to kExactCliqueVertices G# vertices.
inline constexpr size_t kExactCliqueVertices = 64;
MinSpeedResult clique_sweep(const GuardAdjacencyGraph& gag, CliqueMode mode = CliqueMode::kAuto);

}  // namespace gg
