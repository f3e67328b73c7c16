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

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "gallery_guard/deploy.hpp"
#include "gallery_guard/environment.hpp"

namespace gg {

enum class TriangleKind { kSafe, kUnsafe, kRegular };

const char* to_string(TriangleKind kind);

struct TriangleClasses {
  std::vector<TriangleKind> kind;
  std::vector<std::vector<int>> guards;  // incident guards per triangle, sorted
  // Per guard and endpoint slot (0: diag.first, 1: diag.second).
  std::vector<std::array<std::vector<int>, 2>> incident;
  std::vector<std::array<std::vector<int>, 2>> nonsafe;

  bool safe(int t) const { return kind[t] == TriangleKind::kSafe; }
  std::vector<int> nonsafe_triangles() const;
  // Endpoint slot of guard g touching triangle t, or -1.
  int slot_of(int g, int t) const;
};

TriangleClasses classify(const Triangulation& tri, const Deployment& dep);

// Edge e_{j,k}(g): j touches slot 0 of guard g, k touches slot 1.
struct GagEdge {
  int j = 0;
  int k = 0;
  int guard = 0;
  double distance = 0.0;  // geodesic d(T_j, T_k)
  double weight = 0.0;    // l_g / distance; +inf when distance is 0
};

enum class Orientation { kNone, kForward, kBackward };  // forward: j -> k

struct GuardAdjacencyGraph {
  std::vector<int> vertices;                  // non-safe triangle ids, sorted
  std::vector<std::vector<int>> candidates;   // incident guards per vertex
  std::vector<double> guard_length;
  std::vector<GagEdge> edges;
  std::vector<Orientation> orientation;

  int vertex_index(int triangle) const;
  // Weight of the pair (t1, t2) for guard g; 0 when they are not opposite.
  double pair_weight(int g, int t1, int t2) const;
  void index_edges();

 private:
  std::map<std::tuple<int, int, int>, size_t> edge_index_;  // (guard, min t, max t)
};

GuardAdjacencyGraph build_gag(const Environment& env, const Triangulation& tri,
                              const Deployment& dep, const TriangleClasses& classes);

struct AllocationCost {
  std::vector<double> per_guard;
  double total = 0.0;
};

// Cost of a one-guard-per-triangle assignment (triangle id -> guard id).
AllocationCost allocation_cost(const GuardAdjacencyGraph& gag, const std::map<int, int>& assignment);

}  // namespace gg
