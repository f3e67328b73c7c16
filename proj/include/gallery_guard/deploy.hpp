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

#include <vector>

#include "gallery_guard/triangulation.hpp"

namespace gg {

// A triangulation subgraph cut off by diagonals.
struct Piece {
  std::vector<int> triangles;  // sorted
  std::vector<int> vertices;   // sorted
  std::vector<VertexPair> cuts;
  bool remainder = false;
};

struct BasicDecomposition {
  std::vector<Piece> pieces;            // remainder last
  std::vector<std::vector<int>> tree;   // adjacency through shared cuts
};

// Splits off basic pieces (6 to 9 vertices) while at least 10 vertices
// remain. Each step takes the smallest separable piece; ties go to the
// lexicographically smallest cut.
BasicDecomposition decompose_basic(const Triangulation& tri);

// Minimum set of edges of `piece` whose endpoints touch every triangle of
// the piece with dominated[t] == false. Among minimum sets, prefers those
// touching more undominated triangles listed in `bonus`, then fewer polygon
// edges, then the lexicographically smallest.
std::vector<VertexPair> dominating_diagonals_basic(const Triangulation& tri, const Piece& piece,
                                                   const std::vector<bool>& dominated,
                                                   const std::vector<int>& bonus = {});

struct Guard {
  int id = 0;
  VertexPair diag;
  double length = 0.0;
};

struct Deployment {
  std::vector<Guard> guards;
};

Deployment deploy(const Triangulation& tri);

// Guards with an endpoint among the vertices of triangle t.
std::vector<int> incident_guards(const Triangulation& tri, const Deployment& dep, int t);
bool dominates(const Triangulation& tri, const Deployment& dep);

}  // namespace gg
