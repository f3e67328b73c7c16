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

#include "support/forest_scenes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "support/generators.hpp"

namespace gg::testing {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

bool gag_is_forest(const GuardAdjacencyGraph& gag, int triangles) {
  std::vector<int> parent(triangles);
  std::iota(parent.begin(), parent.end(), 0);
  for (const GagEdge& e : gag.edges) {
    const int a = find_root(parent, e.j);
    const int b = find_root(parent, e.k);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::vector<ForestCase> forest_cases(std::uint64_t seed, int count, ForestStats* stats) {
  ForestStats local;
  ForestStats& st = stats ? *stats : local;
  Rng rng(seed);
  std::vector<ForestCase> out;
  while (static_cast<int>(out.size()) < count && st.scanned < 5000) {
    ++st.scanned;
    const int n = std::uniform_int_distribution<int>(8, 14)(rng);
    auto poly = random_simple_polygon(rng, n);
    for (Point& p : poly) p = p * 0.1;
    auto tri = triangulate(poly);
    auto dep = deploy(tri);
    const Environment env(PolygonScene{poly, {}});
    const auto classes = classify(tri, dep);
    bool shape_ok = true;
    int regular = 0;
    for (int t : classes.nonsafe_triangles()) {
      if (classes.guards[t].size() > 2) shape_ok = false;
      if (classes.kind[t] == TriangleKind::kRegular) ++regular;
    }
    const auto gag = build_gag(env, tri, dep, classes);
    std::vector<double> weights;
    for (const GagEdge& e : gag.edges) {
      if (!std::isfinite(e.weight)) shape_ok = false;
      weights.push_back(e.weight);
    }
    if (!shape_ok || weights.empty() || !gag_is_forest(gag, static_cast<int>(tri.triangles.size()))) {
      ++st.wrong_shape;
      continue;
    }
    std::sort(weights.begin(), weights.end());
    std::vector<double> speeds{weights.back() * 1.5, weights[weights.size() / 2] * 1.5,
                               weights[weights.size() / 2] * 0.6, weights.front() * 0.6};
    if (out.size() % 2 == 1) std::reverse(speeds.begin(), speeds.end());
    for (double r : speeds) {
      PartitionOracleResult oracle;
      try {
        oracle = partition_oracle(env, tri, dep, classes, r);
      } catch (const OracleSizeError&) {
        ++st.too_large;
        continue;
      }
      if (oracle.verdict == OracleVerdict::kUndecided) {
        ++st.undecided;
        continue;
      }
      out.push_back({poly, std::move(tri), std::move(dep), r, oracle, regular});
      break;
    }
  }
  return out;
}

}  // namespace gg::testing
