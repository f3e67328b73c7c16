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

#include <cmath>

#include "doctest.h"
#include "gallery_guard/allocation.hpp"
#include "support/forest_scenes.hpp"
#include "support/generators.hpp"

using namespace gg;
using namespace gg::testing;

TEST_CASE("partition oracle brackets the single-guard threshold") {
  const auto poly = convex_polygon(6, 10.0);
  const auto tri = Triangulation::from_triangles(poly, {{0, 1, 2}, {0, 2, 3}, {0, 3, 5}, {3, 4, 5}});
  const Environment env(PolygonScene{poly, {}});
  Deployment dep;
  dep.guards.push_back({0, {0, 3}, dist(poly[0], poly[3])});
  const auto classes = classify(tri, dep);
  const auto gag = build_gag(env, tri, dep, classes);
  REQUIRE(gag.edges.size() == 1);
  const double threshold = gag.edges[0].weight;
  CHECK(partition_oracle(env, tri, dep, classes, threshold * 0.7).verdict == OracleVerdict::kInfeasible);
  CHECK(partition_oracle(env, tri, dep, classes, threshold * 1.4).verdict == OracleVerdict::kFeasible);
  // Within the sampling band the oracle abstains rather than guess.
  const auto close = partition_oracle(env, tri, dep, classes, threshold * 1.01);
  CHECK(close.verdict != OracleVerdict::kInfeasible);
  CHECK(close.h <= dep.guards[0].length / (threshold * 1.01) / 20 + 1e-15);
}

TEST_CASE("partition oracle needs at most two guards per triangle") {
  const auto poly = convex_polygon(6, 10.0);
  const auto tri = Triangulation::from_triangles(poly, {{0, 1, 2}, {0, 2, 3}, {0, 3, 5}, {3, 4, 5}});
  const Environment env(PolygonScene{poly, {}});
  Deployment dep;
  for (VertexPair d : {VertexPair{0, 3}, VertexPair{1, 5}, VertexPair{2, 4}}) {
    dep.guards.push_back({static_cast<int>(dep.guards.size()), d, dist(poly[d.first], poly[d.second])});
  }
  const auto classes = classify(tri, dep);
  bool crowded = false;
  for (int t : classes.nonsafe_triangles()) crowded = crowded || classes.guards[t].size() > 2;
  if (crowded) CHECK_THROWS_AS(partition_oracle(env, tri, dep, classes, 1.0), std::invalid_argument);
}

TEST_CASE("forest G#: genalloc verdict matches the partition oracle") {
  ForestStats stats;
  const auto cases = forest_cases(3, 12, &stats);
  REQUIRE(cases.size() == 12);
  int feasible = 0;
  for (const auto& c : cases) {
    const Environment env(PolygonScene{c.polygon, {}});
    const auto classes = classify(c.tri, c.dep);
    const auto gag = build_gag(env, c.tri, c.dep, classes);
    REQUIRE(gag_is_forest(gag, static_cast<int>(c.tri.triangles.size())));
    const auto out = genalloc(env, c.tri, c.dep, classes, gag, c.r);
    CHECK(out.feasible == (c.oracle.verdict == OracleVerdict::kFeasible));
    if (out.feasible) {
      ++feasible;
      CHECK(verify_plan(env, c.tri, classes, out.plan).ok);
    }
  }
  CHECK(feasible > 0);
  CHECK(feasible < 12);
}

TEST_CASE("without arbitalloc, infeasible verdicts are confirmed by the oracle") {
  Rng rng(31);
  int confirmed = 0;
  for (int it = 0; it < 200 && confirmed < 6; ++it) {
    auto poly = random_simple_polygon(rng, std::uniform_int_distribution<int>(8, 12)(rng));
    for (Point& p : poly) p = p * 0.1;
    const auto tri = triangulate(poly);
    const auto dep = deploy(tri);
    const Environment env(PolygonScene{poly, {}});
    const auto classes = classify(tri, dep);
    bool small = true;
    for (int t : classes.nonsafe_triangles()) small = small && classes.guards[t].size() <= 2;
    const auto gag = build_gag(env, tri, dep, classes);
    if (!small || gag.edges.empty()) continue;
    double w = 0.0;
    for (const auto& e : gag.edges) {
      if (std::isfinite(e.weight)) w = std::max(w, e.weight);
    }
    if (w == 0.0) continue;
    const double r = 0.6 * w;
    const auto out = genalloc(env, tri, dep, classes, gag, r);
    if (out.feasible || !out.plan.arbitrary.empty()) continue;
    try {
      const auto oracle = partition_oracle(env, tri, dep, classes, r);
      CHECK(oracle.verdict != OracleVerdict::kFeasible);
      ++confirmed;
    } catch (const OracleSizeError&) {
    }
  }
  CHECK(confirmed >= 3);
}
