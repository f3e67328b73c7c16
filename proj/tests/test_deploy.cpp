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

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "gallery_guard/deploy.hpp"
#include "gallery_guard/scene.hpp"
#include "gallery_guard/triangulation.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gg;
using namespace gg::testing;

namespace {

double shoelace(const std::vector<Point>& poly) {
  double s = 0.0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly[i], b = poly[(i + 1) % poly.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return 0.5 * s;
}

void check_triangulation(const Triangulation& tri) {
  const size_t n = tri.n();
  REQUIRE(tri.triangles.size() == n - 2);
  CHECK(tri.diagonals.size() == n - 3);
  double sum = 0.0;
  for (size_t t = 0; t < tri.triangles.size(); ++t) {
    CHECK(tri.triangle_area(static_cast<int>(t)) > 0.0);
    sum += tri.triangle_area(static_cast<int>(t));
  }
  CHECK(std::abs(sum - shoelace(tri.vertices)) <= 1e-9 * std::abs(shoelace(tri.vertices)));
  // Dual is a tree: n-3 edges and connected.
  const auto dual = tri.dual();
  size_t edges = 0;
  for (const auto& adj : dual) edges += adj.size();
  CHECK(edges == 2 * (n - 3));
  std::vector<bool> seen(dual.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  size_t count = 0;
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    ++count;
    for (int u : dual[t]) {
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  CHECK(count == dual.size());
}

}  // namespace

TEST_CASE("triangulate small shapes") {
  const auto sq = triangulate(square().outer);
  CHECK(sq.triangles.size() == 2);
  REQUIRE(sq.diagonals.size() == 1);
  for (int n = 3; n <= 12; ++n) check_triangulation(triangulate(convex_polygon(n)));
  check_triangulation(triangulate(l_shape().outer));
  check_triangulation(triangulate(u_shape().outer));
}

TEST_CASE("triangulate rejects bad input") {
  CHECK_THROWS_AS(triangulate({{0, 0}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(triangulate({{0, 0}, {0, 1}, {1, 0}}), DomainError);  // clockwise
}

TEST_CASE("triangulate random polygons") {
  Rng rng(7);
  for (int i = 0; i < 60; ++i) {
    std::uniform_int_distribution<int> nd(5, 40);
    const auto poly = random_simple_polygon(rng, nd(rng));
    check_triangulation(triangulate(poly));
  }
  check_triangulation(triangulate(random_simple_polygon(rng, 30)));
}

TEST_CASE("triangulate merged polygons with holes") {
  Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    const auto scene = random_scene_with_holes(rng, 12, 1 + i % 3);
    const auto merged = merge_holes(scene).outer;
    const auto tri = triangulate(merged);
    REQUIRE(tri.triangles.size() == merged.size() - 2);
    double sum = 0.0;
    for (size_t t = 0; t < tri.triangles.size(); ++t) sum += tri.triangle_area(static_cast<int>(t));
    double expected = signed_area(scene.outer);
    for (const auto& h : scene.holes) expected -= std::abs(signed_area(h));
    CHECK(sum == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("decompose small polygon is one remainder") {
  const auto dec = decompose_basic(triangulate(convex_polygon(9)));
  REQUIRE(dec.pieces.size() == 1);
  CHECK(dec.pieces[0].remainder);
  CHECK(dec.pieces[0].cuts.empty());
}

TEST_CASE("decompose pieces are basic and reassemble") {
  const auto dec12 = decompose_basic(triangulate(convex_polygon(12)));
  REQUIRE(dec12.pieces.size() >= 2);
  CHECK(dec12.pieces[0].vertices.size() >= 6);
  CHECK(dec12.pieces[0].vertices.size() <= 9);

  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    const auto tri = triangulate(random_simple_polygon(rng, 40));
    const auto dec = decompose_basic(tri);
    std::vector<int> all;
    for (const auto& p : dec.pieces) {
      CHECK(p.vertices.size() == p.triangles.size() + 2);
      if (p.remainder) {
        CHECK(p.vertices.size() <= 9);
      } else {
        CHECK(p.vertices.size() >= 6);
        CHECK(p.vertices.size() <= 9);
      }
      all.insert(all.end(), p.triangles.begin(), p.triangles.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<int> expected(tri.triangles.size());
    for (size_t t = 0; t < expected.size(); ++t) expected[t] = static_cast<int>(t);
    CHECK(all == expected);
    // Piece tree: pieces-1 links, connected.
    size_t links = 0;
    for (const auto& adj : dec.tree) links += adj.size();
    CHECK(links == 2 * (dec.pieces.size() - 1));
  }
}

TEST_CASE("basic pieces of every convex triangulation") {
  const std::map<int, size_t> bound{{6, 1}, {7, 1}, {8, 2}, {9, 2}};
  for (const auto& [n, limit] : bound) {
    const auto poly = convex_polygon(n);
    for (const auto& tris : convex_triangulations(0, n - 1)) {
      const auto tri = Triangulation::from_triangles(poly, tris);
      Piece piece;
      for (size_t t = 0; t < tri.triangles.size(); ++t) piece.triangles.push_back(static_cast<int>(t));
      const std::vector<bool> none(tri.triangles.size(), false);
      const auto h = dominating_diagonals_basic(tri, piece, none);
      CHECK(h.size() <= limit);
      Deployment dep;
      for (const auto& d : h) dep.guards.push_back({static_cast<int>(dep.guards.size()), d, 0.0});
      CHECK(scan_domination(tri, dep));
    }
  }
  // Already dominated pieces need nothing.
  const auto tri = triangulate(convex_polygon(7));
  Piece piece;
  for (size_t t = 0; t < tri.triangles.size(); ++t) piece.triangles.push_back(static_cast<int>(t));
  CHECK(dominating_diagonals_basic(tri, piece, std::vector<bool>(tri.triangles.size(), true)).empty());
}

TEST_CASE("deploy square uses the diagonal") {
  const auto tri = triangulate(square().outer);
  const auto dep = deploy(tri);
  REQUIRE(dep.guards.size() == 1);
  CHECK(dep.guards[0].diag == tri.diagonals[0]);
  CHECK(dep.guards[0].length == doctest::Approx(10.0 * std::sqrt(2.0)));
}

TEST_CASE("deploy random polygons within bound") {
  Rng rng(2026);
  std::uniform_int_distribution<int> nd(10, 60);
  int over = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = nd(rng);
    const auto tri = triangulate(random_simple_polygon(rng, n));
    const auto dep = deploy(tri);
    CHECK(scan_domination(tri, dep));
    CHECK(dominates(tri, dep));
    if (dep.guards.size() > static_cast<size_t>(n / 4)) ++over;
    const auto again = deploy(tri);
    REQUIRE(again.guards.size() == dep.guards.size());
    for (size_t g = 0; g < dep.guards.size(); ++g) CHECK(again.guards[g].diag == dep.guards[g].diag);
  }
  CHECK(over == 0);
}
