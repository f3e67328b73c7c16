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

#include "gallery_guard/guard_graph.hpp"

#include <algorithm>
#include <limits>
#include <memory>

#include "gallery_guard/distance_field.hpp"

namespace gg {

const char* to_string(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::kSafe:
      return "safe";
    case TriangleKind::kUnsafe:
      return "unsafe";
    case TriangleKind::kRegular:
      return "regular";
  }
  return "unknown";
}

std::vector<int> TriangleClasses::nonsafe_triangles() const {
  std::vector<int> out;
  for (size_t t = 0; t < kind.size(); ++t) {
    if (kind[t] != TriangleKind::kSafe) out.push_back(static_cast<int>(t));
  }
  return out;
}

int TriangleClasses::slot_of(int g, int t) const {
  for (int s = 0; s < 2; ++s) {
    const auto& list = incident[g][s];
    if (std::binary_search(list.begin(), list.end(), t)) return s;
  }
  return -1;
}

TriangleClasses classify(const Triangulation& tri, const Deployment& dep) {
  TriangleClasses c;
  const size_t m = tri.triangles.size();
  c.kind.assign(m, TriangleKind::kRegular);
  c.guards.assign(m, {});
  c.incident.assign(dep.guards.size(), {});
  c.nonsafe.assign(dep.guards.size(), {});
  for (size_t t = 0; t < m; ++t) {
    const int ti = static_cast<int>(t);
    bool safe = false;
    for (const Guard& g : dep.guards) {
      const bool a = tri.triangle_has_vertex(ti, g.diag.first);
      const bool b = tri.triangle_has_vertex(ti, g.diag.second);
      if (a || b) c.guards[t].push_back(g.id);
      if (a) c.incident[g.id][0].push_back(ti);
      if (b) c.incident[g.id][1].push_back(ti);
      safe = safe || (a && b);
    }
    if (c.guards[t].empty()) throw DomainError("deployment does not dominate triangle " + std::to_string(t));
    if (safe) {
      c.kind[t] = TriangleKind::kSafe;
    } else if (c.guards[t].size() == 1) {
      c.kind[t] = TriangleKind::kUnsafe;
    }
  }
  for (size_t g = 0; g < dep.guards.size(); ++g) {
    for (int s = 0; s < 2; ++s) {
      for (int t : c.incident[g][s]) {
        if (!c.safe(t)) c.nonsafe[g][s].push_back(t);
      }
    }
  }
  return c;
}

int GuardAdjacencyGraph::vertex_index(int triangle) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), triangle);
  if (it == vertices.end() || *it != triangle) return -1;
  return static_cast<int>(it - vertices.begin());
}

void GuardAdjacencyGraph::index_edges() {
  edge_index_.clear();
  for (size_t e = 0; e < edges.size(); ++e) {
    const GagEdge& x = edges[e];
    edge_index_[{x.guard, std::min(x.j, x.k), std::max(x.j, x.k)}] = e;
  }
  orientation.resize(edges.size(), Orientation::kNone);
}

double GuardAdjacencyGraph::pair_weight(int g, int t1, int t2) const {
  const auto it = edge_index_.find({g, std::min(t1, t2), std::max(t1, t2)});
  return it == edge_index_.end() ? 0.0 : edges[it->second].weight;
}

GuardAdjacencyGraph build_gag(const Environment& env, const Triangulation& tri,
                              const Deployment& dep, const TriangleClasses& classes) {
  GuardAdjacencyGraph gag;
  gag.vertices = classes.nonsafe_triangles();
  for (int t : gag.vertices) gag.candidates.push_back(classes.guards[t]);
  for (const Guard& g : dep.guards) gag.guard_length.push_back(g.length);

  std::vector<std::unique_ptr<RegionField>> fields(tri.triangles.size());
  auto field = [&](int t) -> const RegionField& {
    if (!fields[t]) fields[t] = std::make_unique<RegionField>(env, ArcRegion::from_polygon(tri.triangle_points(t)));
    return *fields[t];
  };
  for (const Guard& g : dep.guards) {
    for (int j : classes.nonsafe[g.id][0]) {
      for (int k : classes.nonsafe[g.id][1]) {
        GagEdge e;
        e.j = j;
        e.k = k;
        e.guard = g.id;
        e.distance = set_distance(field(j), field(k));
        e.weight = e.distance > 0.0 ? g.length / e.distance : std::numeric_limits<double>::infinity();
        gag.edges.push_back(e);
      }
    }
  }
  gag.index_edges();
  return gag;
}

AllocationCost allocation_cost(const GuardAdjacencyGraph& gag, const std::map<int, int>& assignment) {
  AllocationCost cost;
  cost.per_guard.assign(gag.guard_length.size(), 0.0);
  for (auto a = assignment.begin(); a != assignment.end(); ++a) {
    for (auto b = std::next(a); b != assignment.end(); ++b) {
      if (a->second != b->second) continue;
      const int g = a->second;
      cost.per_guard[g] = std::max(cost.per_guard[g], gag.pair_weight(g, a->first, b->first));
    }
  }
  for (double c : cost.per_guard) cost.total = std::max(cost.total, c);
  return cost;
}

}  // namespace gg
