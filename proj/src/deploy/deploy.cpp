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

#include "gallery_guard/deploy.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

namespace gg {

namespace {

constexpr int kMinBasicTriangles = 4;  // hexagon
constexpr int kMaxBasicTriangles = 7;  // nonagon

VertexPair shared_edge(const Triangulation& tri, int t, int u) {
  for (int k = 0; k < 3; ++k) {
    if (tri.neighbors[t][k] == u) return make_pair_sorted(tri.triangles[t][k], tri.triangles[t][(k + 1) % 3]);
  }
  throw DomainError("triangles are not adjacent");
}

Piece make_piece(const Triangulation& tri, std::vector<int> tris) {
  Piece piece;
  std::sort(tris.begin(), tris.end());
  std::set<int> verts;
  for (int t : tris) verts.insert(tri.triangles[t].begin(), tri.triangles[t].end());
  piece.triangles = std::move(tris);
  piece.vertices.assign(verts.begin(), verts.end());
  return piece;
}

bool is_polygon_edge(const Triangulation& tri, VertexPair e) {
  const int n = static_cast<int>(tri.n());
  return e.second - e.first == 1 || (e.first == 0 && e.second == n - 1);
}

// Exact search for at most `limit` edges dominating every triangle.
class DominationSearch {
 public:
  DominationSearch(const Triangulation& tri, size_t limit, long budget)
      : tri_(tri), edges_(tri.all_edges()), limit_(limit), budget_(budget) {
    vertex_tris_.assign(tri.n(), {});
    for (size_t t = 0; t < tri.triangles.size(); ++t) {
      for (int v : tri.triangles[t]) vertex_tris_[v].push_back(static_cast<int>(t));
    }
    vertex_edges_.assign(tri.n(), {});
    for (size_t e = 0; e < edges_.size(); ++e) {
      vertex_edges_[edges_[e].first].push_back(static_cast<int>(e));
      vertex_edges_[edges_[e].second].push_back(static_cast<int>(e));
    }
    cover_.assign(tri.triangles.size(), 0);
  }

  std::optional<std::vector<VertexPair>> run() {
    if (!search()) return std::nullopt;
    std::vector<VertexPair> out;
    for (int e : chosen_) out.push_back(edges_[e]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void apply(int e, int delta) {
    for (int v : {edges_[e].first, edges_[e].second}) {
      for (int t : vertex_tris_[v]) cover_[t] += delta;
    }
  }

  // Pairwise vertex-disjoint undominated triangles need distinct endpoints.
  size_t lower_bound() const {
    std::vector<bool> used(tri_.n(), false);
    size_t packed = 0;
    for (size_t t = 0; t < cover_.size(); ++t) {
      if (cover_[t] > 0) continue;
      const auto& v = tri_.triangles[t];
      if (used[v[0]] || used[v[1]] || used[v[2]]) continue;
      used[v[0]] = used[v[1]] = used[v[2]] = true;
      ++packed;
    }
    return (packed + 1) / 2;
  }

  bool search() {
    if (--budget_ < 0) return false;
    int open = -1;
    for (size_t t = 0; t < cover_.size() && open < 0; ++t) {
      if (cover_[t] == 0) open = static_cast<int>(t);
    }
    if (open < 0) return true;
    if (chosen_.size() + lower_bound() > limit_) return false;
    std::vector<std::pair<int, int>> options;  // (-gain, edge)
    for (int v : tri_.triangles[open]) {
      for (int e : vertex_edges_[v]) {
        int gain = 0;
        for (int w : {edges_[e].first, edges_[e].second}) {
          for (int t : vertex_tris_[w]) gain += cover_[t] == 0 ? 1 : 0;
        }
        options.push_back({-gain, e});
      }
    }
    std::sort(options.begin(), options.end());
    options.erase(std::unique(options.begin(), options.end()), options.end());
    for (const auto& [neg_gain, e] : options) {
      chosen_.push_back(e);
      apply(e, 1);
      if (search()) return true;
      apply(e, -1);
      chosen_.pop_back();
      if (budget_ < 0) return false;
    }
    return false;
  }

  const Triangulation& tri_;
  std::vector<VertexPair> edges_;
  size_t limit_;
  long budget_;
  std::vector<std::vector<int>> vertex_tris_;
  std::vector<std::vector<int>> vertex_edges_;
  std::vector<int> cover_;
  std::vector<int> chosen_;
};

constexpr long kSearchBudget = 200000;

}  // namespace

BasicDecomposition decompose_basic(const Triangulation& tri) {
  const int m = static_cast<int>(tri.triangles.size());
  std::vector<bool> active(m, true);
  int remaining = m;
  BasicDecomposition out;
  std::vector<std::pair<int, int>> cut_links;  // (triangle in piece, triangle across)

  // 10 vertices correspond to 8 triangles.
  while (remaining >= 8) {
    int root = 0;
    while (!active[root]) ++root;
    std::vector<int> parent(m, -1), order, sub(m, 1);
    std::vector<int> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      order.push_back(t);
      for (int u : tri.neighbors[t]) {
        if (u >= 0 && active[u] && parent[u] < 0) {
          parent[u] = t;
          stack.push_back(u);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (*it != root) sub[parent[*it]] += sub[*it];
    }
    // Best cut: (size, diagonal, side-root) where side-root lies in the piece.
    std::tuple<int, VertexPair, int, int> best{m + 1, {}, -1, -1};
    for (int v : order) {
      if (v == root) continue;
      const int p = parent[v];
      const VertexPair d = shared_edge(tri, v, p);
      for (auto [size, inside, outside] : {std::tuple{sub[v], v, p}, std::tuple{remaining - sub[v], p, v}}) {
        if (size < kMinBasicTriangles || size > kMaxBasicTriangles) continue;
        const auto cand = std::tuple{size, d, inside, outside};
        if (std::tie(std::get<0>(cand), std::get<1>(cand)) <
            std::tie(std::get<0>(best), std::get<1>(best))) {
          best = cand;
        }
      }
    }
    const auto [size, d, inside, outside] = best;
    if (inside < 0) break;  // unreachable for a triangulated polygon
    std::vector<int> tris;
    std::vector<int> todo{inside};
    std::vector<bool> seen(m, false);
    seen[inside] = seen[outside] = true;
    while (!todo.empty()) {
      const int t = todo.back();
      todo.pop_back();
      tris.push_back(t);
      for (int u : tri.neighbors[t]) {
        if (u >= 0 && active[u] && !seen[u]) {
          seen[u] = true;
          todo.push_back(u);
        }
      }
    }
    for (int t : tris) active[t] = false;
    remaining -= static_cast<int>(tris.size());
    out.pieces.push_back(make_piece(tri, std::move(tris)));
    cut_links.push_back({inside, outside});
  }
  std::vector<int> rest;
  for (int t = 0; t < m; ++t) {
    if (active[t]) rest.push_back(t);
  }
  out.pieces.push_back(make_piece(tri, std::move(rest)));
  out.pieces.back().remainder = true;

  std::vector<int> owner(m, -1);
  for (size_t i = 0; i < out.pieces.size(); ++i) {
    for (int t : out.pieces[i].triangles) owner[t] = static_cast<int>(i);
  }
  out.tree.assign(out.pieces.size(), {});
  for (const auto& [a, b] : cut_links) {
    const VertexPair d = shared_edge(tri, a, b);
    const int pa = owner[a], pb = owner[b];
    out.pieces[pa].cuts.push_back(d);
    out.pieces[pb].cuts.push_back(d);
    out.tree[pa].push_back(pb);
    out.tree[pb].push_back(pa);
  }
  for (auto& adj : out.tree) std::sort(adj.begin(), adj.end());
  for (auto& p : out.pieces) std::sort(p.cuts.begin(), p.cuts.end());
  return out;
}

std::vector<VertexPair> dominating_diagonals_basic(const Triangulation& tri, const Piece& piece,
                                                   const std::vector<bool>& dominated,
                                                   const std::vector<int>& bonus) {
  std::vector<int> targets;
  for (int t : piece.triangles) {
    if (!dominated[t]) targets.push_back(t);
  }
  if (targets.empty()) return {};
  std::vector<int> bonus_targets;
  for (int t : bonus) {
    if (!dominated[t]) bonus_targets.push_back(t);
  }

  std::set<VertexPair> edge_set;
  for (int t : piece.triangles) {
    const auto& v = tri.triangles[t];
    for (int k = 0; k < 3; ++k) edge_set.insert(make_pair_sorted(v[k], v[(k + 1) % 3]));
  }
  const std::vector<VertexPair> edges(edge_set.begin(), edge_set.end());
  const int ne = static_cast<int>(edges.size());

  auto touches = [&](const std::vector<int>& pick, int t) {
    for (int e : pick) {
      if (tri.triangle_has_vertex(t, edges[e].first) || tri.triangle_has_vertex(t, edges[e].second)) return true;
    }
    return false;
  };

  for (int k = 1; k <= ne; ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    std::vector<int> best;
    int best_bonus = -1, best_boundary = 0;
    for (;;) {
      bool ok = true;
      for (int t : targets) {
        if (!touches(pick, t)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        int score = 0;
        for (int t : bonus_targets) score += touches(pick, t) ? 1 : 0;
        int boundary = 0;
        for (int e : pick) boundary += is_polygon_edge(tri, edges[e]) ? 1 : 0;
        if (score > best_bonus || (score == best_bonus && boundary < best_boundary)) {
          best = pick;
          best_bonus = score;
          best_boundary = boundary;
        }
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == ne - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!best.empty()) {
      std::vector<VertexPair> out;
      for (int e : best) out.push_back(edges[e]);
      return out;
    }
  }
  return {};  // unreachable: all piece edges together touch every triangle
}

Deployment deploy(const Triangulation& tri) {
  const BasicDecomposition dec = decompose_basic(tri);
  const size_t np = dec.pieces.size();
  std::vector<bool> marked(np, false);
  std::vector<bool> dominated(tri.triangles.size(), false);
  Deployment dep;
  for (size_t round = 0; round < np; ++round) {
    size_t pick = np;
    for (size_t i = 0; i < np && pick == np; ++i) {
      if (marked[i]) continue;
      int unmarked_nbrs = 0;
      for (int j : dec.tree[i]) unmarked_nbrs += marked[j] ? 0 : 1;
      if (unmarked_nbrs <= 1) pick = i;
    }
    std::vector<int> bonus;
    for (size_t j = 0; j < np; ++j) {
      if (j == pick || marked[j]) continue;
      bonus.insert(bonus.end(), dec.pieces[j].triangles.begin(), dec.pieces[j].triangles.end());
    }
    for (const VertexPair& h : dominating_diagonals_basic(tri, dec.pieces[pick], dominated, bonus)) {
      Guard g;
      g.id = static_cast<int>(dep.guards.size());
      g.diag = h;
      g.length = dist(tri.vertices[h.first], tri.vertices[h.second]);
      dep.guards.push_back(g);
      for (size_t t = 0; t < tri.triangles.size(); ++t) {
        if (tri.triangle_has_vertex(static_cast<int>(t), h.first) ||
            tri.triangle_has_vertex(static_cast<int>(t), h.second)) {
          dominated[t] = true;
        }
      }
    }
    marked[pick] = true;
  }
  const size_t bound = std::max<size_t>(1, tri.n() / 4);
  if (dep.guards.size() > bound) {
    // The piece-by-piece choice can overshoot next to a small remainder.
    if (auto exact = DominationSearch(tri, bound, kSearchBudget).run()) {
      dep.guards.clear();
      for (const VertexPair& h : *exact) {
        dep.guards.push_back({static_cast<int>(dep.guards.size()), h,
                              dist(tri.vertices[h.first], tri.vertices[h.second])});
      }
    }
  }
  return dep;
}

std::vector<int> incident_guards(const Triangulation& tri, const Deployment& dep, int t) {
  std::vector<int> out;
  for (const Guard& g : dep.guards) {
    if (tri.triangle_has_vertex(t, g.diag.first) || tri.triangle_has_vertex(t, g.diag.second)) {
      out.push_back(g.id);
    }
  }
  return out;
}

bool dominates(const Triangulation& tri, const Deployment& dep) {
  for (size_t t = 0; t < tri.triangles.size(); ++t) {
    if (incident_guards(tri, dep, static_cast<int>(t)).empty()) return false;
  }
  return true;
}

}  // namespace gg
