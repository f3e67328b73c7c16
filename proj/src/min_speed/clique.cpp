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
#include <random>

#include "gallery_guard/min_speed.hpp"

namespace gg {

namespace {

constexpr int kLocalSearchSteps = 20000;
constexpr unsigned kLocalSearchSeed = 17;

// Clique vertices grouped by triangle; groups ordered by triangle id.
std::vector<std::vector<int>> groups_of(const CliqueInstance& inst) {
  std::map<int, std::vector<int>> by_tri;
  for (size_t v = 0; v < inst.triangle.size(); ++v) by_tri[inst.triangle[v]].push_back(static_cast<int>(v));
  std::vector<std::vector<int>> out;
  for (auto& [t, vs] : by_tri) out.push_back(std::move(vs));
  return out;
}

// Each clique of size `target` takes exactly one vertex per group, since
// vertices of a group are pairwise non-adjacent. Groups are decided in
// order; a group whose candidates are all excluded prunes the branch.
class ExactSearch {
 public:
  explicit ExactSearch(const CliqueInstance& inst) : inst_(inst), groups_(groups_of(inst)) {}

  std::optional<std::vector<int>> run() {
    if (static_cast<int>(groups_.size()) != inst_.target) return std::nullopt;
    std::vector<std::vector<int>> domains = groups_;
    if (!branch(0, domains)) return std::nullopt;
    return chosen_;
  }

 private:
  bool branch(size_t g, const std::vector<std::vector<int>>& domains) {
    if (g == groups_.size()) return true;
    for (int v : domains[g]) {
      std::vector<std::vector<int>> next(domains.size());
      bool dead = false;
      for (size_t h = g + 1; h < groups_.size() && !dead; ++h) {
        for (int u : domains[h]) {
          if (inst_.adjacent[v][u]) next[h].push_back(u);
        }
        dead = next[h].empty();
      }
      if (dead) continue;
      chosen_.push_back(v);
      if (branch(g + 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const CliqueInstance& inst_;
  std::vector<std::vector<int>> groups_;
  std::vector<int> chosen_;
};

std::optional<std::vector<int>> heuristic_search(const CliqueInstance& inst) {
  const auto groups = groups_of(inst);
  if (static_cast<int>(groups.size()) != inst.target) return std::nullopt;
  const size_t k = groups.size();
  std::vector<int> pick(k, -1);
  auto conflicts_with = [&](size_t g, int v) {
    int c = 0;
    for (size_t h = 0; h < k; ++h) {
      if (h != g && pick[h] >= 0 && !inst.adjacent[v][pick[h]]) ++c;
    }
    return c;
  };
  for (size_t g = 0; g < k; ++g) {
    int best = groups[g][0], best_c = conflicts_with(g, best);
    for (int v : groups[g]) {
      const int c = conflicts_with(g, v);
      if (c < best_c) {
        best = v;
        best_c = c;
      }
    }
    pick[g] = best;
  }
  std::mt19937 rng(kLocalSearchSeed);
  for (int step = 0; step < kLocalSearchSteps; ++step) {
    std::vector<size_t> bad;
    for (size_t g = 0; g < k; ++g) {
      if (conflicts_with(g, pick[g]) > 0) bad.push_back(g);
    }
    if (bad.empty()) return pick;
    const size_t g = bad[std::uniform_int_distribution<size_t>(0, bad.size() - 1)(rng)];
    std::vector<int> best_vs;
    int best_c = static_cast<int>(k) + 1;
    for (int v : groups[g]) {
      const int c = conflicts_with(g, v);
      if (c < best_c) {
        best_c = c;
        best_vs = {v};
      } else if (c == best_c) {
        best_vs.push_back(v);
      }
    }
    pick[g] = best_vs[std::uniform_int_distribution<size_t>(0, best_vs.size() - 1)(rng)];
  }
  return std::nullopt;
}

}  // namespace

CliqueInstance build_clique_instance(const GuardAdjacencyGraph& gag, double r) {
  CliqueInstance inst;
  inst.target = static_cast<int>(gag.vertices.size());
  for (size_t j = 0; j < gag.vertices.size(); ++j) {
    for (int g : gag.candidates[j]) {
      inst.triangle.push_back(gag.vertices[j]);
      inst.guard.push_back(g);
    }
  }
  const size_t nv = inst.triangle.size();
  inst.adjacent.assign(nv, std::vector<bool>(nv, false));
  for (size_t u = 0; u < nv; ++u) {
    for (size_t v = u + 1; v < nv; ++v) {
      if (inst.triangle[u] == inst.triangle[v]) continue;
      const bool ok = inst.guard[u] != inst.guard[v] ||
                      gag.pair_weight(inst.guard[u], inst.triangle[u], inst.triangle[v]) <= r;
      inst.adjacent[u][v] = inst.adjacent[v][u] = ok;
    }
  }
  return inst;
}

std::optional<std::vector<int>> find_full_clique(const CliqueInstance& inst, bool exact) {
  if (inst.target == 0) return std::vector<int>{};
  return exact ? ExactSearch(inst).run() : heuristic_search(inst);
}

}  // namespace gg
