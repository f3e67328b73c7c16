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

#include "gallery_guard/min_speed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class ExactEnumeration {
 public:
  explicit ExactEnumeration(const GuardAdjacencyGraph& gag) : gag_(gag), pick_(gag.vertices.size(), -1) {}

  void run() { visit(0, 0.0); }
  double best() const { return best_; }
  const std::vector<int>& best_pick() const { return best_pick_; }

 private:
  void visit(size_t j, double cost) {
    if (cost >= best_ && !best_pick_.empty()) return;
    if (j == pick_.size()) {
      best_ = cost;
      best_pick_ = pick_;
      return;
    }
    for (int g : gag_.candidates[j]) {
      double c = cost;
      for (size_t k = 0; k < j; ++k) {
        if (pick_[k] == g) c = std::max(c, gag_.pair_weight(g, gag_.vertices[j], gag_.vertices[k]));
      }
      pick_[j] = g;
      visit(j + 1, c);
    }
    pick_[j] = -1;
  }

  const GuardAdjacencyGraph& gag_;
  std::vector<int> pick_;
  std::vector<int> best_pick_;
  double best_ = kInf;
};

}  // namespace

bool allocation_feasible(const GuardAdjacencyGraph& gag, const Representatives& rep, double r) {
  if (rep.size() != gag.vertices.size()) return false;
  for (size_t j = 0; j < gag.vertices.size(); ++j) {
    const auto it = rep.find(gag.vertices[j]);
    if (it == rep.end()) return false;
    const auto& cand = gag.candidates[j];
    if (std::find(cand.begin(), cand.end(), it->second) == cand.end()) return false;
    if (cand.size() == 1 && it->second != cand[0]) return false;
  }
  return allocation_cost(gag, rep).total <= r;
}

MinSpeedResult exact_unialloc(const GuardAdjacencyGraph& gag) {
  double product = 1.0;
  for (const auto& c : gag.candidates) product *= static_cast<double>(c.size());
  if (product > kExactLimit) {
    throw SizeError("exact_unialloc: " + std::to_string(static_cast<long long>(product)) +
                    " representative choices exceed the limit; use clique_sweep");
  }
  ExactEnumeration search(gag);
  search.run();
  MinSpeedResult out;
  out.method = "exact";
  out.r_min = gag.vertices.empty() ? 0.0 : search.best();
  for (size_t j = 0; j < gag.vertices.size(); ++j) out.allocation[gag.vertices[j]] = search.best_pick()[j];
  out.feasible = std::isfinite(out.r_min);
  return out;
}

MinSpeedResult clique_sweep(const GuardAdjacencyGraph& gag, CliqueMode mode) {
  MinSpeedResult out;
  out.method = "clique-sweep";
  out.exact_decision = mode == CliqueMode::kExact ||
                       (mode == CliqueMode::kAuto && gag.vertices.size() <= kExactCliqueVertices);
  // Zero is a candidate so that all-static allocations are found.
  std::vector<double> thresholds{0.0};
  for (const GagEdge& e : gag.edges) {
    if (std::isfinite(e.weight)) thresholds.push_back(e.weight);
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  for (double r : thresholds) {
    const CliqueInstance inst = build_clique_instance(gag, r);
    const auto clique = find_full_clique(inst, out.exact_decision);
    if (!clique) continue;
    out.r_min = r;
    for (int v : *clique) out.allocation[inst.triangle[v]] = inst.guard[v];
    return out;
  }
  out.feasible = false;
  out.r_min = thresholds.size() > 1 ? thresholds[1] : kInf;
  out.note = "no threshold admits a full clique; reporting the minimum edge weight";
  return out;
}

}  // namespace gg
