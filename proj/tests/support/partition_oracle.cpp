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

#include "support/partition_oracle.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>
#include <cmath>
#include <limits>
#include <string>

namespace gg::testing {

namespace {

// Literal encoding: 2 * var is "var takes guards[0]", 2 * var + 1 its negation.
class TwoSat {
 public:
  explicit TwoSat(int vars) : vars_(vars), graph_(2 * vars) {}

  void forbid_both(int a, int b) {  // not (a and b)
    boost::add_edge(a, b ^ 1, graph_);
    boost::add_edge(b, a ^ 1, graph_);
  }
  void force_false(int a) { boost::add_edge(a, a ^ 1, graph_); }

  bool satisfiable() const {
    std::vector<int> comp(2 * vars_);
    boost::strong_components(graph_, comp.data());
    for (int v = 0; v < vars_; ++v) {
      if (comp[2 * v] == comp[2 * v + 1]) return false;
    }
    return true;
  }

 private:
  int vars_;
  boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS> graph_;
};

std::vector<Point> triangle_samples(const std::vector<Point>& t, double h) {
  std::vector<Point> out;
  Box box;
  for (Point p : t) box.add(p);
  for (double x = std::floor(box.xmin / h) * h; x <= box.xmax; x += h) {
    for (double y = std::floor(box.ymin / h) * h; y <= box.ymax; y += h) {
      const Point p{x, y};
      if (orient(t[0], t[1], p) > 0 && orient(t[1], t[2], p) > 0 && orient(t[2], t[0], p) > 0) out.push_back(p);
    }
  }
  for (int k = 0; k < 3; ++k) {
    const Point a = t[k];
    const Point b = t[(k + 1) % 3];
    const int steps = std::max(1, static_cast<int>(std::ceil(dist(a, b) / h)));
    for (int s = 0; s < steps; ++s) out.push_back(a + (b - a) * (static_cast<double>(s) / steps));
  }
  return out;
}

struct Sample {
  Point p;
  int triangle;
  int var;  // -1 for unsafe triangles
};

}  // namespace

const char* to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::kFeasible:
      return "feasible";
    case OracleVerdict::kInfeasible:
      return "infeasible";
    case OracleVerdict::kUndecided:
      return "undecided";
  }
  return "unknown";
}

PartitionOracleResult partition_oracle(const Environment& env, const Triangulation& tri, const Deployment& dep,
                                       const TriangleClasses& classes, double r, double cell_fraction,
                                       int max_samples) {
  PartitionOracleResult out;
  const auto nonsafe = classes.nonsafe_triangles();
  double min_reach = std::numeric_limits<double>::infinity();
  for (const Guard& g : dep.guards) {
    if (!classes.nonsafe[g.id][0].empty() && !classes.nonsafe[g.id][1].empty()) {
      min_reach = std::min(min_reach, g.length / r);
    }
  }
  if (!std::isfinite(min_reach)) {
    // No guard has work on both ends.
    out.verdict = OracleVerdict::kFeasible;
    out.optimistic = out.pessimistic = true;
    return out;
  }
  out.h = min_reach * cell_fraction;
  out.rho = 2.0 * out.h;

  std::vector<std::vector<Sample>> by_triangle(tri.triangles.size());
  int vars = 0;
  for (int t : nonsafe) {
    if (classes.guards[t].size() > 2) {
      throw std::invalid_argument("partition_oracle: triangle " + std::to_string(t) + " has more than two guards");
    }
    for (Point p : triangle_samples(tri.triangle_points(t), out.h)) {
      by_triangle[t].push_back({p, t, classes.guards[t].size() == 2 ? vars++ : -1});
      ++out.samples;
    }
    if (out.samples > max_samples) throw OracleSizeError("partition_oracle: too many samples");
  }

  TwoSat optimistic(vars), pessimistic(vars);
  bool opt_dead = false, pess_dead = false;
  // Literal for "sample s takes guard g"; -1 when always true, -2 when never.
  auto literal = [&](const Sample& s, int g) {
    const auto& gs = classes.guards[s.triangle];
    if (s.var < 0) return gs[0] == g ? -1 : -2;
    return gs[0] == g ? 2 * s.var : 2 * s.var + 1;
  };
  auto add = [](TwoSat& sat, bool& dead, int la, int lb) {
    if (la == -2 || lb == -2) return;
    if (la == -1 && lb == -1) {
      dead = true;
    } else if (la == -1) {
      sat.force_false(lb);
    } else if (lb == -1) {
      sat.force_false(la);
    } else {
      sat.forbid_both(la, lb);
    }
  };

  constexpr long kMaxPairs = 4000000;
  long pairs = 0;
  for (const Guard& g : dep.guards) {
    const double reach = g.length / r;
    const double wide = reach + 2.0 * out.rho;
    for (int tj : classes.nonsafe[g.id][0]) {
      for (int tk : classes.nonsafe[g.id][1]) {
        for (const Sample& a : by_triangle[tj]) {
          const int la = literal(a, g.id);
          if (la == -2) continue;
          for (const Sample& b : by_triangle[tk]) {
            if (dist(a.p, b.p) >= wide) continue;
            const int lb = literal(b, g.id);
            if (lb == -2) continue;
            if (++pairs > kMaxPairs) throw OracleSizeError("partition_oracle: too many close pairs");
            const double d = env.distance(a.p, b.p);
            if (d < wide) add(pessimistic, pess_dead, la, lb);
            if (d < reach) add(optimistic, opt_dead, la, lb);
          }
        }
      }
    }
  }
  out.optimistic = !opt_dead && optimistic.satisfiable();
  out.pessimistic = !pess_dead && pessimistic.satisfiable();
  if (out.pessimistic) {
    out.verdict = OracleVerdict::kFeasible;
  } else if (!out.optimistic) {
    out.verdict = OracleVerdict::kInfeasible;
  }
  return out;
}

}  // namespace gg::testing
