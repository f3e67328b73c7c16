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

#include "gallery_guard/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gg {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

std::string pt(Point p) { return num(p.x) + " " + num(p.y); }

void arc_to(std::ostringstream& out, const Edge& e, double start, double sweep) {
  const Point end = e.center + Point{std::cos(start + sweep), std::sin(start + sweep)} * e.radius;
  out << " A " << num(e.radius) << " " << num(e.radius) << " 0 " << (std::abs(sweep) > M_PI ? 1 : 0) << " "
      << (sweep > 0 ? 1 : 0) << " " << pt(end);
}

std::string polygon_path(const std::vector<Point>& ring) {
  std::ostringstream out;
  for (size_t i = 0; i < ring.size(); ++i) out << (i == 0 ? "M " : " L ") << pt(ring[i]);
  out << " Z";
  return out.str();
}

// Drawing is in scene coordinates inside a y-flipping group.
class Canvas {
 public:
  explicit Canvas(const PolygonScene& scene) {
    Box box;
    for (Point p : scene.outer) box.add(p);
    const double pad = 0.03 * box.diagonal();
    xmin_ = box.xmin - pad;
    ymin_ = box.ymin - pad;
    w_ = box.xmax - box.xmin + 2 * pad;
    h_ = box.ymax - box.ymin + 2 * pad;
    stroke_ = 0.002 * box.diagonal();
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(xmin_) << " " << num(-(ymin_ + h_)) << " "
         << num(w_) << " " << num(h_) << "\" width=\"800\" height=\"" << num(800.0 * h_ / w_) << "\">\n";
    out_ << "<g transform=\"scale(1,-1)\" stroke-linejoin=\"round\">\n";
  }

  double stroke() const { return stroke_; }

  void path(const std::string& d, const std::string& fill, const std::string& stroke, double width,
            const std::string& extra = "") {
    out_ << "<path d=\"" << d << "\" fill=\"" << fill << "\" fill-rule=\"evenodd\" stroke=\"" << stroke
         << "\" stroke-width=\"" << num(width) << "\"" << extra << "/>\n";
  }

  void line(Point a, Point b, const std::string& stroke, double width) {
    out_ << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
         << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width) << "\"/>\n";
  }

  void dot(Point p, double r, const std::string& fill) {
    out_ << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(r) << "\" fill=\"" << fill
         << "\"/>\n";
  }

  std::string finish() {
    out_ << "</g>\n</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
  double xmin_ = 0, ymin_ = 0, w_ = 1, h_ = 1, stroke_ = 0.1;
};

void draw_scene(Canvas& c, const PolygonScene& scene) {
  std::string d = polygon_path(scene.outer);
  for (const auto& hole : scene.holes) d += " " + polygon_path(hole);
  c.path(d, "#ffffff", "#000000", 2 * c.stroke());
}

void draw_triangles(Canvas& c, const Triangulation& tri, const TriangleClasses& classes) {
  for (size_t t = 0; t < tri.triangles.size(); ++t) {
    const bool safe = classes.safe(static_cast<int>(t));
    c.path(polygon_path(tri.triangle_points(static_cast<int>(t))), safe ? palette::kSafe : "none", "#969696",
           c.stroke());
  }
}

void draw_guards(Canvas& c, const Triangulation& tri, const Deployment& dep) {
  for (const Guard& g : dep.guards) {
    c.line(tri.vertices[g.diag.first], tri.vertices[g.diag.second], palette::kGuard, 3 * c.stroke());
  }
}

void draw_edges(Canvas& c, const std::vector<Edge>& edges, const char* color) {
  for (const Edge& e : edges) {
    std::ostringstream d;
    d << "M " << pt(e.a);
    if (e.is_arc()) {
      arc_to(d, e, e.start, e.sweep);
    } else {
      d << " L " << pt(e.b);
    }
    c.path(d.str(), "none", color, 2 * c.stroke());
  }
}

void draw_plan(Canvas& c, const PolygonScene& scene, const Triangulation& tri, const Deployment& dep,
               const TriangleClasses& classes, const AllocationOutcome& outcome, const CriticalStructure* critical) {
  draw_scene(c, scene);
  draw_triangles(c, tri, classes);
  for (const GuardPlan& gp : outcome.plan.guards) {
    if (!gp.u2.empty()) c.path(svg_path(gp.u2), palette::kU2, "none", 0);
    if (!gp.u1.empty()) c.path(svg_path(gp.u1), palette::kU1, "none", 0);
  }
  if (!outcome.feasible && !outcome.witness.empty()) {
    c.path(svg_path(outcome.witness), palette::kWitness, palette::kWitness, c.stroke());
    c.path(polygon_path(tri.triangle_points(outcome.failed_triangle)), "none", palette::kWitness, 3 * c.stroke());
  }
  if (critical) {
    for (const GuardCritical& gc : critical->guards) {
      draw_edges(c, gc.s_int, palette::kSInt);
      draw_edges(c, gc.s_ext, palette::kSExt);
    }
  }
  draw_guards(c, tri, dep);
}

}  // namespace

std::string svg_path(const ArcRegion& region) {
  std::ostringstream out;
  bool first = true;
  for (const auto& loop : region.loops()) {
    if (loop.empty()) continue;
    out << (first ? "" : " ") << "M " << pt(loop.front().a);
    first = false;
    for (const Edge& e : loop) {
      if (!e.is_arc()) {
        out << " L " << pt(e.b);
      } else if (std::abs(e.sweep) >= 2 * M_PI - 1e-12) {
        arc_to(out, e, e.start, e.sweep / 2);
        arc_to(out, e, e.start + e.sweep / 2, e.sweep / 2);
      } else {
        arc_to(out, e, e.start, e.sweep);
      }
    }
    out << " Z";
  }
  return out.str();
}

std::string render_deployment_svg(const PolygonScene& scene, const Triangulation& tri, const Deployment& dep,
                                  const TriangleClasses& classes) {
  Canvas c(scene);
  draw_scene(c, scene);
  draw_triangles(c, tri, classes);
  draw_guards(c, tri, dep);
  return c.finish();
}

std::string render_plan_svg(const PolygonScene& scene, const Triangulation& tri, const Deployment& dep,
                            const TriangleClasses& classes, const AllocationOutcome& outcome,
                            const CriticalStructure* critical) {
  Canvas c(scene);
  draw_plan(c, scene, tri, dep, classes, outcome, critical);
  return c.finish();
}

std::string render_frame_svg(const PolygonScene& scene, const Triangulation& tri, const Deployment& dep,
                             const TriangleClasses& classes, const AllocationOutcome& outcome,
                             const CriticalStructure* critical, const TraceStep& step) {
  Canvas c(scene);
  draw_plan(c, scene, tri, dep, classes, outcome, critical);
  for (int t : step.uncovered) c.path(polygon_path(tri.triangle_points(t)), "none", palette::kWitness, 4 * c.stroke());
  for (Point p : step.guards) c.dot(p, 5 * c.stroke(), palette::kGuard);
  for (Point p : step.intruders) c.dot(p, 5 * c.stroke(), palette::kIntruder);
  return c.finish();
}

std::string gag_to_dot(const GuardAdjacencyGraph& gag) {
  std::ostringstream out;
  out << "digraph gag {\n  node [shape=circle];\n";
  for (size_t v = 0; v < gag.vertices.size(); ++v) {
    out << "  T" << gag.vertices[v] << " [label=\"T" << gag.vertices[v] << "\"];\n";
  }
  for (size_t e = 0; e < gag.edges.size(); ++e) {
    const GagEdge& x = gag.edges[e];
    const Orientation o = e < gag.orientation.size() ? gag.orientation[e] : Orientation::kNone;
    const int from = o == Orientation::kBackward ? x.k : x.j;
    const int to = o == Orientation::kBackward ? x.j : x.k;
    out << "  T" << from << " -> T" << to << " [label=\"g" << x.guard << " w="
        << (std::isfinite(x.weight) ? num(x.weight) : std::string("inf")) << "\"";
    if (o == Orientation::kNone) out << ", dir=none";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gg
