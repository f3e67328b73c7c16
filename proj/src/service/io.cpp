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

#include "gallery_guard/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace gg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Json header(const char* kind) {
  Json j;
  j["version"] = kFormatVersion;
  j["kind"] = kind;
  return j;
}

void check_header(const Json& j, const char* kind) {
  if (!j.is_object()) throw FormatError(std::string(kind) + " file must be a JSON object");
  if (!j.contains("version") || j.at("version") != kFormatVersion) {
    throw FormatError(std::string(kind) + " file has a missing or unsupported version");
  }
  if (j.contains("kind") && j.at("kind") != kind) {
    throw FormatError("expected a " + std::string(kind) + " file, got " + j.at("kind").dump());
  }
}

template <typename F>
auto parsing(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed ") + what + ": " + e.what());
  }
}

const char* orientation_name(Orientation o) {
  switch (o) {
    case Orientation::kForward:
      return "forward";
    case Orientation::kBackward:
      return "backward";
    case Orientation::kNone:
      break;
  }
  return "none";
}

Orientation orientation_from(const std::string& s) {
  if (s == "forward") return Orientation::kForward;
  if (s == "backward") return Orientation::kBackward;
  if (s == "none") return Orientation::kNone;
  throw FormatError("unknown orientation " + s);
}

GuardType guard_type_from(const std::string& s) {
  if (s == "type0") return GuardType::kType0;
  if (s == "type1") return GuardType::kType1;
  if (s == "type2") return GuardType::kType2;
  throw FormatError("unknown guard type " + s);
}

Json region_map_to_json(const std::map<int, ArcRegion>& regions) {
  Json arr = Json::array();
  for (const auto& [t, r] : regions) arr.push_back({{"triangle", t}, {"region", region_to_json(r)}});
  return arr;
}

std::map<int, ArcRegion> region_map_from_json(const Json& j) {
  std::map<int, ArcRegion> out;
  for (const auto& item : j) out[item.at("triangle").get<int>()] = region_from_json(item.at("region"));
  return out;
}

Json sets_to_json(const std::vector<std::vector<int>>& sets) {
  Json arr = Json::array();
  for (const auto& s : sets) arr.push_back(s);
  return arr;
}

}  // namespace

Json point_to_json(Point p) { return Json::array({p.x, p.y}); }

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("point must be [x, y], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json edge_to_json(const Edge& e) {
  if (!e.is_arc()) return {{"kind", "segment"}, {"a", point_to_json(e.a)}, {"b", point_to_json(e.b)}};
  return {{"kind", "arc"},
          {"center", point_to_json(e.center)},
          {"radius", e.radius},
          {"start", e.start},
          {"end", e.start + e.sweep},
          {"sweep", e.sweep},
          {"a", point_to_json(e.a)},
          {"b", point_to_json(e.b)}};
}

Edge edge_from_json(const Json& j) {
  return parsing("edge", [&] {
    const std::string kind = j.at("kind").get<std::string>();
    Edge e;
    if (kind == "segment") {
      e = Edge::segment(point_from_json(j.at("a")), point_from_json(j.at("b")));
    } else if (kind == "arc") {
      e = Edge::arc(point_from_json(j.at("center")), j.at("radius").get<double>(), j.at("start").get<double>(),
                    j.at("sweep").get<double>());
      if (j.contains("a")) e.a = point_from_json(j.at("a"));
      if (j.contains("b")) e.b = point_from_json(j.at("b"));
    } else {
      throw FormatError("unknown edge kind " + kind);
    }
    return e;
  });
}

Json region_to_json(const ArcRegion& r) {
  Json edges = Json::array();
  for (const Edge& e : r.edges()) edges.push_back(edge_to_json(e));
  return {{"edges", edges}, {"area", r.empty() ? 0.0 : r.area()}};
}

ArcRegion region_from_json(const Json& j) {
  return parsing("region", [&] {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back(edge_from_json(e));
    return ArcRegion(std::move(edges));
  });
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double number_or_inf(const Json& j) { return j.is_null() ? kInf : j.get<double>(); }

Json triangulation_to_json(const Triangulation& tri) {
  Json verts = Json::array();
  for (Point p : tri.vertices) verts.push_back(point_to_json(p));
  return {{"vertices", verts}, {"triangles", tri.triangles}, {"diagonals", tri.diagonals}};
}

Triangulation triangulation_from_json(const Json& j) {
  return parsing("triangulation", [&] {
    std::vector<Point> verts;
    for (const auto& p : j.at("vertices")) verts.push_back(point_from_json(p));
    auto tris = j.at("triangles").get<std::vector<std::array<int, 3>>>();
    for (const auto& t : tris) {
      for (int v : t) {
        if (v < 0 || v >= static_cast<int>(verts.size())) throw FormatError("triangle vertex out of range");
      }
    }
    return Triangulation::from_triangles(std::move(verts), std::move(tris));
  });
}

Json deployment_to_json(const PolygonScene& scene, const Triangulation& tri, const Deployment& dep) {
  Json j = header("deployment");
  j["scene"] = scene_to_json(scene);
  j["triangulation"] = triangulation_to_json(tri);
  Json guards = Json::array();
  for (const Guard& g : dep.guards) {
    guards.push_back({{"id", g.id}, {"diag", {g.diag.first, g.diag.second}}, {"length", g.length}});
  }
  j["guards"] = guards;
  j["triangles"] = tri.triangles.size();
  j["diagonals"] = tri.diagonals.size();
  return j;
}

DeploymentFile deployment_from_json(const Json& j) {
  check_header(j, "deployment");
  return parsing("deployment", [&] {
    DeploymentFile f;
    f.scene = scene_from_json(j.at("scene"));
    f.tri = triangulation_from_json(j.at("triangulation"));
    for (const auto& g : j.at("guards")) {
      Guard guard;
      guard.id = g.at("id").get<int>();
      guard.diag = {g.at("diag").at(0).get<int>(), g.at("diag").at(1).get<int>()};
      guard.length = g.at("length").get<double>();
      if (guard.id != static_cast<int>(f.dep.guards.size())) throw FormatError("guard ids must be 0, 1, 2, ...");
      for (int v : {guard.diag.first, guard.diag.second}) {
        if (v < 0 || v >= static_cast<int>(f.tri.n())) throw FormatError("guard endpoint out of range");
      }
      f.dep.guards.push_back(guard);
    }
    return f;
  });
}

Json gag_to_json(const GuardAdjacencyGraph& gag) {
  Json j = header("gag");
  j["vertices"] = gag.vertices;
  j["candidates"] = gag.candidates;
  j["guard_length"] = gag.guard_length;
  Json edges = Json::array();
  for (const GagEdge& e : gag.edges) {
    edges.push_back({{"j", e.j},
                     {"k", e.k},
                     {"guard", e.guard},
                     {"distance", e.distance},
                     {"weight", number_or_null(e.weight)}});
  }
  j["edges"] = edges;
  return j;
}

GuardAdjacencyGraph gag_from_json(const Json& j) {
  check_header(j, "gag");
  return parsing("gag", [&] {
    GuardAdjacencyGraph gag;
    gag.vertices = j.at("vertices").get<std::vector<int>>();
    gag.candidates = j.at("candidates").get<std::vector<std::vector<int>>>();
    gag.guard_length = j.at("guard_length").get<std::vector<double>>();
    if (gag.candidates.size() != gag.vertices.size()) throw FormatError("gag candidates do not match vertices");
    for (const auto& e : j.at("edges")) {
      gag.edges.push_back({e.at("j").get<int>(), e.at("k").get<int>(), e.at("guard").get<int>(),
                           e.at("distance").get<double>(), number_or_inf(e.at("weight"))});
    }
    gag.index_edges();
    return gag;
  });
}

Json min_speed_to_json(const MinSpeedResult& result) {
  Json j = header("minspeed");
  j["r_min"] = number_or_null(result.r_min);
  j["method"] = result.method;
  j["exact_decision"] = result.exact_decision;
  j["feasible"] = result.feasible;
  j["note"] = result.note;
  Json alloc = Json::array();
  for (const auto& [t, g] : result.allocation) alloc.push_back({{"triangle", t}, {"guard", g}});
  j["allocation"] = alloc;
  return j;
}

Json plan_to_json(const PolygonScene& scene, const Triangulation& tri, const Deployment& dep,
                  const TriangleClasses& classes, const AllocationOutcome& outcome) {
  Json j = header("plan");
  j["deployment"] = deployment_to_json(scene, tri, dep);
  const AllocationPlan& plan = outcome.plan;
  j["r"] = plan.r;
  j["feasible"] = outcome.feasible;
  j["failed_triangle"] = outcome.failed_triangle;
  j["witness"] = region_to_json(outcome.witness);
  Json kinds = Json::array();
  for (TriangleKind k : classes.kind) kinds.push_back(to_string(k));
  j["triangle_kinds"] = kinds;
  Json guards = Json::array();
  for (const GuardPlan& gp : plan.guards) {
    guards.push_back({{"id", gp.guard},
                      {"slot1", gp.slot1},
                      {"v1", gp.v1},
                      {"v2", gp.v2},
                      {"length", gp.length},
                      {"reach", gp.reach},
                      {"type", to_string(gp.type)},
                      {"margin", number_or_null(gp.margin)},
                      {"allocated", gp.allocated},
                      {"r1", region_map_to_json(gp.r1)},
                      {"r2", region_map_to_json(gp.r2)},
                      {"u1", region_to_json(gp.u1)},
                      {"u2", region_to_json(gp.u2)}});
  }
  j["guards"] = guards;
  j["order"] = plan.order;
  j["arbitrary"] = plan.arbitrary;
  Json orient = Json::array();
  for (Orientation o : plan.orientation) orient.push_back(orientation_name(o));
  j["orientation"] = orient;
  j["deleted"] = plan.deleted;
  j["unassigned"] = region_map_to_json(plan.unassigned);
  return j;
}

PlanFile plan_from_json(const Json& j) {
  check_header(j, "plan");
  return parsing("plan", [&] {
    PlanFile f;
    f.deployment = deployment_from_json(j.at("deployment"));
    AllocationOutcome& out = f.outcome;
    out.feasible = j.at("feasible").get<bool>();
    out.failed_triangle = j.at("failed_triangle").get<int>();
    out.witness = region_from_json(j.at("witness"));
    AllocationPlan& plan = out.plan;
    plan.r = j.at("r").get<double>();
    for (const auto& g : j.at("guards")) {
      GuardPlan gp;
      gp.guard = g.at("id").get<int>();
      gp.slot1 = g.at("slot1").get<int>();
      gp.v1 = g.at("v1").get<int>();
      gp.v2 = g.at("v2").get<int>();
      gp.length = g.at("length").get<double>();
      gp.reach = g.at("reach").get<double>();
      gp.type = guard_type_from(g.at("type").get<std::string>());
      gp.margin = number_or_inf(g.at("margin"));
      gp.allocated = g.at("allocated").get<bool>();
      gp.r1 = region_map_from_json(g.at("r1"));
      gp.r2 = region_map_from_json(g.at("r2"));
      gp.u1 = region_from_json(g.at("u1"));
      gp.u2 = region_from_json(g.at("u2"));
      plan.guards.push_back(std::move(gp));
    }
    if (plan.guards.size() != f.deployment.dep.guards.size()) throw FormatError("plan and deployment disagree");
    plan.order = j.at("order").get<std::vector<int>>();
    plan.arbitrary = j.at("arbitrary").get<std::vector<int>>();
    for (const auto& o : j.at("orientation")) plan.orientation.push_back(orientation_from(o.get<std::string>()));
    plan.deleted = j.at("deleted").get<std::vector<bool>>();
    plan.unassigned = region_map_from_json(j.at("unassigned"));
    return f;
  });
}

Json critical_to_json(const CriticalStructure& critical) {
  Json arr = Json::array();
  for (const GuardCritical& gc : critical.guards) {
    Json s_int = Json::array(), s_ext = Json::array();
    for (const Edge& e : gc.s_int) s_int.push_back(edge_to_json(e));
    for (const Edge& e : gc.s_ext) s_ext.push_back(edge_to_json(e));
    arr.push_back({{"id", gc.guard},
                   {"parked", gc.parked},
                   {"v1", point_to_json(gc.p1)},
                   {"v2", point_to_json(gc.p2)},
                   {"reach", gc.reach},
                   {"s_int", s_int},
                   {"s_ext", s_ext},
                   {"band", region_to_json(gc.band)}});
  }
  return arr;
}

Json capacity_to_json(const CapacityReport& report) {
  Json j = header("capacity");
  Json tris = Json::array();
  for (const CapacityEntry& e : report.triangles) {
    Json witness = Json::array();
    for (Point p : e.witness) witness.push_back(point_to_json(p));
    tris.push_back({{"triangle", e.triangle},
                    {"guards", e.guards},
                    {"always_blocked", e.always_blocked},
                    {"blockable", e.blockable},
                    {"family", sets_to_json(e.family)},
                    {"cover", sets_to_json(e.cover)},
                    {"meets_triangle", e.meets_triangle},
                    {"witness", witness},
                    {"n_intruders", e.n_intruders < 0 ? Json(nullptr) : Json(e.n_intruders)},
                    {"exact", e.exact}});
  }
  j["triangles"] = tris;
  j["n_star"] = report.n_star < 0 ? Json(nullptr) : Json(report.n_star);
  j["witness_triangle"] = report.witness_triangle;
  if (report.triangles.empty()) {
    j["note"] = "no non-safe triangles";
  } else if (report.n_star < 0) {
    j["note"] = "no placement of intruders uncovers a non-safe triangle";
  }
  return j;
}

Json trace_to_json(const SimulationResult& result) {
  Json j = header("trace");
  Json steps = Json::array();
  for (const TraceStep& s : result.trace) {
    Json intruders = Json::array(), guards = Json::array();
    for (Point p : s.intruders) intruders.push_back(point_to_json(p));
    for (size_t g = 0; g < s.guards.size(); ++g) guards.push_back({{"id", g}, {"pos", point_to_json(s.guards[g])}});
    Json visible = Json::array();
    for (const auto& row : s.visible) visible.push_back(row);
    steps.push_back(
        {{"t", s.t}, {"intruders", intruders}, {"guards", guards}, {"visible", visible}, {"uncovered", s.uncovered}});
  }
  j["steps"] = steps;
  j["summary"] = {{"steps", result.steps},
                  {"uncovered_steps", result.uncovered_steps},
                  {"first_uncovered", result.first_uncovered ? Json(*result.first_uncovered) : Json(nullptr)},
                  {"first_uncovered_triangles", result.first_uncovered_triangles},
                  {"speed_events", result.speed_events},
                  {"max_step_ratio", result.max_step_ratio},
                  {"slack", result.slack}};
  return j;
}

Json path_to_json(const IntruderPath& path) {
  Json arr = Json::array();
  for (Point p : path.waypoints) arr.push_back(point_to_json(p));
  return arr;
}

IntruderPath path_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("intruder path must be a nonempty array of points");
  IntruderPath path;
  for (const auto& p : j) path.waypoints.push_back(point_from_json(p));
  return path;
}

std::map<std::string, IntruderPath> paths_from_json(const Json& j) {
  const Json& obj = j.is_object() && j.contains("paths") ? j.at("paths") : j;
  if (!obj.is_object()) throw FormatError("paths must be an object of name -> [[x, y], ...]");
  std::map<std::string, IntruderPath> out;
  for (const auto& [name, p] : obj.items()) out[name] = path_from_json(p);
  return out;
}

Scenario scenario_from_json(const Json& j, const std::string& base_dir) {
  check_header(j, "scenario");
  return parsing("scenario", [&] {
    Scenario s;
    s.name = j.value("name", std::string());
    if (j.contains("scene_file")) {
      s.scene_file = j.at("scene_file").get<std::string>();
      s.scene = load_scene((std::filesystem::path(base_dir) / s.scene_file).string());
    } else if (j.contains("scene")) {
      s.scene = scene_from_json(j.at("scene"));
    } else {
      throw FormatError("scenario needs \"scene\" or \"scene_file\"");
    }
    s.v_e = j.at("v_e").get<double>();
    s.v_g = j.at("v_g").get<double>();
    if (!(s.v_e > 0.0) || !(s.v_g > 0.0)) throw FormatError("scenario speeds must be positive");
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("paths")) s.paths = paths_from_json(j.at("paths"));
    return s;
  });
}

Scenario load_scenario(const std::string& path) {
  return scenario_from_json(read_json_file(path), std::filesystem::path(path).parent_path().string());
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

void write_json_file(const std::string& path, const Json& j) { write_text_file(path, j.dump(2) + "\n"); }

}  // namespace gg
