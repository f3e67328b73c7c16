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


#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gallery_guard/pipeline.hpp"
#include "gallery_guard/svg.hpp"
#include "support/generators.hpp"
#include "support/scenes.hpp"

using namespace gg;
using namespace gg::testing;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("gg_test_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PolygonScene overlap_polygon() { return PolygonScene{overlap_scene().polygon, {}}; }

Scenario scenario_for(PolygonScene scene, double v_g) {
  Scenario s;
  s.name = "t";
  s.scene = std::move(scene);
  s.v_e = 1.0;
  s.v_g = v_g;
  return s;
}

}  // namespace

TEST_CASE("regions survive a JSON round trip") {
  const auto w = build_world(overlap_polygon(), 30.0);
  REQUIRE(w->feasible());
  for (const GuardCritical& gc : w->critical.guards) {
    if (gc.parked) continue;
    const ArcRegion back = region_from_json(Json::parse(region_to_json(gc.offset).dump()));
    REQUIRE(back.edges().size() == gc.offset.edges().size());
    CHECK(back.area() == doctest::Approx(gc.offset.area()).epsilon(1e-12));
    CHECK(region_to_json(back) == region_to_json(gc.offset));
  }
}

TEST_CASE("plan files reload into the same world") {
  const auto w = build_world(overlap_polygon(), 30.0);
  const Json j = Json::parse(plan_to_json(w->scene, w->tri, w->dep, w->classes, w->outcome).dump());
  const auto back = world_from_plan(plan_from_json(j));
  REQUIRE(back->feasible());
  CHECK(triangulation_to_json(back->tri) == triangulation_to_json(w->tri));
  CHECK(back->dep.guards.size() == w->dep.guards.size());
  CHECK(gag_to_json(back->gag) == gag_to_json(w->gag));
  CHECK(plan_to_json(back->scene, back->tri, back->dep, back->classes, back->outcome) == j);
  REQUIRE(back->critical.guards.size() == w->critical.guards.size());
  for (size_t g = 0; g < w->critical.guards.size(); ++g) {
    CHECK(back->critical.guards[g].reach == w->critical.guards[g].reach);
    CHECK(back->critical.guards[g].parked == w->critical.guards[g].parked);
  }
}

TEST_CASE("gag and deployment round trip") {
  const auto w = build_structure(PolygonScene{u_shape().outer, {}});
  const Json g = gag_to_json(w->gag);
  CHECK(gag_to_json(gag_from_json(g)) == g);
  const Json d = deployment_to_json(w->scene, w->tri, w->dep);
  const DeploymentFile f = deployment_from_json(d);
  CHECK(deployment_to_json(f.scene, f.tri, f.dep) == d);
}

TEST_CASE("artifact headers are checked") {
  const auto w = build_structure(PolygonScene{square().outer, {}});
  Json d = deployment_to_json(w->scene, w->tri, w->dep);
  CHECK(d.at("version") == kFormatVersion);
  CHECK(d.at("kind") == "deployment");
  Json wrong_version = d;
  wrong_version["version"] = kFormatVersion + 1;
  CHECK_THROWS_AS(deployment_from_json(wrong_version), FormatError);
  Json wrong_kind = d;
  wrong_kind["kind"] = "plan";
  CHECK_THROWS_AS(deployment_from_json(wrong_kind), FormatError);
  CHECK_THROWS_AS(plan_from_json(Json::object()), FormatError);
}

TEST_CASE("infinite numbers are written as null") {
  CHECK(number_or_null(std::numeric_limits<double>::infinity()).is_null());
  CHECK(std::isinf(number_or_inf(Json(nullptr))));
  CHECK(number_or_inf(Json(2.5)) == 2.5);
}

TEST_CASE("scenarios resolve scene files relative to themselves") {
  const fs::path dir = fresh_dir("scenario");
  fs::create_directories(dir / "scenes");
  write_json_file((dir / "scenes" / "sq.json").string(), scene_to_json(square()));
  write_json_file((dir / "s.json").string(), {{"version", 1},
                                              {"kind", "scenario"},
                                              {"name", "sq"},
                                              {"scene_file", "scenes/sq.json"},
                                              {"v_e", 2.0},
                                              {"v_g", 3.0},
                                              {"seed", 5},
                                              {"paths", {{"a", {{1, 1}, {9, 9}}}}}});
  const Scenario s = load_scenario((dir / "s.json").string());
  CHECK(s.r() == doctest::Approx(1.5));
  CHECK(s.scene.outer.size() == 4);
  CHECK(s.seed == 5u);
  REQUIRE(s.paths.count("a") == 1);
  CHECK(s.paths.at("a").waypoints.size() == 2);

  Json bad = read_json_file((dir / "s.json").string());
  bad["v_g"] = 0.0;
  CHECK_THROWS_AS(scenario_from_json(bad, dir.string()), FormatError);
}

TEST_CASE("svg and dot output are well formed") {
  const auto w = build_world(overlap_polygon(), 30.0);
  const std::string svg = render_plan_svg(w->scene, w->tri, w->dep, w->classes, w->outcome, &w->critical);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("#fdae6b") != std::string::npos);  // u1
  CHECK(svg.find("#238b45") != std::string::npos);  // s_ext
  CHECK(svg.find("nan") == std::string::npos);
  const std::string dot = gag_to_dot(w->gag);
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));

  TraceStep step;
  step.intruders = {{0.8, 2.0}};
  for (const auto& gc : w->critical.guards) step.guards.push_back(gc.p2);
  const std::string frame = render_frame_svg(w->scene, w->tri, w->dep, w->classes, w->outcome, &w->critical, step);
  CHECK(frame.find("</svg>") != std::string::npos);
}

TEST_CASE("square scenario: one guard, no non-safe triangles") {
  const fs::path dir = fresh_dir("square");
  const PipelineResult res = run_pipeline(scenario_for(square(), 1.0), dir.string());
  REQUIRE(res.world->feasible());
  CHECK(res.world->dep.guards.size() == 1);
  const Json cap = read_json_file((dir / "capacity.json").string());
  CHECK(cap.at("note") == "no non-safe triangles");
  CHECK(cap.at("n_star").is_null());
  for (const auto& name : res.artifacts) CHECK(fs::exists(dir / name));
}

TEST_CASE("pipeline output is byte identical across runs") {
  Scenario s = scenario_for(overlap_polygon(), 30.0);
  s.paths["walk"] = IntruderPath{{{83.18, 6.32}, {13.01, 25.13}, {-55.08, 8.8}}};
  const fs::path a = fresh_dir("det_a"), b = fresh_dir("det_b");
  const PipelineResult ra = run_pipeline(s, a.string());
  const PipelineResult rb = run_pipeline(s, b.string());
  REQUIRE(ra.artifacts == rb.artifacts);
  CHECK(std::find(ra.artifacts.begin(), ra.artifacts.end(), "trace_walk.json") != ra.artifacts.end());
  for (const auto& name : ra.artifacts) {
    INFO(name);
    CHECK(slurp(a / name) == slurp(b / name));
  }
}

TEST_CASE("infeasible r writes the witness and no capacity") {
  const fs::path dir = fresh_dir("infeasible");
  const PipelineResult res = run_pipeline(scenario_for(overlap_polygon(), 0.05), dir.string());
  REQUIRE_FALSE(res.world->feasible());
  CHECK_FALSE(res.capacity.has_value());
  CHECK_FALSE(fs::exists(dir / "capacity.json"));
  const Json run = read_json_file((dir / "run.json").string());
  CHECK(run.at("feasible") == false);
  CHECK(run.at("failed_triangle") == res.world->outcome.failed_triangle);
  CHECK(slurp(dir / "plan.svg").find("#e31a1c") != std::string::npos);
}

TEST_CASE("stage errors name the stage") {
  const PolygonScene bowtie{{{0, 0}, {10, 10}, {10, 0}, {0, 10}}, {}};
  try {
    build_world(bowtie, 1.0);
    FAIL("expected a StageError");
  } catch (const StageError& e) {
    CHECK(e.stage() == "scene");
    CHECK(std::string(e.what()).rfind("scene: ", 0) == 0);
  }
  CHECK_THROWS_AS(build_world(square(), 0.0), StageError);
}

TEST_CASE("expand_path follows geodesics around reflex corners") {
  const auto w = build_structure(PolygonScene{u_shape().outer, {}});
  const Environment& env = w->env;
  Rng rng(3);
  const Box& b = env.box();
  std::uniform_real_distribution<double> ux(b.xmin, b.xmax), uy(b.ymin, b.ymax);
  for (int i = 0; i < 50; ++i) {
    Point p, q;
    do p = {ux(rng), uy(rng)}; while (!env.contains(p));
    do q = {ux(rng), uy(rng)}; while (!env.contains(q));
    const IntruderPath path = expand_path(env, IntruderPath{{p, q}});
    for (size_t k = 1; k < path.waypoints.size(); ++k) CHECK(env.segment_clear(path.waypoints[k - 1], path.waypoints[k]));
    CHECK(path.length() == doctest::Approx(env.distance(p, q)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(expand_path(env, IntruderPath{{{-1e6, -1e6}}}), DomainError);
}
