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

#include "gallery_guard/pipeline.hpp"

#include <cmath>
#include <filesystem>

#include "gallery_guard/svg.hpp"

namespace gg {

namespace {

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

}  // namespace

World::World(PolygonScene s) : scene(std::move(s)), env(scene) {}

IntruderPath expand_path(const Environment& env, const IntruderPath& path) {
  IntruderPath out;
  for (Point p : path.waypoints) {
    if (!env.contains(p)) throw DomainError("path waypoint lies outside the scene");
    if (out.waypoints.empty()) {
      out.waypoints.push_back(p);
      continue;
    }
    const GeodesicPath leg = env.geodesic(out.waypoints.back(), p);
    out.waypoints.insert(out.waypoints.end(), leg.waypoints.begin() + 1, leg.waypoints.end());
  }
  return out;
}

double default_dt(const Environment& env, double v_e) { return 1e-3 * env.diameter() / v_e; }

namespace {

std::shared_ptr<World> build_base(const PolygonScene& scene) {
  auto w = stage("scene", [&] { return std::make_shared<World>(normalize_scene(scene)); });
  const auto merged = stage("merge_holes", [&] { return merge_holes(w->scene).outer; });
  w->tri = stage("triangulate", [&] { return triangulate(merged); });
  w->dep = stage("deploy", [&] { return deploy(w->tri); });
  w->classes = stage("classify", [&] { return classify(w->tri, w->dep); });
  w->gag = stage("build_gag", [&] { return build_gag(w->env, w->tri, w->dep, w->classes); });
  return w;
}

}  // namespace

std::shared_ptr<const World> build_structure(const PolygonScene& scene) { return build_base(scene); }

std::shared_ptr<const World> build_world(const PolygonScene& scene, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw StageError("genalloc", "r must be positive and finite");
  auto w = build_base(scene);
  w->outcome = stage("genalloc", [&] { return genalloc(w->env, w->tri, w->dep, w->classes, w->gag, r); });
  if (w->outcome.feasible) {
    w->critical = stage("build_critical", [&] { return build_critical(w->env, w->tri, w->outcome.plan); });
  }
  return w;
}

std::shared_ptr<const World> world_from_plan(const PlanFile& plan) {
  auto w = stage("scene", [&] { return std::make_shared<World>(plan.deployment.scene); });
  w->tri = plan.deployment.tri;
  w->dep = plan.deployment.dep;
  w->classes = stage("classify", [&] { return classify(w->tri, w->dep); });
  w->gag = stage("build_gag", [&] { return build_gag(w->env, w->tri, w->dep, w->classes); });
  w->outcome = plan.outcome;
  if (w->outcome.feasible) {
    w->critical = stage("build_critical", [&] { return build_critical(w->env, w->tri, w->outcome.plan); });
  }
  return w;
}

PipelineResult run_pipeline(const Scenario& scenario, const std::string& out_dir) {
  PipelineResult res;
  res.world = build_world(scenario.scene, scenario.r());
  const World& w = *res.world;
  auto write_json = [&](const std::string& name, const Json& j) {
    stage("write", [&] { write_json_file((std::filesystem::path(out_dir) / name).string(), j); });
    res.artifacts.push_back(name);
  };
  auto write_text = [&](const std::string& name, const std::string& text) {
    stage("write", [&] { write_text_file((std::filesystem::path(out_dir) / name).string(), text); });
    res.artifacts.push_back(name);
  };

  write_json("deployment.json", deployment_to_json(w.scene, w.tri, w.dep));
  write_text("deployment.svg", render_deployment_svg(w.scene, w.tri, w.dep, w.classes));
  write_json("gag.json", gag_to_json(w.gag));
  GuardAdjacencyGraph oriented = w.gag;
  oriented.orientation = w.outcome.plan.orientation;
  write_text("gag.dot", gag_to_dot(oriented));
  res.minspeed = stage("minspeed", [&] { return clique_sweep(w.gag); });
  write_json("minspeed.json", min_speed_to_json(res.minspeed));
  write_json("plan.json", plan_to_json(w.scene, w.tri, w.dep, w.classes, w.outcome));
  write_text("plan.svg",
             render_plan_svg(w.scene, w.tri, w.dep, w.classes, w.outcome, w.feasible() ? &w.critical : nullptr));

  Json summary;
  summary["version"] = kFormatVersion;
  summary["kind"] = "run";
  summary["name"] = scenario.name;
  summary["r"] = w.r();
  summary["v_e"] = scenario.v_e;
  summary["v_g"] = scenario.v_g;
  summary["guards"] = w.dep.guards.size();
  summary["feasible"] = w.feasible();
  summary["r_min"] = number_or_null(res.minspeed.r_min);
  if (scenario.seed) summary["seed"] = *scenario.seed;
  if (!w.feasible()) {
    summary["failed_triangle"] = w.outcome.failed_triangle;
  } else {
    res.capacity = stage("capacity", [&] { return capacity(w.env, w.tri, w.classes, w.critical); });
    write_json("capacity.json", capacity_to_json(*res.capacity));
    summary["n_star"] = res.capacity->n_star < 0 ? Json(nullptr) : Json(res.capacity->n_star);
    SimulationConfig cfg;
    cfg.v_e = scenario.v_e;
    cfg.dt = default_dt(w.env, scenario.v_e);
    Json traces = Json::object();
    for (const auto& [name, path] : scenario.paths) {
      const auto sim = stage("simulate", [&] {
        return simulate(w.env, w.tri, w.dep, w.classes, w.outcome.plan, w.critical, {expand_path(w.env, path)}, cfg);
      });
      write_json("trace_" + name + ".json", trace_to_json(sim));
      traces[name] = {{"uncovered_steps", sim.uncovered_steps}, {"steps", sim.steps}};
    }
    summary["traces"] = traces;
  }
  summary["artifacts"] = res.artifacts;
  write_json("run.json", summary);
  return res;
}

}  // namespace gg
