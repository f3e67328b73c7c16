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


// gallery_guard: command-line front end for deployment, allocation,
// tracking and the session service.

#include <atomic>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "gallery_guard/pipeline.hpp"
#include "gallery_guard/server.hpp"
#include "gallery_guard/svg.hpp"

namespace {

using namespace gg;

constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

void emit_json(const std::string& out, const Json& j) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(out, j);
  }
}

PlanFile load_plan(const std::string& path) { return plan_from_json(read_json_file(path)); }

// A --scene given next to --plan must match the plan's embedded scene.
void check_scene(const std::string& scene_path, const PlanFile& plan) {
  if (scene_path.empty()) return;
  const Json a = scene_to_json(normalize_scene(load_scene(scene_path)));
  const Json b = scene_to_json(normalize_scene(plan.deployment.scene));
  if (a != b) throw DomainError("--scene does not match the scene stored in the plan");
}

// Random geodesic tours through uniformly sampled scene points.
std::map<std::string, IntruderPath> random_paths(const Environment& env, std::uint64_t seed, int count, int legs) {
  std::mt19937_64 rng(seed);
  const Box& b = env.box();
  std::uniform_real_distribution<double> ux(b.xmin, b.xmax), uy(b.ymin, b.ymax);
  auto sample = [&] {
    for (;;) {
      const Point p{ux(rng), uy(rng)};
      if (env.contains(p)) return p;
    }
  };
  std::map<std::string, IntruderPath> out;
  for (int i = 0; i < count; ++i) {
    IntruderPath path;
    path.waypoints.push_back(sample());
    for (int k = 0; k < legs; ++k) {
      const GeodesicPath leg = env.geodesic(path.waypoints.back(), sample());
      path.waypoints.insert(path.waypoints.end(), leg.waypoints.begin() + 1, leg.waypoints.end());
    }
    char name[32];
    std::snprintf(name, sizeof name, "random_%03d", i);
    out[name] = std::move(path);
  }
  return out;
}

std::atomic<SessionServer*> g_server{nullptr};

void on_signal(int) {
  if (SessionServer* s = g_server.load()) std::thread([s] { s->request_stop(); }).detach();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagonal-guard deployment, speed allocation and intruder tracking"};
  app.require_subcommand(1);
  std::string scene_path, scenario_path, plan_path, paths_path, out, svg, dot, frames_dir;
  double r = 0.0, dt = 0.0, v_e = 1.0;
  int port = 8765, random_count = 0, record_every = 1;
  std::uint64_t seed = 1;
  bool exact = false;
  std::string host = "127.0.0.1";

  auto* deploy_cmd = app.add_subcommand("deploy", "Triangulate a scene and place diagonal guards");
  deploy_cmd->add_option("--scene", scene_path, "Scene JSON")->required();
  deploy_cmd->add_option("--out", out, "Deployment JSON (stdout when omitted)");
  deploy_cmd->add_option("--svg", svg, "Deployment SVG");

  auto* gag_cmd = app.add_subcommand("gag", "Build the guard adjacency graph");
  gag_cmd->add_option("--scene", scene_path, "Scene JSON")->required();
  gag_cmd->add_option("--out", out, "GAG JSON (stdout when omitted)");
  gag_cmd->add_option("--dot", dot, "Graphviz output");

  auto* minspeed_cmd = app.add_subcommand("minspeed", "Minimum speed ratio for a complete allocation");
  minspeed_cmd->add_option("--scene", scene_path, "Scene JSON")->required();
  minspeed_cmd->add_option("--out", out, "Result JSON (stdout when omitted)");
  minspeed_cmd->add_flag("--exact", exact, "Exhaustive search instead of the clique sweep");

  auto* allocate_cmd = app.add_subcommand("allocate", "Allocate triangles to guards at speed ratio r");
  allocate_cmd->add_option("--scene", scene_path, "Scene JSON")->required();
  allocate_cmd->add_option("--r", r, "Speed ratio v_g / v_e")->required()->check(CLI::PositiveNumber);
  allocate_cmd->add_option("--out", out, "Plan JSON (stdout when omitted)");
  allocate_cmd->add_option("--svg", svg, "Plan SVG");

  auto* simulate_cmd = app.add_subcommand("simulate", "Run intruders against a plan");
  simulate_cmd->add_option("--plan", plan_path, "Plan JSON")->required();
  simulate_cmd->add_option("--scene", scene_path, "Scene JSON; must match the plan");
  auto* paths_opt = simulate_cmd->add_option("--paths", paths_path, "Intruder paths JSON");
  auto* random_opt =
      simulate_cmd->add_option("--random-paths", random_count, "Number of random geodesic tours")->check(CLI::PositiveNumber);
  paths_opt->excludes(random_opt);
  simulate_cmd->add_option("--seed", seed, "Seed for --random-paths");
  simulate_cmd->add_option("--dt", dt, "Time step (default 1e-3 * diameter / v_e)")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--v-e", v_e, "Intruder speed")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--record-every", record_every, "Record every k-th step")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--out", out, "Trace JSON (stdout when omitted)");
  simulate_cmd->add_option("--svg-frames", frames_dir, "Directory for one SVG per recorded step");

  auto* capacity_cmd = app.add_subcommand("capacity", "Intruders needed to uncover each non-safe triangle");
  capacity_cmd->add_option("--plan", plan_path, "Plan JSON")->required();
  capacity_cmd->add_option("--scene", scene_path, "Scene JSON; must match the plan");
  capacity_cmd->add_option("--out", out, "Capacity JSON (stdout when omitted)");

  auto* run_cmd = app.add_subcommand("run", "Run the whole pipeline for a scenario");
  run_cmd->add_option("--scenario", scenario_path, "Scenario JSON")->required();
  run_cmd->add_option("--out", out, "Output directory")->required();

  auto* serve_cmd = app.add_subcommand("serve", "Serve interactive sessions over local HTTP");
  serve_cmd->add_option("--scenario", scenario_path, "Scenario JSON")->required();
  serve_cmd->add_option("--port", port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", host, "Bind address");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*deploy_cmd) {
      const auto w = build_structure(load_scene(scene_path));
      emit_json(out, deployment_to_json(w->scene, w->tri, w->dep));
      if (!svg.empty()) write_text_file(svg, render_deployment_svg(w->scene, w->tri, w->dep, w->classes));
      std::cerr << w->dep.guards.size() << " guards for " << w->tri.triangles.size() << " triangles\n";
    } else if (*gag_cmd) {
      const auto w = build_structure(load_scene(scene_path));
      emit_json(out, gag_to_json(w->gag));
      if (!dot.empty()) write_text_file(dot, gag_to_dot(w->gag));
    } else if (*minspeed_cmd) {
      const auto w = build_structure(load_scene(scene_path));
      emit_json(out, min_speed_to_json(exact ? exact_unialloc(w->gag) : clique_sweep(w->gag)));
    } else if (*allocate_cmd) {
      const auto w = build_world(load_scene(scene_path), r);
      emit_json(out, plan_to_json(w->scene, w->tri, w->dep, w->classes, w->outcome));
      if (!svg.empty()) {
        write_text_file(svg, render_plan_svg(w->scene, w->tri, w->dep, w->classes, w->outcome,
                                             w->feasible() ? &w->critical : nullptr));
      }
      if (!w->feasible()) {
        std::cerr << "infeasible at r = " << r << ": triangle " << w->outcome.failed_triangle
                  << " has no allocatable guard\n";
        return kExitInfeasible;
      }
    } else if (*simulate_cmd) {
      const PlanFile plan = load_plan(plan_path);
      check_scene(scene_path, plan);
      const auto w = world_from_plan(plan);
      if (!w->feasible()) throw DomainError("cannot simulate an infeasible plan");
      std::map<std::string, IntruderPath> named;
      if (!paths_path.empty()) {
        named = paths_from_json(read_json_file(paths_path));
      } else {
        named = random_paths(w->env, seed, random_count > 0 ? random_count : 1, 4);
      }
      std::vector<IntruderPath> paths;
      for (const auto& [name, p] : named) paths.push_back(expand_path(w->env, p));
      SimulationConfig cfg;
      cfg.v_e = v_e;
      cfg.dt = dt > 0.0 ? dt : default_dt(w->env, v_e);
      cfg.record_every = record_every;
      const SimulationResult sim =
          simulate(w->env, w->tri, w->dep, w->classes, w->outcome.plan, w->critical, paths, cfg);
      emit_json(out, trace_to_json(sim));
      if (!frames_dir.empty()) {
        for (size_t k = 0; k < sim.trace.size(); ++k) {
          char name[32];
          std::snprintf(name, sizeof name, "frame_%06zu.svg", k);
          write_text_file((std::filesystem::path(frames_dir) / name).string(),
                          render_frame_svg(w->scene, w->tri, w->dep, w->classes, w->outcome, &w->critical,
                                           sim.trace[k]));
        }
      }
      std::cerr << sim.steps << " steps, " << sim.uncovered_steps << " uncovered, " << sim.speed_events
                << " speed events\n";
    } else if (*capacity_cmd) {
      const PlanFile plan = load_plan(plan_path);
      check_scene(scene_path, plan);
      const auto w = world_from_plan(plan);
      if (!w->feasible()) throw DomainError("capacity needs a feasible plan");
      emit_json(out, capacity_to_json(capacity(w->env, w->tri, w->classes, w->critical)));
    } else if (*run_cmd) {
      const PipelineResult res = run_pipeline(load_scenario(scenario_path), out);
      for (const auto& name : res.artifacts) std::cerr << "wrote " << (std::filesystem::path(out) / name).string() << "\n";
      if (!res.world->feasible()) {
        std::cerr << "infeasible: triangle " << res.world->outcome.failed_triangle << " (see plan.svg)\n";
        return kExitInfeasible;
      }
    } else if (*serve_cmd) {
      const Scenario scenario = load_scenario(scenario_path);
      const auto w = build_world(scenario.scene, scenario.r());
      if (!w->feasible()) throw StageError("genalloc", "serve needs a feasible plan");
      ServerOptions options;
      options.host = host;
      options.port = port;
      SessionServer server(w, scenario.v_e, default_spawns(*w, scenario), options);
      const int bound = server.start();
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cout << "serving on http://" << host << ":" << bound << std::endl;
      server.wait();
      g_server = nullptr;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
