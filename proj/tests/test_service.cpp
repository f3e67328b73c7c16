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


#include <cmath>

#include "doctest.h"
#include "gallery_guard/server.hpp"
#include "httplib.h"
#include "support/scenes.hpp"
#include "support/tracking_support.hpp"

using namespace gg;
using namespace gg::testing;

namespace {

std::shared_ptr<const World> overlap_world(double r = 30.0) {
  static std::map<double, std::shared_ptr<const World>> cache;
  auto& w = cache[r];
  if (!w) w = build_world(PolygonScene{overlap_scene().polygon, {}}, r);
  return w;
}

Point spawn_point(const World& w) {
  const auto pts = w.tri.triangle_points(0);
  return (pts[0] + pts[1] + pts[2]) * (1.0 / 3.0);
}

Json move(int id, Point target, double dt) {
  return {{"type", "move_intruder"}, {"id", id}, {"target", {target.x, target.y}}, {"dt", dt}};
}

Point json_point(const Json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

std::vector<Point> guards_of(const Json& snap) {
  std::vector<Point> out;
  for (const auto& g : snap.at("guards")) out.push_back(json_point(g.at("pos")));
  return out;
}

Json without_t(Json j) {
  j.erase("t");
  return j;
}

}  // namespace

TEST_CASE("moving to the current position changes only t") {
  const auto w = overlap_world();
  Session s("a", w, 1.0, {spawn_point(*w)});
  const Json before = s.snapshot();
  const Json after = s.handle(move(0, spawn_point(*w), 0.25));
  CHECK(after.at("t") == doctest::Approx(0.25));
  CHECK(without_t(after) == without_t(before));
}

TEST_CASE("long moves are clamped to v_e * dt along the geodesic") {
  const auto w = overlap_world();
  const Point start = spawn_point(*w);
  Rng rng(11);
  int clamped = 0;
  for (int i = 0; i < 40; ++i) {
    Session s("a", w, 2.0, {start});
    const Point target = random_point_in(w->env, rng);
    const double dt = 0.5 + 4.0 * (i % 5);
    const Json snap = s.handle(move(0, target, dt));
    const Point got = json_point(snap.at("intruders").at(0));
    const double full = w->env.distance(start, target);
    if (full > 2.0 * dt) {
      ++clamped;
      CHECK(snap.at("clamped") == true);
      CHECK(w->env.distance(start, got) == doctest::Approx(2.0 * dt).epsilon(1e-9));
      // Still on a shortest path to the target.
      CHECK(w->env.distance(got, target) == doctest::Approx(full - 2.0 * dt).epsilon(1e-9));
    } else {
      CHECK(snap.at("clamped") == false);
      CHECK(got == target);
    }
  }
  CHECK(clamped > 5);
}

TEST_CASE("targets outside the scene are projected and flagged") {
  const auto w = overlap_world();
  Session s("a", w, 1.0, {spawn_point(*w)});
  const Json snap = s.handle(move(0, {1e4, 1e4}, 1e6));
  CHECK(snap.at("clamped") == true);
  CHECK(w->env.contains(json_point(snap.at("intruders").at(0))));
}

TEST_CASE("malformed messages return error frames and keep state") {
  const auto w = overlap_world();
  Session s("a", w, 1.0, {spawn_point(*w)});
  s.handle(move(0, {20, 20}, 3.0));
  const Json state = s.snapshot();
  const std::vector<Json> bad = {
      Json(42),
      Json::object(),
      {{"type", "fly"}},
      {{"type", "move_intruder"}, {"id", 0}, {"target", {1.0}}, {"dt", 1.0}},
      {{"type", "move_intruder"}, {"id", 3}, {"target", {1.0, 2.0}}, {"dt", 1.0}},
      {{"type", "move_intruder"}, {"id", 0}, {"target", {1.0, 2.0}}, {"dt", -1.0}},
      {{"type", "move_intruder"}, {"id", 0}, {"target", {"x", 2.0}}, {"dt", 1.0}},
      {{"type", "move_intruder"}, {"id", 0.5}, {"target", {1.0, 2.0}}, {"dt", 1.0}},
      {{"type", "move_intruder"}, {"id", 0}, {"target", {1.0, 2.0}}},
  };
  for (const Json& m : bad) {
    INFO(m.dump());
    const Json reply = s.handle(m);
    CHECK(reply.at("type") == "error");
    CHECK(reply.at("message").get<std::string>().size() > 0);
  }
  CHECK(s.snapshot() == state);
  CHECK(s.history().size() == 2);
}

TEST_CASE("reset restores the spawn state") {
  const auto w = overlap_world();
  Session s("a", w, 1.0, {spawn_point(*w)});
  const Json fresh = s.snapshot();
  s.handle(move(0, {-55.08, 8.8}, 30.0));
  const Json reset = s.handle({{"type", "reset"}});
  CHECK(reset == fresh);
  CHECK(s.history().size() == 1);
}

TEST_CASE("critical curves are sent only on request") {
  const auto w = overlap_world();
  Session s("a", w, 1.0, {spawn_point(*w)});
  CHECK_FALSE(s.snapshot().contains("critical_curves"));
  const Json snap = s.handle({{"type", "snapshot"}, {"critical_curves", true}});
  REQUIRE(snap.contains("critical_curves"));
  CHECK(snap.at("critical_curves") == critical_to_json(w->critical));
}

TEST_CASE("infeasible plans cannot host sessions") {
  const auto w = overlap_world(0.05);
  REQUIRE_FALSE(w->feasible());
  CHECK_THROWS_AS(Session("a", w, 1.0, {spawn_point(*w)}), DomainError);
  const auto ok = overlap_world();
  CHECK_THROWS_AS(Session("a", ok, 1.0, {{1e5, 1e5}}), DomainError);
}

// 30 s of steering at 60 Hz with random targets, two intruders.
TEST_CASE("steering sessions respect caps and replay through simulate") {
  const auto w = overlap_world();
  const double v_e = w->env.diameter() / 8.0;
  Rng rng(5);
  Session s("a", w, v_e, {spawn_point(*w), random_point_in(w->env, rng)});
  const double tol = 1e-9;
  std::vector<std::vector<Point>> guard_log{guards_of(s.snapshot())};
  std::vector<Point> prev_intruders = s.history().back().intruders;
  Point target[2] = {random_point_in(w->env, rng), random_point_in(w->env, rng)};
  std::uniform_real_distribution<double> jitter(0.5, 1.5);
  std::uniform_real_distribution<double> box_x(w->env.box().xmin - 20, w->env.box().xmax + 20);
  std::uniform_real_distribution<double> box_y(w->env.box().ymin - 20, w->env.box().ymax + 20);
  for (int k = 0; k < 1800; ++k) {
    const int id = k % 2;
    if (k % 90 == id) target[id] = k % 180 < 90 ? random_point_in(w->env, rng) : Point{box_x(rng), box_y(rng)};
    const double dt = jitter(rng) / 60.0;
    const Json snap = s.handle(move(id, target[id], dt));
    REQUIRE(snap.at("type") == "snapshot");
    const std::vector<Point> guards = guards_of(snap);
    for (size_t g = 0; g < guards.size(); ++g) CHECK(dist(guards[g], guard_log.back()[g]) <= s.v_g() * dt + tol);
    std::vector<Point> intruders;
    for (const auto& p : snap.at("intruders")) intruders.push_back(json_point(p));
    for (size_t i = 0; i < intruders.size(); ++i) {
      CHECK(dist(intruders[i], prev_intruders[i]) <= v_e * dt + tol);
      CHECK(w->env.contains(intruders[i]));
    }
    prev_intruders = intruders;
    guard_log.push_back(guards);
  }

  const auto frames = s.history();
  REQUIRE(frames.size() == guard_log.size());
  const SimulationResult sim =
      simulate_frames(w->env, w->tri, w->dep, w->classes, w->outcome.plan, w->critical, frames, v_e);
  REQUIRE(sim.trace.size() == frames.size());
  double worst = 0.0;
  for (size_t k = 0; k < frames.size(); ++k) {
    for (size_t g = 0; g < guard_log[k].size(); ++g) worst = std::max(worst, dist(sim.trace[k].guards[g], guard_log[k][g]));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("sprinting from u1 to u2 finds the guard already at v2") {
  const auto w = overlap_world();
  Rng rng(9);
  const double v_e = 1.0;
  const double dt = 1e-3 * w->env.diameter() / v_e;
  int sprints = 0;
  for (size_t g = 0; g < w->critical.guards.size(); ++g) {
    const GuardCritical& gc = w->critical.guards[g];
    if (gc.parked) continue;
    const GuardPlan& gp = w->outcome.plan.guards[g];
    for (int rep = 0; rep < 3; ++rep) {
      const Point from = random_point_in(gp.u1, rng);
      const Point to = random_point_in(gp.u2, rng);
      Session s("a", w, v_e, {from});
      const double slack = dt * (v_e + s.v_g());
      bool entered = false;
      for (int k = 0; k < 100000 && !entered; ++k) {
        const Json snap = s.handle(move(0, to, dt));
        const Point p = json_point(snap.at("intruders").at(0));
        if (gp.u2.contains(p)) {
          entered = true;
          CHECK(dist(guards_of(snap)[g], gc.p2) <= slack);
          CHECK(snap.at("capped_guards") == 0);
        }
      }
      CHECK(entered);
      ++sprints;
    }
  }
  CHECK(sprints > 0);
}

TEST_CASE("server protocol over HTTP") {
  const auto w = overlap_world();
  ServerOptions opts;
  opts.max_snapshot_rate = 0;
  SessionServer server(w, 1.0, {spawn_point(*w)}, opts);
  const int port = server.start();
  REQUIRE(port > 0);
  httplib::Client cli("127.0.0.1", port);

  auto created = cli.Post("/session", "", "application/json");
  REQUIRE(created);
  CHECK(created->status == 200);
  const Json hello = Json::parse(created->body);
  CHECK(hello.at("type") == "session");
  const std::string id = hello.at("id");
  CHECK(hello.at("snapshot").at("t") == 0.0);

  auto moved = cli.Post("/session/" + id + "/message", move(0, {13.01, 25.13}, 2.0).dump(), "application/json");
  REQUIRE(moved);
  CHECK(moved->status == 200);
  CHECK(Json::parse(moved->body).at("t") == doctest::Approx(2.0));

  const Json batch = Json::array({move(0, {-55.08, 8.8}, 1.0), move(0, {-55.08, 8.8}, 1.0)});
  auto batched = cli.Post("/session/" + id + "/message", batch.dump(), "application/json");
  REQUIRE(batched);
  CHECK(Json::parse(batched->body).at("t") == doctest::Approx(4.0));

  const Json broken = Json::array({move(0, {0, 0}, 1.0), {{"type", "nope"}}});
  auto err = cli.Post("/session/" + id + "/message", broken.dump(), "application/json");
  REQUIRE(err);
  CHECK(err->status == 400);
  CHECK(Json::parse(err->body).at("index") == 1);

  auto garbage = cli.Post("/session/" + id + "/message", "{not json", "application/json");
  REQUIRE(garbage);
  CHECK(garbage->status == 400);
  CHECK(Json::parse(garbage->body).at("type") == "error");

  auto snap = cli.Get("/session/" + id + "/snapshot?critical_curves=1");
  REQUIRE(snap);
  const Json s = Json::parse(snap->body);
  CHECK(s.at("t") == doctest::Approx(5.0));
  CHECK(s.contains("critical_curves"));

  auto reset = cli.Post("/session/" + id + "/reset", "", "application/json");
  REQUIRE(reset);
  CHECK(Json::parse(reset->body).at("t") == 0.0);

  auto missing = cli.Get("/session/zzz/snapshot");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  // Sessions are independent.
  auto other = cli.Post("/session", "", "application/json");
  REQUIRE(other);
  CHECK(Json::parse(other->body).at("id") != id);
  server.stop();
}

TEST_CASE("snapshots are throttled per session while moves still apply") {
  const auto w = overlap_world();
  double now = 100.0;
  SessionServer server(w, 1.0, {spawn_point(*w)}, ServerOptions{}, [&] { return now; });
  const std::string id = server.dispatch("POST", "/session", "").second.at("id");
  const std::string path = "/session/" + id + "/message";
  const std::string step = move(0, {13.01, 25.13}, 0.1).dump();

  now += 0.005;
  auto fast = server.dispatch("POST", path, step);
  CHECK(fast.second.at("type") == "ack");
  CHECK(fast.second.at("throttled") == true);
  CHECK(fast.second.at("t") == doctest::Approx(0.1));

  now += 1.0 / 60.0;
  auto slow = server.dispatch("POST", path, step);
  CHECK(slow.second.at("type") == "snapshot");
  CHECK(slow.second.at("t") == doctest::Approx(0.2));

  now += 0.001;
  CHECK(server.dispatch("GET", "/session/" + id + "/snapshot", "").first == 429);

  // A second session has its own budget.
  const std::string other = server.dispatch("POST", "/session", "").second.at("id");
  now += 0.02;
  CHECK(server.dispatch("GET", "/session/" + other + "/snapshot", "").first == 200);
}
