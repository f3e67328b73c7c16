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


#include "gallery_guard/session.hpp"

#include <cmath>

namespace gg {

namespace {

class BadMessage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) throw BadMessage(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw BadMessage(std::string(what) + " must be finite");
  return v;
}

Json error_frame(const std::string& message, double t) {
  return {{"type", "error"}, {"message", message}, {"t", t}};
}

}  // namespace

Point walk_geodesic(const Environment& env, Point a, Point b, double s) {
  const GeodesicPath path = env.geodesic(a, b);
  if (path.length <= s) return b;
  Point cur = path.waypoints.front();
  for (size_t i = 1; i < path.waypoints.size(); ++i) {
    const double len = dist(cur, path.waypoints[i]);
    if (s <= len) return len > 0.0 ? lerp(cur, path.waypoints[i], s / len) : cur;
    s -= len;
    cur = path.waypoints[i];
  }
  return path.waypoints.back();
}

std::vector<Point> default_spawns(const World& world, const Scenario& scenario) {
  std::vector<Point> out;
  for (const auto& [name, path] : scenario.paths) out.push_back(path.waypoints.front());
  if (out.empty()) {
    const auto pts = world.tri.triangle_points(0);
    out.push_back((pts[0] + pts[1] + pts[2]) * (1.0 / 3.0));
  }
  return out;
}

Session::Session(std::string id, std::shared_ptr<const World> world, double v_e, std::vector<Point> spawns)
    : id_(std::move(id)), world_(std::move(world)), v_e_(v_e), spawns_(std::move(spawns)) {
  if (!world_ || !world_->feasible()) throw DomainError("sessions need a feasible plan");
  if (!(v_e_ > 0.0) || !std::isfinite(v_e_)) throw DomainError("sessions need v_e > 0");
  if (spawns_.empty()) throw DomainError("sessions need at least one intruder");
  for (Point p : spawns_) {
    if (!world_->env.contains(p)) throw DomainError("intruder spawn lies outside the scene");
  }
  reset_locked();
}

void Session::reset() {
  std::lock_guard lock(mu_);
  reset_locked();
}

void Session::reset_locked() {
  t_ = 0.0;
  intruders_ = spawns_;
  guards_.resize(world_->critical.guards.size());
  for (size_t g = 0; g < guards_.size(); ++g) guards_[g] = guard_position(world_->critical.guards[g], intruders_);
  history_.assign(1, IntruderFrame{0.0, intruders_});
  last_dt_ = 0.0;
  clamped_ = false;
  capped_guards_ = 0;
  max_step_ratio_ = 0.0;
}

std::vector<IntruderFrame> Session::history() const {
  std::lock_guard lock(mu_);
  return history_;
}

Json Session::snapshot(bool critical_curves) const {
  std::lock_guard lock(mu_);
  return snapshot_locked(critical_curves);
}

Json Session::handle(const Json& message) {
  std::lock_guard lock(mu_);
  try {
    return apply(message);
  } catch (const BadMessage& e) {
    return error_frame(e.what(), t_);
  } catch (const Json::exception& e) {
    return error_frame(std::string("malformed message: ") + e.what(), t_);
  }
}

Json Session::apply(const Json& message) {
  if (!message.is_object()) throw BadMessage("message must be a JSON object");
  if (!message.contains("type") || !message.at("type").is_string()) throw BadMessage("message needs a string type");
  const std::string type = message.at("type");
  const bool curves = message.contains("critical_curves") && message.at("critical_curves").is_boolean() &&
                      message.at("critical_curves").get<bool>();
  if (type == "snapshot") return snapshot_locked(curves);
  if (type == "reset") {
    reset_locked();
    return snapshot_locked(curves);
  }
  if (type != "move_intruder") throw BadMessage("unknown message type '" + type + "'");

  if (!message.contains("id") || !message.at("id").is_number_integer()) throw BadMessage("id must be an integer");
  const long long id = message.at("id").get<long long>();
  if (id < 0 || id >= static_cast<long long>(intruders_.size())) throw BadMessage("no intruder with that id");
  if (!message.contains("target")) throw BadMessage("target is missing");
  const Json& tj = message.at("target");
  if (!tj.is_array() || tj.size() != 2) throw BadMessage("target must be [x, y]");
  Point target{finite_number(tj[0], "target x"), finite_number(tj[1], "target y")};
  if (!message.contains("dt")) throw BadMessage("dt is missing");
  const double dt = finite_number(message.at("dt"), "dt");
  if (!(dt > 0.0)) throw BadMessage("dt must be positive");

  const Environment& env = world_->env;
  bool clamped = false;
  if (!env.contains(target)) {
    target = env.project_inside(target);
    clamped = true;
  }
  const Point from = intruders_[id];
  const double cap = v_e_ * dt;
  const Point to = walk_geodesic(env, from, target, cap);
  if (!(to == target)) clamped = true;

  intruders_[id] = to;
  t_ += dt;
  capped_guards_ = advance_guards(world_->critical, intruders_, v_g() * dt, guards_, max_step_ratio_);
  history_.push_back(IntruderFrame{t_, intruders_});
  last_dt_ = dt;
  clamped_ = clamped;
  return snapshot_locked(curves);
}

Json Session::snapshot_locked(bool critical_curves) const {
  const World& w = *world_;
  const double slack = last_dt_ * (v_e_ + v_g());
  Json guards = Json::array(), intruders = Json::array();
  for (size_t g = 0; g < guards_.size(); ++g) guards.push_back({{"id", g}, {"pos", point_to_json(guards_[g])}});
  for (Point p : intruders_) intruders.push_back(point_to_json(p));
  std::vector<int> covered;
  for (int t : w.classes.nonsafe_triangles()) {
    if (!covered_by(w.tri, w.classes, t, guards_, w.dep, slack).empty()) covered.push_back(t);
  }
  Json visible = Json::array();
  for (const auto& row : visibility(w.env, guards_, intruders_)) visible.push_back(row);
  Json j = {{"type", "snapshot"},
            {"session", id_},
            {"t", t_},
            {"guards", guards},
            {"intruders", intruders},
            {"visible", visible},
            {"covered_triangles", covered},
            {"uncovered", unseen_triangles(w.env, w.tri, w.classes, w.dep, guards_, intruders_, slack)},
            {"clamped", clamped_},
            {"capped_guards", capped_guards_}};
  if (critical_curves) j["critical_curves"] = critical_to_json(w.critical);
  return j;
}

}  // namespace gg
