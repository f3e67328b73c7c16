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


#include "gallery_guard/server.hpp"

#include <regex>

#include "httplib.h"

namespace gg {

namespace {

double steady_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

Json error_body(const std::string& message) { return {{"type", "error"}, {"message", message}}; }

}  // namespace

SessionServer::SessionServer(std::shared_ptr<const World> world, double v_e, std::vector<Point> spawns,
                             ServerOptions options, Clock clock)
    : world_(std::move(world)),
      v_e_(v_e),
      spawns_(std::move(spawns)),
      options_(std::move(options)),
      clock_(clock ? std::move(clock) : Clock(steady_seconds)) {
  // Fail at construction rather than on the first POST /session.
  Session probe("probe", world_, v_e_, spawns_);
}

SessionServer::~SessionServer() { stop(); }

SessionServer::Entry* SessionServer::find(const std::string& id) {
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : &it->second;
}

bool SessionServer::admit(Entry& e) {
  if (options_.max_snapshot_rate <= 0) return true;
  const double now = clock_();
  if (now - e.last_emit < 1.0 / options_.max_snapshot_rate) return false;
  e.last_emit = now;
  return true;
}

std::pair<int, Json> SessionServer::dispatch(const std::string& method, const std::string& path,
                                             const std::string& body, bool critical_curves) {
  static const std::regex kSessionPath(R"(^/session/([A-Za-z0-9_-]+)/(reset|message|snapshot)$)");
  if (method == "POST" && path == "/session") {
    std::lock_guard lock(mu_);
    const std::string id = "s" + std::to_string(next_id_++);
    Entry& e = sessions_[id];
    e.session = std::make_unique<Session>(id, world_, v_e_, spawns_);
    e.last_emit = clock_();
    return {200, {{"type", "session"}, {"id", id}, {"snapshot", e.session->snapshot(critical_curves)}}};
  }
  std::smatch m;
  if (!std::regex_match(path, m, kSessionPath)) return {404, error_body("no route " + method + " " + path)};
  const std::string id = m[1], action = m[2];

  Session* session = nullptr;
  {
    std::lock_guard lock(mu_);
    Entry* e = find(id);
    if (!e) return {404, error_body("no session '" + id + "'")};
    session = e->session.get();
  }
  auto emit = [&](Json snapshot) -> std::pair<int, Json> {
    std::lock_guard lock(mu_);
    if (admit(*find(id))) return {200, std::move(snapshot)};
    return {200, {{"type", "ack"}, {"t", snapshot.at("t")}, {"throttled", true}}};
  };

  if (action == "snapshot") {
    if (method != "GET") return {405, error_body("use GET for snapshots")};
    std::lock_guard lock(mu_);
    if (!admit(*find(id))) {
      return {429, {{"type", "throttled"}, {"retry_after", 1.0 / options_.max_snapshot_rate}}};
    }
    return {200, session->snapshot(critical_curves)};
  }
  if (method != "POST") return {405, error_body("use POST for " + action)};
  if (action == "reset") {
    session->reset();
    std::lock_guard lock(mu_);
    find(id)->last_emit = clock_();
    return {200, session->snapshot(critical_curves)};
  }

  Json message = Json::parse(body, nullptr, false);
  if (message.is_discarded()) return {400, error_body("body is not valid JSON")};
  if (!message.is_array()) message = Json::array({message});
  if (message.empty()) return {400, error_body("empty message batch")};
  Json reply;
  for (size_t i = 0; i < message.size(); ++i) {
    reply = session->handle(message[i]);
    if (reply.at("type") == "error") {
      reply["index"] = i;
      return {400, reply};
    }
  }
  if (critical_curves && !reply.contains("critical_curves")) reply = session->snapshot(true);
  return emit(std::move(reply));
}

int SessionServer::start() {
  if (http_) throw DomainError("server already started");
  http_ = std::make_unique<httplib::Server>();
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    const bool curves = req.has_param("critical_curves") && req.get_param_value("critical_curves") != "0";
    std::pair<int, Json> out;
    try {
      out = dispatch(req.method, req.path, req.body, curves);
    } catch (const std::exception& e) {
      out = {500, error_body(e.what())};
    }
    res.status = out.first;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(out.second.dump(), "application/json");
  };
  http_->Get(R"(/.*)", handler);
  http_->Post(R"(/.*)", handler);
  const int port = options_.port == 0 ? http_->bind_to_any_port(options_.host)
                                      : (http_->bind_to_port(options_.host, options_.port) ? options_.port : -1);
  if (port < 0) {
    http_.reset();
    throw DomainError("cannot bind " + options_.host + ":" + std::to_string(options_.port));
  }
  thread_ = std::thread([this] { http_->listen_after_bind(); });
  http_->wait_until_ready();
  return port;
}

void SessionServer::wait() {
  if (thread_.joinable()) thread_.join();
}

void SessionServer::request_stop() {
  if (http_) http_->stop();
}

void SessionServer::stop() {
  if (http_) http_->stop();
  if (thread_.joinable()) thread_.join();
  http_.reset();
}

}  // namespace gg
