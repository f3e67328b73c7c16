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


#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "gallery_guard/session.hpp"

namespace httplib {
class Server;
}

namespace gg {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 0;                   // 0 picks a free port
  double max_snapshot_rate = 60;  // per session, per second; <= 0 disables
};

// HTTP/JSON session service. Each request body or reply is one frame.
//   POST /session                       -> {"type": "session", "id", "snapshot"}
//   POST /session/{id}/reset            -> snapshot
//   POST /session/{id}/message          body: message or array of messages
//   GET  /session/{id}/snapshot[?critical_curves=1]
// Messages are applied in order; an array stops at the first error and
// returns that error frame with its "index". When the snapshot rate is
// exceeded, moves still apply and the reply is {"type": "ack", "t",
// "throttled": true}; a throttled GET answers 429.
class SessionServer {
 public:
  using Clock = std::function<double()>;  // seconds, monotone

  SessionServer(std::shared_ptr<const World> world, double v_e, std::vector<Point> spawns,
                ServerOptions options = {}, Clock clock = {});
  ~SessionServer();
  SessionServer(const SessionServer&) = delete;
  SessionServer& operator=(const SessionServer&) = delete;

  // Binds and serves on a background thread; returns the bound port.
  int start();
  void stop();
  // Asks the listener to exit without joining; safe from any thread.
  void request_stop();
  // Blocks until the listener exits.
  void wait();

  // Transport-free entry point used by the HTTP handlers; returns
  // {status, body}.
  std::pair<int, Json> dispatch(const std::string& method, const std::string& path, const std::string& body,
                                bool critical_curves = false);

 private:
  struct Entry {
    std::unique_ptr<Session> session;
    double last_emit = -1e300;
  };

  bool admit(Entry& e);
  Entry* find(const std::string& id);

  std::shared_ptr<const World> world_;
  double v_e_;
  std::vector<Point> spawns_;
  ServerOptions options_;
  Clock clock_;

  std::mutex mu_;
  std::map<std::string, Entry> sessions_;
  int next_id_ = 1;

  std::unique_ptr<httplib::Server> http_;
  std::thread thread_;
};

}  // namespace gg
