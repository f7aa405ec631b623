#pragma once

#include <memory>
#include <string>
#include <thread>

#include "stylekit/review/ticket_store.h"

namespace httplib {
class Server;
}

namespace stylekit::orchestrator {

// HTTP front of a ticket store:
//
//   GET  /queue?kind=selection|qc&offset=0&limit=50
//        -> {"items": [...], "total": n, "offset": o, "limit": l}
//   POST /decision {"ticket_id", "action": accept|reject|select, "payload"}
//        -> 200 applied, 400 malformed, 404 unknown ticket, 409 resolved
//   GET  /progress -> {"selection": {pending, resolved}, "qc": {...}}
//
// Responses carry permissive CORS headers for a browser console.
class ReviewServer {
 public:
  explicit ReviewServer(review::TicketStore& store);
  ~ReviewServer();
  ReviewServer(const ReviewServer&) = delete;
  ReviewServer& operator=(const ReviewServer&) = delete;

  // Binds and serves on a background thread. Port 0 picks a free port.
  // Throws ConfigError when binding fails.
  void Start(const std::string& host, int port);
  // Blocks serving on the calling thread until Stop() from elsewhere.
  void Run(const std::string& host, int port);
  void Stop();
  int port() const { return port_; }

 private:
  void Bind(const std::string& host, int port);

  review::TicketStore& store_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
};

}  // namespace stylekit::orchestrator
