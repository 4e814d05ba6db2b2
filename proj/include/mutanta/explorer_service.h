#ifndef MUTANTA_EXPLORER_SERVICE_H_
#define MUTANTA_EXPLORER_SERVICE_H_

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "mutanta/json_io.h"
#include "mutanta/limits.h"
#include "mutanta/polygon.h"

namespace httplib {
class Server;
}

namespace mutanta {

// Error with an HTTP status; rendered as {"error": code, "message": text}.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, std::string code, const std::string& message)
      : std::runtime_error(message), status_(status), code_(std::move(code)) {}
  int status() const { return status_; }
  const std::string& code() const { return code_; }

 private:
  int status_;
  std::string code_;
};

struct ServiceResponse {
  int status = 200;
  Json body;
};

struct ServiceOptions {
  Limits limits;
  std::chrono::seconds idle_timeout{30 * 60};
  int jobs = 0;
};

// Everything the explorer draws for one triangulation: diagonals (index =
// quiver vertex), arrows, close-to-border flags, border-vertex kinds (null
// for diagonals that are not close), and the rotation orbit size.
Json state_view(const Triangulation& t);

bool is_local_origin(const std::string& origin);

// In-memory sessions over the flip / mutate / rotate engine. Requests on one
// session are serialized; different sessions run concurrently. Catalogs are
// computed once per rank and shared.
class ExplorerService {
 public:
  using Clock = std::chrono::steady_clock;

  explicit ExplorerService(ServiceOptions options = {},
                           std::function<Clock::time_point()> now = Clock::now);

  Json create_session(const Json& body);
  Json get_state(const std::string& id);
  Json flip(const std::string& id, const Json& body);
  Json mutate(const std::string& id, const Json& body);
  Json rotate(const std::string& id, const Json& body);
  Json undo(const std::string& id);
  Json catalog(int n);

  // Routes a request; errors become 4xx responses.
  ServiceResponse handle(const std::string& method, const std::string& path,
                         const std::string& body);

  // Registers the routes (and localhost-only CORS) on an httplib server.
  void mount(httplib::Server& server);

  // Drops sessions idle longer than the timeout; returns how many.
  std::size_t evict_idle();
  std::size_t session_count() const;

 private:
  struct Move {
    enum class Kind { kFlip, kRotate } kind;
    Diagonal diagonal;
    int steps = 0;
  };

  struct Session {
    Session(int n, Triangulation start, Clock::time_point now)
        : rank(n), initial(start), current(std::move(start)), last_used(now) {}

    std::mutex mutex;
    int rank = 0;
    Triangulation initial;
    Triangulation current;
    std::vector<Move> history;
    Clock::time_point last_used;
  };

  std::shared_ptr<Session> find(const std::string& id);
  Json apply(const std::string& id, const Move& move);
  // Caller holds session.mutex.
  Json apply_locked(Session& session, const Move& move);
  static Triangulation replay(const Triangulation& initial,
                              const std::vector<Move>& history);
  std::string new_id();

  ServiceOptions options_;
  std::function<Clock::time_point()> now_;

  mutable std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t id_counter_ = 0;
  std::uint64_t id_salt_;

  std::mutex catalog_mutex_;
  std::map<int, std::shared_future<Json>> catalogs_;
};

}  // namespace mutanta

#endif  // MUTANTA_EXPLORER_SERVICE_H_
