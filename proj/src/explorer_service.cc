#include "mutanta/explorer_service.h"

#include <httplib.h>

#include <cstdio>
#include <random>
#include <regex>

#include "mutanta/enumeration.h"

namespace mutanta {

namespace {

ServiceError bad_request(const std::string& message) {
  return ServiceError(400, "bad_request", message);
}
ServiceError not_found(const std::string& message) {
  return ServiceError(404, "not_found", message);
}
ServiceError conflict(const std::string& message) {
  return ServiceError(409, "conflict", message);
}

int int_field(const Json& body, const char* key) {
  if (!body.is_object() || !body.contains(key) || !body.at(key).is_number_integer()) {
    throw bad_request(std::string("body needs an integer field \"") + key + "\"");
  }
  return body.at(key).get<int>();
}

Json error_body(const std::string& code, const std::string& message) {
  Json j;
  j["error"] = code;
  j["message"] = message;
  return j;
}

}  // namespace

Json state_view(const Triangulation& t) {
  const int m = t.polygon_size();
  const Quiver q = quiver_of(t);
  Json view;
  view["polygon_size"] = m;
  view["diagonals"] = to_json(t)["diagonals"];
  view["arrows"] = to_json(q)["arrows"];
  Json close = Json::array();
  Json kinds = Json::array();
  for (const Diagonal& d : t.diagonals()) {
    const bool c = is_close_to_border(d, m);
    close.push_back(c);
    if (c) {
      kinds.push_back(to_string(classify_close_diagonal(t, d)));
    } else {
      kinds.push_back(nullptr);
    }
  }
  view["close_to_border"] = std::move(close);
  view["classification"] = std::move(kinds);
  view["orbit_size"] = rotation_canonical(t).orbit_size;
  return view;
}

bool is_local_origin(const std::string& origin) {
  static const std::regex local(R"(^https?://(localhost|127\.0\.0\.1|\[::1\])(:\d+)?$)");
  return std::regex_match(origin, local);
}

ExplorerService::ExplorerService(ServiceOptions options,
                                 std::function<Clock::time_point()> now)
    : options_(options), now_(std::move(now)), id_salt_(std::random_device{}()) {
  id_salt_ = (id_salt_ << 32) ^ std::random_device{}();
}

std::string ExplorerService::new_id() {
  std::mt19937_64 mix(id_salt_ ^ (++id_counter_ * 0x9e3779b97f4a7c15ULL));
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx",
                static_cast<unsigned long long>(mix()),
                static_cast<unsigned long long>(mix()));
  return buf;
}

std::shared_ptr<ExplorerService::Session> ExplorerService::find(const std::string& id) {
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw not_found("unknown session " + id);
  return it->second;
}

Json ExplorerService::create_session(const Json& body) {
  const int n = int_field(body, "n");
  const int limit = std::min(options_.limits.max_polygon_size - 3, kMaxPolygonSize - 3);
  if (n < 2 || n > limit) {
    throw bad_request("n must be in [2, " + std::to_string(limit) + "]");
  }
  auto session = std::make_shared<Session>(n, fan_triangulation(n + 3, 0), now_());
  Json out;
  {
    std::lock_guard lock(sessions_mutex_);
    std::string id = new_id();
    while (sessions_.contains(id)) id = new_id();
    sessions_.emplace(id, session);
    out["id"] = id;
  }
  out["state"] = state_view(session->current);
  return out;
}

Json ExplorerService::get_state(const std::string& id) {
  auto session = find(id);
  std::lock_guard lock(session->mutex);
  session->last_used = now_();
  return state_view(session->current);
}

Triangulation ExplorerService::replay(const Triangulation& initial,
                                      const std::vector<Move>& history) {
  Triangulation t = initial;
  for (const Move& move : history) {
    t = move.kind == Move::Kind::kFlip ? mutanta::flip(t, move.diagonal)
                                       : mutanta::rotate(t, move.steps);
  }
  return t;
}

Json ExplorerService::apply(const std::string& id, const Move& move) {
  auto session = find(id);
  std::lock_guard lock(session->mutex);
  return apply_locked(*session, move);
}

Json ExplorerService::apply_locked(Session& session, const Move& move) {
  session.last_used = now_();
  if (move.kind == Move::Kind::kFlip) {
    if (!session.current.contains(move.diagonal)) {
      throw conflict("diagonal is not in the current triangulation");
    }
    session.current = mutanta::flip(session.current, move.diagonal);
  } else {
    session.current = mutanta::rotate(session.current, move.steps);
  }
  session.history.push_back(move);
  return state_view(session.current);
}

Json ExplorerService::flip(const std::string& id, const Json& body) {
  if (!body.is_object() || !body.contains("diagonal") || !body["diagonal"].is_array() ||
      body["diagonal"].size() != 2 || !body["diagonal"][0].is_number_integer() ||
      !body["diagonal"][1].is_number_integer()) {
    throw bad_request("body needs \"diagonal\": [a, b]");
  }
  const int a = body["diagonal"][0].get<int>();
  const int b = body["diagonal"][1].get<int>();
  return apply(id, {Move::Kind::kFlip, {std::min(a, b), std::max(a, b)}, 0});
}

Json ExplorerService::mutate(const std::string& id, const Json& body) {
  const int k = int_field(body, "vertex");
  auto session = find(id);
  std::lock_guard lock(session->mutex);
  if (k < 0 || k >= session->current.rank()) {
    throw conflict("vertex " + std::to_string(k) + " out of range");
  }
  return apply_locked(*session, {Move::Kind::kFlip, session->current.diagonals()[k], 0});
}

Json ExplorerService::rotate(const std::string& id, const Json& body) {
  const int steps = int_field(body, "steps");
  return apply(id, {Move::Kind::kRotate, {}, steps});
}

Json ExplorerService::undo(const std::string& id) {
  auto session = find(id);
  std::lock_guard lock(session->mutex);
  session->last_used = now_();
  if (session->history.empty()) throw conflict("nothing to undo");
  session->history.pop_back();
  session->current = replay(session->initial, session->history);
  return state_view(session->current);
}

Json ExplorerService::catalog(int n) {
  const int limit = options_.limits.max_rank;
  if (n < 2 || n > limit) {
    throw bad_request("catalog rank must be in [2, " + std::to_string(limit) + "]");
  }
  std::shared_future<Json> pending;
  std::promise<Json> promise;
  bool owner = false;
  {
    std::lock_guard lock(catalog_mutex_);
    auto it = catalogs_.find(n);
    if (it == catalogs_.end()) {
      pending = promise.get_future().share();
      catalogs_.emplace(n, pending);
      owner = true;
    } else {
      pending = it->second;
    }
  }
  if (owner) {
    try {
      const MutationClassCatalog mc =
          enumerate_mutation_class(n, options_.limits, options_.jobs);
      Json quivers = Json::array();
      for (const CanonicalQuiver& c : mc.members) quivers.push_back(to_json(c.to_quiver()));
      Json j;
      j["n"] = n;
      j["count"] = mc.members.size();
      j["quivers"] = std::move(quivers);
      promise.set_value(std::move(j));
    } catch (...) {
      promise.set_exception(std::current_exception());
      std::lock_guard lock(catalog_mutex_);
      catalogs_.erase(n);
    }
  }
  return pending.get();
}

std::size_t ExplorerService::evict_idle() {
  const auto cutoff = now_() - options_.idle_timeout;
  std::lock_guard lock(sessions_mutex_);
  return std::erase_if(sessions_, [&](const auto& entry) {
    std::lock_guard session_lock(entry.second->mutex);
    return entry.second->last_used < cutoff;
  });
}

std::size_t ExplorerService::session_count() const {
  std::lock_guard lock(sessions_mutex_);
  return sessions_.size();
}

ServiceResponse ExplorerService::handle(const std::string& method,
                                        const std::string& path,
                                        const std::string& body) {
  static const std::regex session_op(R"(^/session/([0-9a-f]+)/(flip|mutate|rotate|undo)$)");
  static const std::regex session_get(R"(^/session/([0-9a-f]+)$)");
  static const std::regex catalog_get(R"(^/catalog/(-?\d{1,9})$)");

  evict_idle();
  try {
    auto parsed = [&]() -> Json {
      if (body.empty()) return Json::object();
      try {
        return Json::parse(body);
      } catch (const nlohmann::json::parse_error&) {
        throw bad_request("request body is not valid JSON");
      }
    };
    std::smatch match;
    if (method == "POST" && path == "/session") {
      return {200, create_session(parsed())};
    }
    if (method == "POST" && std::regex_match(path, match, session_op)) {
      const std::string id = match[1];
      const std::string op = match[2];
      if (op == "flip") return {200, flip(id, parsed())};
      if (op == "mutate") return {200, mutate(id, parsed())};
      if (op == "rotate") return {200, rotate(id, parsed())};
      return {200, undo(id)};
    }
    if (method == "GET" && std::regex_match(path, match, session_get)) {
      return {200, get_state(match[1])};
    }
    if (method == "GET" && std::regex_match(path, match, catalog_get)) {
      return {200, catalog(std::stoi(match[1]))};
    }
    throw not_found("no route for " + method + " " + path);
  } catch (const ServiceError& e) {
    return {e.status(), error_body(e.code(), e.what())};
  } catch (const LimitError& e) {
    return {400, error_body("bad_request", e.what())};
  }
}

void ExplorerService::mount(httplib::Server& server) {
  auto cors = [](const httplib::Request& req, httplib::Response& res) {
    const std::string origin = req.get_header_value("Origin");
    if (!origin.empty() && is_local_origin(origin)) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Vary", "Origin");
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    }
  };
  auto dispatch = [this, cors](const httplib::Request& req, httplib::Response& res) {
    const ServiceResponse out = handle(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json");
    cors(req, res);
  };
  server.Get(".*", dispatch);
  server.Post(".*", dispatch);
  server.Options(".*", [cors](const httplib::Request& req, httplib::Response& res) {
    res.status = 204;
    cors(req, res);
  });
}

}  // namespace mutanta
