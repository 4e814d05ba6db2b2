#include "mutanta/json_io.h"

#include <stdexcept>

namespace mutanta {

namespace {

std::vector<std::pair<int, int>> read_pairs(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw std::invalid_argument(std::string("expected an array field \"") + key + "\"");
  }
  std::vector<std::pair<int, int>> out;
  for (const Json& p : j.at(key)) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer()) {
      throw std::invalid_argument(std::string("\"") + key +
                                  "\" entries must be [int, int] pairs");
    }
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

int read_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("expected an integer field \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({a.from, a.to});
  Json j;
  j["n"] = q.size();
  j["arrows"] = std::move(arrows);
  return j;
}

Json to_json(const Triangulation& t) {
  Json diagonals = Json::array();
  for (const Diagonal& d : t.diagonals()) diagonals.push_back({d.a, d.b});
  Json j;
  j["polygon_size"] = t.polygon_size();
  j["diagonals"] = std::move(diagonals);
  return j;
}

Quiver quiver_from_json(const Json& j) {
  const int n = read_int(j, "n");
  std::vector<Arrow> arrows;
  for (auto [from, to] : read_pairs(j, "arrows")) arrows.push_back({from, to});
  return Quiver(n, std::move(arrows));
}

Quiver parse_quiver(const std::string& text) { return quiver_from_json(parse(text)); }

Triangulation triangulation_from_json(const Json& j) {
  const int m = read_int(j, "polygon_size");
  std::vector<Diagonal> ds;
  for (auto [a, b] : read_pairs(j, "diagonals")) {
    if (m < 4) throw std::invalid_argument("a triangle has no diagonals");
    ds.push_back(make_diagonal(a, b, m));
  }
  return Triangulation(m, std::move(ds));
}

Triangulation parse_triangulation(const std::string& text) {
  return triangulation_from_json(parse(text));
}

}  // namespace mutanta
