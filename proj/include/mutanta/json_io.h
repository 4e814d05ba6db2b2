#ifndef MUTANTA_JSON_IO_H_
#define MUTANTA_JSON_IO_H_

#include <string>

#include <json.hpp>

#include "mutanta/polygon.h"
#include "mutanta/quiver.h"

namespace mutanta {

using Json = nlohmann::ordered_json;

// {"n": 3, "arrows": [[0,1],[1,2]]}, arrows sorted.
Json to_json(const Quiver& q);
// {"polygon_size": 6, "diagonals": [[0,2],[0,3],[0,4]]}, diagonals sorted.
Json to_json(const Triangulation& t);

// Throw std::invalid_argument on malformed documents or invariant violations.
Quiver quiver_from_json(const Json& j);
Quiver parse_quiver(const std::string& text);
Triangulation triangulation_from_json(const Json& j);
Triangulation parse_triangulation(const std::string& text);

}  // namespace mutanta

#endif  // MUTANTA_JSON_IO_H_
