#include "mutanta/catalog_io.h"

#include "mutanta/json_io.h"

namespace mutanta {

std::string catalog_to_jsonl(const MutationClassCatalog& catalog) {
  std::string out;
  for (const CanonicalQuiver& c : catalog.members) {
    out += to_json(c.to_quiver()).dump();
    out += '\n';
  }
  return out;
}

std::string catalog_to_dot(const MutationClassCatalog& catalog) {
  std::string out;
  for (std::size_t i = 0; i < catalog.members.size(); ++i) {
    const std::string name =
        "A" + std::to_string(catalog.rank) + "_" + std::to_string(i);
    out += to_dot(catalog.members[i].to_quiver(), name);
  }
  return out;
}

}  // namespace mutanta
