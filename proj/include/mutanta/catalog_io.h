#ifndef MUTANTA_CATALOG_IO_H_
#define MUTANTA_CATALOG_IO_H_

#include <string>

#include "mutanta/enumeration.h"

namespace mutanta {

// One quiver JSON object per line, in encoding order.
std::string catalog_to_jsonl(const MutationClassCatalog& catalog);

// Concatenated digraphs named A<n>_<index>, in encoding order.
std::string catalog_to_dot(const MutationClassCatalog& catalog);

}  // namespace mutanta

#endif  // MUTANTA_CATALOG_IO_H_
