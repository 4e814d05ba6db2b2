#ifndef MUTANTA_ENUMERATION_H_
#define MUTANTA_ENUMERATION_H_

#include <cstddef>
#include <map>
#include <vector>

#include "mutanta/limits.h"
#include "mutanta/polygon.h"
#include "mutanta/quiver.h"

namespace mutanta {

// `jobs` is the OpenMP thread count for the parallel kernels; 0 keeps the
// runtime default. Results never depend on it.

struct TriangulationCatalog {
  int polygon_size = 0;
  std::vector<Triangulation> members;
  // Sorted by representative.
  std::vector<RotationClass> rotation_classes;
  // class_of[i] indexes rotation_classes for members[i].
  std::vector<int> class_of;
};

// Every triangulation of the m-gon exactly once, by ear decomposition on the
// border edge (0, 1). Order is deterministic.
TriangulationCatalog enumerate_triangulations(int m, const Limits& limits = {},
                                              int jobs = 0);

struct BfsStats {
  int depth = 0;                    // eccentricity of the seed
  std::size_t mutations = 0;        // canonical forms computed
  std::vector<std::size_t> level_sizes;
};

struct MutationClassCatalog {
  int rank = 0;
  // Pairwise non-isomorphic, sorted by encoding.
  std::vector<CanonicalQuiver> members;
  BfsStats stats;

  bool contains(const CanonicalQuiver& c) const;
};

// Level-synchronous BFS over canonical forms from the linear A_n quiver. Each
// level's mutations run in parallel; the visited set is merged serially in
// frontier order.
MutationClassCatalog enumerate_mutation_class(int n, const Limits& limits = {},
                                              int jobs = 0);

// Orbit size -> number of rotation classes with that size.
std::map<int, std::size_t> orbit_statistics(const TriangulationCatalog& catalog);
std::map<int, std::size_t> orbit_statistics(int m, const Limits& limits = {},
                                            int jobs = 0);

// Canonical quiver of every member of the catalog, computed in parallel.
std::vector<CanonicalQuiver> canonical_quivers(const TriangulationCatalog& catalog,
                                               int jobs = 0);

}  // namespace mutanta

#endif  // MUTANTA_ENUMERATION_H_
