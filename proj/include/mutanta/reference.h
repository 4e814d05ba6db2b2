#ifndef MUTANTA_REFERENCE_H_
#define MUTANTA_REFERENCE_H_

// Single-threaded reference versions of the parallel kernels. They share no
// scheduling code with the OpenMP paths and exist so tests and benchmarks
// can compare the two.

#include <cstddef>

#include "mutanta/enumeration.h"

namespace mutanta::reference {

TriangulationCatalog enumerate_triangulations(int m, const Limits& limits = {});

// Plain queue-driven BFS over canonical forms with an ordered visited set.
MutationClassCatalog enumerate_mutation_class(int n, const Limits& limits = {});

// Number of (triangulation, diagonal) pairs of the m-gon for which flipping
// and mutating disagree.
std::size_t commutation_violations(int m);

}  // namespace mutanta::reference

#endif  // MUTANTA_REFERENCE_H_
