#ifndef MUTANTA_SRC_EAR_DECOMPOSITION_H_
#define MUTANTA_SRC_EAR_DECOMPOSITION_H_

#include <span>
#include <vector>

#include "mutanta/polygon.h"

namespace mutanta::internal {

using DiagonalList = std::vector<Diagonal>;

// All triangulations of the sub-polygon chain[0], ..., chain.back() closed by
// the edge (chain.back(), chain[0]), as unnormalized diagonal lists.
std::vector<DiagonalList> triangulate_chain(std::span<const int> chain);

// Triangulations of the m-gon whose triangle on edge (0, 1) has the given
// apex (2 <= apex <= m - 1).
std::vector<DiagonalList> triangulations_with_apex(int m, int apex);

// The border chain 1, 2, ..., m-1, 0 of the m-gon.
std::vector<int> base_chain(int m);

}  // namespace mutanta::internal

#endif  // MUTANTA_SRC_EAR_DECOMPOSITION_H_
