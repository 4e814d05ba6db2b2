#include "mutanta/reference.h"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "ear_decomposition.h"

namespace mutanta::reference {

TriangulationCatalog enumerate_triangulations(int m, const Limits& limits) {
  if (m < 4) throw std::invalid_argument("polygon size must be >= 4");
  check_limit("polygon size", m, limits.max_polygon_size);
  TriangulationCatalog catalog;
  catalog.polygon_size = m;
  for (auto& ds : internal::triangulate_chain(internal::base_chain(m))) {
    catalog.members.emplace_back(m, std::move(ds));
  }
  std::map<Triangulation, int> orbit_size;
  std::vector<Triangulation> reps;
  for (const Triangulation& t : catalog.members) {
    RotationClass rc = rotation_canonical(t);
    orbit_size.emplace(rc.representative, rc.orbit_size);
    reps.push_back(std::move(rc.representative));
  }
  std::map<Triangulation, int> index;
  for (const auto& [rep, size] : orbit_size) {
    index.emplace(rep, static_cast<int>(catalog.rotation_classes.size()));
    catalog.rotation_classes.push_back({rep, size});
  }
  for (const Triangulation& rep : reps) catalog.class_of.push_back(index.at(rep));
  return catalog;
}

MutationClassCatalog enumerate_mutation_class(int n, const Limits& limits) {
  if (n < 2) throw std::invalid_argument("mutation class rank must be >= 2");
  check_limit("rank", n, limits.max_rank);
  MutationClassCatalog catalog;
  catalog.rank = n;

  std::set<CanonicalQuiver> visited;
  std::queue<std::pair<CanonicalQuiver, int>> queue;
  const CanonicalQuiver seed = canonical_form(linear_quiver(n));
  visited.insert(seed);
  queue.push({seed, 0});
  while (!queue.empty()) {
    auto [current, level] = queue.front();
    queue.pop();
    if (static_cast<int>(catalog.stats.level_sizes.size()) <= level) {
      catalog.stats.level_sizes.push_back(0);
    }
    ++catalog.stats.level_sizes[level];
    const Quiver q = current.to_quiver();
    for (int k = 0; k < n; ++k) {
      CanonicalQuiver next = canonical_form(mutate(q, k));
      ++catalog.stats.mutations;
      if (visited.insert(next).second) queue.push({std::move(next), level + 1});
    }
  }
  catalog.stats.depth = static_cast<int>(catalog.stats.level_sizes.size()) - 1;
  catalog.members.assign(visited.begin(), visited.end());
  return catalog;
}

std::size_t commutation_violations(int m) {
  std::size_t violations = 0;
  for (auto& ds : internal::triangulate_chain(internal::base_chain(m))) {
    const Triangulation t(m, std::move(ds));
    const Quiver q = quiver_of(t);
    for (int v = 0; v < t.rank(); ++v) {
      const Triangulation flipped = flip(t, t.diagonals()[v]);
      if (canonical_form(quiver_of(flipped)) != canonical_form(mutate(q, v))) {
        ++violations;
      }
    }
  }
  return violations;
}

}  // namespace mutanta::reference
