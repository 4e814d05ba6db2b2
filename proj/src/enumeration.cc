#include "mutanta/enumeration.h"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ear_decomposition.h"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mutanta {

namespace internal {

std::vector<DiagonalList> triangulate_chain(std::span<const int> chain) {
  const int k = static_cast<int>(chain.size()) - 1;
  if (k < 2) return {DiagonalList{}};
  std::vector<DiagonalList> out;
  for (int i = 1; i < k; ++i) {
    const auto left = triangulate_chain(chain.subspan(0, i + 1));
    const auto right = triangulate_chain(chain.subspan(i));
    for (const DiagonalList& l : left) {
      for (const DiagonalList& r : right) {
        DiagonalList ds;
        ds.reserve(l.size() + r.size() + 2);
        if (i >= 2) ds.push_back({chain[0], chain[i]});
        if (k - i >= 2) ds.push_back({chain[i], chain[k]});
        ds.insert(ds.end(), l.begin(), l.end());
        ds.insert(ds.end(), r.begin(), r.end());
        out.push_back(std::move(ds));
      }
    }
  }
  return out;
}

std::vector<int> base_chain(int m) {
  std::vector<int> chain;
  for (int v = 1; v < m; ++v) chain.push_back(v);
  chain.push_back(0);
  return chain;
}

std::vector<DiagonalList> triangulations_with_apex(int m, int apex) {
  const std::vector<int> chain = base_chain(m);
  const std::span<const int> whole(chain);
  const int i = apex - 1;  // position of the apex in the chain
  const int k = m - 1;
  const auto left = triangulate_chain(whole.subspan(0, i + 1));
  const auto right = triangulate_chain(whole.subspan(i));
  std::vector<DiagonalList> out;
  out.reserve(left.size() * right.size());
  for (const DiagonalList& l : left) {
    for (const DiagonalList& r : right) {
      DiagonalList ds;
      if (i >= 2) ds.push_back({chain[0], chain[i]});
      if (k - i >= 2) ds.push_back({chain[i], chain[k]});
      ds.insert(ds.end(), l.begin(), l.end());
      ds.insert(ds.end(), r.begin(), r.end());
      out.push_back(std::move(ds));
    }
  }
  return out;
}

}  // namespace internal

namespace {

int thread_count(int jobs) {
#ifdef _OPENMP
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

void check_polygon(int m, const Limits& limits) {
  if (m < 4) {
    throw std::invalid_argument("polygon size must be >= 4, got " +
                                std::to_string(m));
  }
  check_limit("polygon size", m, std::min(limits.max_polygon_size, kMaxPolygonSize));
}

}  // namespace

TriangulationCatalog enumerate_triangulations(int m, const Limits& limits,
                                              int jobs) {
  check_polygon(m, limits);
  const int threads = thread_count(jobs);

  // One independent sub-problem per apex of the triangle on edge (0, 1).
  std::vector<std::vector<internal::DiagonalList>> by_apex(m - 2);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int apex = 2; apex < m; ++apex) {
    by_apex[apex - 2] = internal::triangulations_with_apex(m, apex);
  }

  TriangulationCatalog catalog;
  catalog.polygon_size = m;
  for (auto& group : by_apex) {
    for (auto& ds : group) catalog.members.emplace_back(m, std::move(ds));
  }

  const auto count = static_cast<std::ptrdiff_t>(catalog.members.size());
  std::vector<std::optional<RotationClass>> orbit(count);
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    orbit[i] = rotation_canonical(catalog.members[i]);
  }

  std::map<Triangulation, int> index;
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    if (index.emplace(orbit[i]->representative, 0).second) {
      catalog.rotation_classes.push_back(*orbit[i]);
    }
  }
  std::sort(catalog.rotation_classes.begin(), catalog.rotation_classes.end(),
            [](const RotationClass& a, const RotationClass& b) {
              return a.representative < b.representative;
            });
  for (std::size_t c = 0; c < catalog.rotation_classes.size(); ++c) {
    index[catalog.rotation_classes[c].representative] = static_cast<int>(c);
  }
  catalog.class_of.resize(count);
  for (std::ptrdiff_t i = 0; i < count; ++i) catalog.class_of[i] = index[orbit[i]->representative];
  return catalog;
}

bool MutationClassCatalog::contains(const CanonicalQuiver& c) const {
  return std::binary_search(members.begin(), members.end(), c);
}

MutationClassCatalog enumerate_mutation_class(int n, const Limits& limits,
                                              int jobs) {
  if (n < 2) {
    throw std::invalid_argument("mutation class rank must be >= 2, got " +
                                std::to_string(n));
  }
  check_limit("rank", n, std::min(limits.max_rank, kMaxQuiverVertices));
  const int threads = thread_count(jobs);

  MutationClassCatalog catalog;
  catalog.rank = n;
  std::unordered_set<CanonicalQuiver, CanonicalQuiverHash> visited;
  std::vector<CanonicalQuiver> frontier{canonical_form(linear_quiver(n))};
  visited.insert(frontier.front());

  while (!frontier.empty()) {
    catalog.stats.level_sizes.push_back(frontier.size());
    const auto width = static_cast<std::ptrdiff_t>(frontier.size());
    std::vector<std::vector<CanonicalQuiver>> produced(width);
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < width; ++i) {
      const Quiver q = frontier[i].to_quiver();
      produced[i].reserve(n);
      for (int k = 0; k < n; ++k) produced[i].push_back(canonical_form(mutate(q, k)));
    }
    std::vector<CanonicalQuiver> next;
    for (auto& batch : produced) {
      catalog.stats.mutations += batch.size();
      for (auto& c : batch) {
        if (visited.insert(c).second) next.push_back(std::move(c));
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  catalog.stats.depth = static_cast<int>(catalog.stats.level_sizes.size()) - 1;

  catalog.members.assign(visited.begin(), visited.end());
  std::sort(catalog.members.begin(), catalog.members.end());
  return catalog;
}

std::map<int, std::size_t> orbit_statistics(const TriangulationCatalog& catalog) {
  std::map<int, std::size_t> histogram;
  for (const RotationClass& rc : catalog.rotation_classes) ++histogram[rc.orbit_size];
  return histogram;
}

std::map<int, std::size_t> orbit_statistics(int m, const Limits& limits, int jobs) {
  return orbit_statistics(enumerate_triangulations(m, limits, jobs));
}

std::vector<CanonicalQuiver> canonical_quivers(const TriangulationCatalog& catalog,
                                               int jobs) {
  const auto count = static_cast<std::ptrdiff_t>(catalog.members.size());
  std::vector<CanonicalQuiver> out(count, CanonicalQuiver(0, {}));
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(jobs))
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    out[i] = canonical_form(quiver_of(catalog.members[i]));
  }
  return out;
}

}  // namespace mutanta
