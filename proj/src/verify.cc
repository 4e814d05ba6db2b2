#include "mutanta/verify.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mutanta/combinatorics.h"
#include "mutanta/enumeration.h"
#include "mutanta/json_io.h"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mutanta {

namespace {

int thread_count(int jobs) {
#ifdef _OPENMP
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

void check_rank(int n) {
  if (n < 2) {
    throw std::invalid_argument("rank must be >= 2, got " + std::to_string(n));
  }
}

std::string show(const Triangulation& t) { return to_json(t).dump(); }

std::string show(const Diagonal& d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

std::int64_t to_i64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("count does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

// Runs check(t) on every triangulation in parallel and concatenates the
// violation lists in catalog order.
template <typename Check>
std::vector<std::string> for_each_triangulation(const TriangulationCatalog& catalog,
                                                int jobs, Check check) {
  const auto count = static_cast<std::ptrdiff_t>(catalog.members.size());
  std::vector<std::vector<std::string>> found(count);
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(jobs))
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    found[i] = check(catalog.members[i]);
  }
  std::vector<std::string> out;
  for (auto& v : found) {
    for (auto& s : v) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::int64_t Report::count(const std::string& name) const {
  for (const auto& [key, value] : counts) {
    if (key == name) return value;
  }
  throw std::out_of_range("no count named " + name);
}

bool is_prime(int x) {
  if (x < 2) return false;
  for (int d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

Report verify_bijection(int n, const Limits& limits, int jobs) {
  check_rank(n);
  check_limit("rank", n, limits.max_pairwise_rank);
  Report report{"bijection", n, {}, {}};

  const TriangulationCatalog tri = enumerate_triangulations(n + 3, limits, jobs);
  const MutationClassCatalog mc = enumerate_mutation_class(n, limits, jobs);
  const std::vector<CanonicalQuiver> image = canonical_quivers(tri, jobs);

  // Image of each rotation class, via its representative.
  std::vector<std::optional<CanonicalQuiver>> class_image(tri.rotation_classes.size());
  for (std::size_t i = 0; i < tri.members.size(); ++i) {
    const int c = tri.class_of[i];
    if (tri.members[i] == tri.rotation_classes[c].representative) {
      class_image[c] = image[i];
    }
  }

  std::map<CanonicalQuiver, std::size_t> owner;
  for (std::size_t c = 0; c < class_image.size(); ++c) {
    auto [it, fresh] = owner.emplace(*class_image[c], c);
    if (!fresh) {
      report.violations.push_back(
          "not injective: classes " +
          show(tri.rotation_classes[it->second].representative) + " and " +
          show(tri.rotation_classes[c].representative) + " give isomorphic quivers");
    }
  }
  for (const CanonicalQuiver& q : mc.members) {
    if (!owner.contains(q)) {
      report.violations.push_back("not surjective: " + to_json(q.to_quiver()).dump() +
                                  " is the quiver of no triangulation");
    }
  }
  for (const auto& [q, c] : owner) {
    if (!mc.contains(q)) {
      report.violations.push_back(
          "class " + show(tri.rotation_classes[c].representative) +
          " maps outside the mutation class");
    }
  }

  const auto classes = static_cast<std::int64_t>(tri.rotation_classes.size());
  const auto members = static_cast<std::int64_t>(mc.members.size());
  const std::int64_t formula = to_i64(a_closed_form(n));
  report.add_count("triangulations", static_cast<std::int64_t>(tri.members.size()));
  report.add_count("rotation_classes", classes);
  report.add_count("mutation_class", members);
  report.add_count("a_closed_form", formula);
  if (classes != members || members != formula) {
    report.violations.push_back("count mismatch: classes " + std::to_string(classes) +
                                ", mutation class " + std::to_string(members) +
                                ", formula " + std::to_string(formula));
  }
  return report;
}

Report tau_orbit_report(int n, const Limits& limits, int jobs) {
  check_rank(n);
  check_limit("rank", n, limits.max_pairwise_rank);
  Report report{"tau", n, {}, {}};
  const int m = n + 3;

  const TriangulationCatalog tri = enumerate_triangulations(m, limits, jobs);
  const std::vector<CanonicalQuiver> image = canonical_quivers(tri, jobs);

  // Pairs inside a class must agree; pairs across classes must differ. Both
  // hold iff the two partitions of the triangulations coincide.
  std::map<CanonicalQuiver, int> class_of_quiver;
  std::vector<std::optional<CanonicalQuiver>> quiver_of_class(tri.rotation_classes.size());
  for (std::size_t i = 0; i < tri.members.size(); ++i) {
    const int c = tri.class_of[i];
    if (!quiver_of_class[c]) {
      quiver_of_class[c] = image[i];
    } else if (*quiver_of_class[c] != image[i]) {
      report.violations.push_back("rotations with non-isomorphic quivers: " +
                                  show(tri.members[i]) + " in class " +
                                  show(tri.rotation_classes[c].representative));
    }
    auto [it, fresh] = class_of_quiver.emplace(image[i], c);
    if (!fresh && it->second != c) {
      report.violations.push_back(
          "isomorphic quivers from different classes: " + show(tri.members[i]) +
          " and " + show(tri.rotation_classes[it->second].representative));
    }
  }

  std::map<int, std::int64_t> per_algebra;
  for (const RotationClass& rc : tri.rotation_classes) {
    ++per_algebra[rc.orbit_size];
    if (m % rc.orbit_size != 0 || rc.orbit_size < 2 || rc.orbit_size > m) {
      report.violations.push_back("tilting-object count " + std::to_string(rc.orbit_size) +
                                  " for " + show(rc.representative));
    }
  }
  report.add_count("triangulations", static_cast<std::int64_t>(tri.members.size()));
  report.add_count("algebras", static_cast<std::int64_t>(tri.rotation_classes.size()));
  for (const auto& [size, count] : per_algebra) {
    report.add_count("algebras_with_" + std::to_string(size) + "_tilting_objects", count);
  }
  return report;
}

Report verify_orbits(int n, const Limits& limits, int jobs) {
  check_rank(n);
  Report report{"orbits", n, {}, {}};
  const int m = n + 3;
  const TriangulationCatalog tri = enumerate_triangulations(m, limits, jobs);
  const auto histogram = orbit_statistics(tri);

  std::int64_t covered = 0;
  for (const auto& [size, count] : histogram) {
    covered += static_cast<std::int64_t>(size) * static_cast<std::int64_t>(count);
    if (m % size != 0) {
      report.violations.push_back("orbit size " + std::to_string(size) +
                                  " does not divide " + std::to_string(m));
    }
    if (size < 2 || size > m) {
      report.violations.push_back("orbit size " + std::to_string(size) +
                                  " outside [2, " + std::to_string(m) + "]");
    }
    report.add_count("orbits_of_size_" + std::to_string(size),
                     static_cast<std::int64_t>(count));
  }
  const std::int64_t triangulations = to_i64(catalan(m - 2));
  if (covered != triangulations ||
      covered != static_cast<std::int64_t>(tri.members.size())) {
    report.violations.push_back("orbits cover " + std::to_string(covered) +
                                " triangulations, expected " +
                                std::to_string(triangulations));
  }
  const auto classes = static_cast<std::int64_t>(tri.rotation_classes.size());
  const std::int64_t formula = to_i64(a_closed_form(n));
  if (classes != formula) {
    report.violations.push_back(std::to_string(classes) + " orbits, a(n) = " +
                                std::to_string(formula));
  }
  if (is_prime(m)) {
    if (histogram.size() != 1 || histogram.begin()->first != m) {
      report.violations.push_back("n+3 prime but some orbit is smaller than n+3");
    }
    if (a_closed_form(n) * m != catalan(n + 1)) {
      report.violations.push_back("a(n)(n+3) != C(n+1) for prime n+3");
    }
  }
  report.add_count("triangulations", static_cast<std::int64_t>(tri.members.size()));
  report.add_count("orbits", classes);
  report.add_count("a_closed_form", formula);
  return report;
}

Report verify_commutation(int n, const Limits& limits, int jobs) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  Report report{"commutation", n, {}, {}};
  const TriangulationCatalog tri = enumerate_triangulations(n + 3, limits, jobs);

  report.violations = for_each_triangulation(tri, jobs, [](const Triangulation& t) {
    std::vector<std::string> bad;
    const Quiver q = quiver_of(t);
    for (int v = 0; v < t.rank(); ++v) {
      const Diagonal& d = t.diagonals()[v];
      const Diagonal partner = flip_partner(t, d);
      const Triangulation flipped = flip(t, d);
      const Quiver mutated = mutate(q, v);
      const Quiver expected = quiver_of(flipped);
      if (canonical_form(expected) != canonical_form(mutated)) {
        bad.push_back("flip/mutate not isomorphic at " + show(d) + " in " + show(t));
      }
      // Labeled check: send each diagonal of t to its vertex in flipped.
      std::vector<int> perm(t.rank());
      for (int u = 0; u < t.rank(); ++u) {
        perm[u] = flipped.index_of(u == v ? partner : t.diagonals()[u]);
      }
      if (relabel(mutated, perm) != expected) {
        bad.push_back("flip/mutate differ as labeled quivers at " + show(d) +
                      " in " + show(t));
      }
      if (flip(flipped, partner) != t) {
        bad.push_back("flip is not an involution at " + show(d) + " in " + show(t));
      }
    }
    return bad;
  });
  report.add_count("triangulations", static_cast<std::int64_t>(tri.members.size()));
  report.add_count("flips", static_cast<std::int64_t>(tri.members.size()) * n);
  return report;
}

Report verify_lemmas(int n, const Limits& limits, int jobs) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  Report report{"lemmas", n, {}, {}};
  const int m = n + 3;
  const TriangulationCatalog tri = enumerate_triangulations(m, limits, jobs);

  report.violations = for_each_triangulation(tri, jobs, [m](const Triangulation& t) {
    std::vector<std::string> bad;
    const Quiver q = quiver_of(t);
    if (!validate_type_a(q)) bad.push_back("quiver of " + show(t) + " is not type A");
    for (int v = 0; v < t.rank(); ++v) {
      const Diagonal& d = t.diagonals()[v];
      const bool close = is_close_to_border(d, m);
      const std::string where = show(d) + " in " + show(t);

      if (q.size() >= 2 && is_connected(delete_vertex(q, v)) != close) {
        bad.push_back("connected after deletion differs from close to border at " + where);
      }
      if (!close) continue;

      const BorderVertexKind kind = classify_close_diagonal(t, d);
      std::optional<BorderVertexKind> seen;
      if (on_oriented_triangle(q, v)) {
        seen = BorderVertexKind::kOnCycle;
      } else if (q.out_degree(v) == 0) {
        seen = BorderVertexKind::kSink;
      } else if (q.in_degree(v) == 0) {
        seen = BorderVertexKind::kSource;
      }
      if (!seen) {
        bad.push_back("close diagonal is neither sink, source nor on a cycle at " + where);
      } else if (*seen != kind) {
        bad.push_back(std::string("classified ") + to_string(kind) + " but quiver shows " +
                      to_string(*seen) + " at " + where);
      }
      if (kind != BorderVertexKind::kOnCycle && q.size() >= 2 &&
          std::popcount(q.neighbor_mask(v)) != 1) {
        bad.push_back("close sink/source with more than one neighbour at " + where);
      }
      if (m >= 5) {
        const Quiver factored = quiver_of(factor_out(t, d));
        const Quiver deleted = delete_vertex(q, v);
        if (!are_isomorphic(factored, deleted)) {
          bad.push_back("factoring the diagonal differs from deleting its vertex at " + where);
        }
      }
    }
    return bad;
  });
  report.add_count("triangulations", static_cast<std::int64_t>(tri.members.size()));
  return report;
}

Report verify_structure(int n, const Limits& limits, int jobs) {
  Report report{"structure", n, {}, {}};
  const MutationClassCatalog mc = enumerate_mutation_class(n, limits, jobs);
  for (const CanonicalQuiver& c : mc.members) {
    const Quiver q = c.to_quiver();
    const std::string name = to_json(q).dump();
    if (!validate_type_a(q)) report.violations.push_back(name + " is not type A");
    for (int k = 0; k < n; ++k) {
      const Quiver once = mutate(q, k);
      if (mutate(once, k) != q) {
        report.violations.push_back("mutation at " + std::to_string(k) +
                                    " is not an involution on " + name);
      }
      if (!mc.contains(canonical_form(once))) {
        report.violations.push_back("mutating " + name + " at " + std::to_string(k) +
                                    " leaves the catalog");
      }
    }
  }
  report.add_count("mutation_class", static_cast<std::int64_t>(mc.members.size()));
  report.add_count("bfs_depth", mc.stats.depth);
  report.add_count("mutations", static_cast<std::int64_t>(mc.stats.mutations));
  return report;
}

Report run_suite(const std::string& suite, int n, const Limits& limits, int jobs) {
  if (suite == "bijection") return verify_bijection(n, limits, jobs);
  if (suite == "tau") return tau_orbit_report(n, limits, jobs);
  if (suite == "orbits") return verify_orbits(n, limits, jobs);
  if (suite == "commutation") return verify_commutation(n, limits, jobs);
  if (suite == "lemmas") return verify_lemmas(n, limits, jobs);
  if (suite == "structure") return verify_structure(n, limits, jobs);
  throw std::invalid_argument("unknown suite: " + suite);
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << "suite " << report.suite << ", n = " << report.n << "\n";
  for (const auto& [name, value] : report.counts) {
    out << "  " << name << ": " << value << "\n";
  }
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < std::min(kShown, report.violations.size()); ++i) {
    out << "  violation: " << report.violations[i] << "\n";
  }
  if (report.violations.size() > kShown) {
    out << "  ... " << report.violations.size() - kShown << " more\n";
  }
  out << (report.ok() ? "OK" : "FAILED") << " (" << report.violations.size()
      << " violations)\n";
  return out.str();
}

std::string to_json_string(const Report& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.counts) j["counts"][name] = value;
  j["violations"] = report.violations;
  j["suite"] = report.suite;
  return j.dump();
}

}  // namespace mutanta
