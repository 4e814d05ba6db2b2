#ifndef MUTANTA_VERIFY_H_
#define MUTANTA_VERIFY_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mutanta/limits.h"

namespace mutanta {

// Outcome of an exhaustive check. Violations are report content; only
// precondition failures (bad n, limits) throw.
struct Report {
  std::string suite;
  int n = 0;
  std::vector<std::pair<std::string, std::int64_t>> counts;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add_count(std::string name, std::int64_t value) {
    counts.emplace_back(std::move(name), value);
  }
  std::int64_t count(const std::string& name) const;
};

// Rotation classes of triangulations of the (n+3)-gon against the mutation
// class of A_n: injective, surjective, counts equal to a(n).
Report verify_bijection(int n, const Limits& limits = {}, int jobs = 0);

// Quivers of two triangulations are isomorphic iff the triangulations are
// rotations of each other; per-algebra tilting-object counts are the orbit
// sizes.
Report tau_orbit_report(int n, const Limits& limits = {}, int jobs = 0);

// Orbit sizes divide n+3 and lie in [2, n+3]; all equal n+3 with
// a(n)(n+3) = C(n+1) when n+3 is prime.
Report verify_orbits(int n, const Limits& limits = {}, int jobs = 0);

// flip/mutate commutation (labeled and up to isomorphism) and flip
// involution for every diagonal of every triangulation of the (n+3)-gon.
Report verify_commutation(int n, const Limits& limits = {}, int jobs = 0);

// Border-vertex classification, connectivity after deletion, and factoring
// for every diagonal of every triangulation of the (n+3)-gon.
Report verify_lemmas(int n, const Limits& limits = {}, int jobs = 0);

// Every mutation-class member is a valid type-A quiver, mutation is an
// involution on it, and the catalog is closed under mutation.
Report verify_structure(int n, const Limits& limits = {}, int jobs = 0);

// Dispatch by suite name: bijection, tau, orbits, commutation, lemmas,
// structure. Throws std::invalid_argument for an unknown name.
Report run_suite(const std::string& suite, int n, const Limits& limits = {},
                 int jobs = 0);

std::string to_text(const Report& report);
std::string to_json_string(const Report& report);

bool is_prime(int x);

}  // namespace mutanta

#endif  // MUTANTA_VERIFY_H_
