#ifndef MUTANTA_LIMITS_H_
#define MUTANTA_LIMITS_H_

#include <stdexcept>
#include <string>

namespace mutanta {

// Desk-scale ceilings for the exhaustive routines.
struct Limits {
  int max_polygon_size = 14;  // enumerate_triangulations
  int max_rank = 13;          // enumerate_mutation_class, catalogs
  int max_pairwise_rank = 9;  // bijection / tau-orbit reports

  // Defaults, overridden by MUTANTA_MAX_N if set: every rank limit becomes
  // N and the polygon limit N + 3.
  static Limits from_environment();
  Limits with_max_rank(int n) const;
};

class LimitError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

void check_limit(const char* what, int value, int limit);

}  // namespace mutanta

#endif  // MUTANTA_LIMITS_H_
