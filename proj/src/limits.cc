#include "mutanta/limits.h"

#include <cstdlib>

namespace mutanta {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* env = std::getenv("MUTANTA_MAX_N"); env != nullptr && *env) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 2 || n > 60) {
      throw std::invalid_argument(std::string("bad MUTANTA_MAX_N: ") + env);
    }
    limits = limits.with_max_rank(static_cast<int>(n));
  }
  return limits;
}

Limits Limits::with_max_rank(int n) const {
  Limits out = *this;
  out.max_rank = n;
  out.max_pairwise_rank = n;
  out.max_polygon_size = n + 3;
  return out;
}

void check_limit(const char* what, int value, int limit) {
  if (value > limit) {
    throw LimitError(std::string(what) + " " + std::to_string(value) +
                     " exceeds the configured limit " + std::to_string(limit));
  }
}

}  // namespace mutanta
