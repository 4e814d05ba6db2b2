#include "mutanta/combinatorics.h"

#include <stdexcept>
#include <string>

namespace mutanta {

BigInt catalan(int i) {
  if (i < 0) throw std::invalid_argument("catalan index must be >= 0");
  // C(k+1) = C(k) * 2(2k+1) / (k+2); each step divides exactly.
  BigInt c = 1;
  for (int k = 0; k < i; ++k) {
    c *= 2 * (2 * k + 1);
    c /= (k + 2);
  }
  return c;
}

BigInt a_closed_form(int n) {
  if (n < 2) throw std::invalid_argument("a(n) is defined for n >= 2");
  const BigInt m = n + 3;
  BigInt numerator = 6 * catalan(n + 1);
  if ((n + 1) % 2 == 0) numerator += 3 * m * catalan((n + 1) / 2);
  if (n % 3 == 0) numerator += 4 * m * catalan(n / 3);
  const BigInt denominator = 6 * m;
  if (numerator % denominator != 0) {
    throw std::logic_error("a(" + std::to_string(n) +
                           "): closed form does not divide exactly");
  }
  return numerator / denominator;
}

}  // namespace mutanta
