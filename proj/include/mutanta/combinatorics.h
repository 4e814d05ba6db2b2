#ifndef MUTANTA_COMBINATORICS_H_
#define MUTANTA_COMBINATORICS_H_

#include <boost/multiprecision/cpp_int.hpp>

namespace mutanta {

using BigInt = boost::multiprecision::cpp_int;

// (2i)! / ((i+1)! i!), the number of triangulations of the (i+2)-gon.
BigInt catalan(int i);

// Number of rotation classes of triangulations of the (n+3)-gon:
//   C(n+1)/(n+3) + C((n+1)/2)/2 + (2/3) C(n/3)
// with the second term present only for odd n and the third only for n
// divisible by 3. The terms are summed over the common denominator 6(n+3);
// a non-zero remainder throws std::logic_error.
BigInt a_closed_form(int n);

}  // namespace mutanta

#endif  // MUTANTA_COMBINATORICS_H_
