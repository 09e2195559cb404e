#ifndef CURVECOUNT_BINOMIAL_HPP
#define CURVECOUNT_BINOMIAL_HPP

#include "curvecount/rational.hpp"

namespace curvecount {

// Exact binomial coefficient C(n, k). Returns 0 when k < 0 or k > n,
// so split sums stay total. Negative n is an argument error.
Integer binomial(long n, long k);

}  // namespace curvecount

#endif  // CURVECOUNT_BINOMIAL_HPP
