#include "curvecount/binomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvecount {

Integer binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // Multiplicative form with interleaved exact division: after step i the
  // accumulator equals C(n - k + i, i), which is always an integer.
  Integer result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(),
                    static_cast<unsigned long>(i));
  }
  return result;
}

}  // namespace curvecount
