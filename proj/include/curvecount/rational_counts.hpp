#ifndef CURVECOUNT_RATIONAL_COUNTS_HPP
#define CURVECOUNT_RATIONAL_COUNTS_HPP

#include <functional>
#include <vector>

#include "curvecount/count_cache.hpp"
#include "curvecount/rational.hpp"

namespace curvecount {

// Ordered degree splitting d = d1 + d2 with its combinatorial weight
// C(3d-2, 3d1-1) * d1 * d2. The weight is symmetric under d1 <-> d2
// because (3d1-1) + (3d2-1) = 3d-2.
struct DegreeSplit {
  int d1;
  int d2;
  Integer weight;
};

// All ordered splittings (1, d-1), (2, d-2), ..., (d-1, 1); empty for d = 1.
std::vector<DegreeSplit> splits(int degree);

// Evaluation order of a split sum. Exact arithmetic makes all three agree;
// the verification suite checks that they actually do.
enum class SplitOrder { forward, reverse, swapped };

// Per-split coefficient producing the coefficient rational for a split; the
// full term is coeff(d, d1, d2) * C(3d-2, 3d1-1) * d1 d2 * N_{d1} N_{d2}.
using SplitCoefficient = std::function<Rational(int d, int d1, int d2)>;

// Sum of the weighted split terms over all splittings of `degree`, with the
// genus-zero counts below `degree` filled in from (or computed into) `cache`.
Rational weighted_split_sum(int degree, CountCache& cache,
                            const SplitCoefficient& coefficient,
                            SplitOrder order = SplitOrder::forward);

// Coefficient of the genus-zero quadratic recursion:
//   d1 d2 - 2 (d1 - d2)^2 / (3d - 2)
Rational kontsevich_coefficient(int degree, int d1, int d2);

// The pre-division sum of the recursion; N_degree equals this divided by
// 6(degree - 1), and the division is exact.
Rational kontsevich_split_sum(int degree, CountCache& cache,
                              SplitOrder order = SplitOrder::forward);

// Number of irreducible rational degree-d plane curves through 3d-1 general
// points, via the quadratic recursion with base values N_1 = N_2 = 1.
// Fills the genus0 cache bottom-up as a side effect.
Integer n_rational(int degree, CountCache& cache);

}  // namespace curvecount

#endif  // CURVECOUNT_RATIONAL_COUNTS_HPP
