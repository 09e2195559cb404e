// Test-only oracles, kept independent of the library's evaluation path:
// binomials come from a Pascal triangle built row by row, and every count
// formula is evaluated with integer arithmetic only, scaled by its
// denominators up front so no rational type is involved.
#ifndef CURVECOUNT_TESTS_ORACLES_HPP
#define CURVECOUNT_TESTS_ORACLES_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "curvecount/rational.hpp"

namespace oracles {

using curvecount::Integer;

inline Integer pascal_binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("pascal_binomial: negative n");
  if (k < 0 || k > n) return 0;
  std::vector<Integer> row = {1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> next(static_cast<std::size_t>(i) + 1, Integer(1));
    for (int j = 1; j < i; ++j)
      next[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

inline Integer exact_quotient(const Integer& numerator,
                              const Integer& denominator) {
  if (denominator == 0 || numerator % denominator != 0)
    throw std::runtime_error("oracle: expected exact division of " +
                             numerator.get_str() + " by " +
                             denominator.get_str());
  return Integer(numerator / denominator);
}

// Genus-zero recursion with all denominators cleared:
//   6(d-1)(3d-2) N_d = sum ((3d-2) d1 d2 - 2 (d1-d2)^2) C(3d-2,3d1-1) d1 d2 N_{d1} N_{d2}
inline Integer genus0(int d, const std::vector<Integer>& n) {
  if (d <= 2) return 1;
  Integer scaled = 0;
  for (int d1 = 1; d1 < d; ++d1) {
    int d2 = d - d1;
    Integer coeff = Integer(3 * d - 2) * d1 * d2 -
                    Integer(2) * (d1 - d2) * (d1 - d2);
    scaled += coeff * pascal_binomial(3 * d - 2, 3 * d1 - 1) * d1 * d2 *
              n[static_cast<std::size_t>(d1)] * n[static_cast<std::size_t>(d2)];
  }
  return exact_quotient(scaled, Integer(6) * (d - 1) * (3 * d - 2));
}

// Seed table N_1..N_max computed entirely through the oracle recursion.
inline std::vector<Integer> genus0_table(int max_degree) {
  std::vector<Integer> n(static_cast<std::size_t>(max_degree) + 1, Integer(0));
  for (int d = 1; d <= max_degree; ++d)
    n[static_cast<std::size_t>(d)] = genus0(d, n);
  return n;
}

//   2(3d-2) N_{2,d} = 6(d^2-1)(3d-2) N_d
//                   + sum ((3d-2)(d1^2 d2^2 + 28) - 16(9 d1 d2 - 1)) C d1 d2 N N
inline Integer genus2(int d, const std::vector<Integer>& n) {
  Integer scaled =
      Integer(6) * (Integer(d) * d - 1) * (3 * d - 2) * n[static_cast<std::size_t>(d)];
  for (int d1 = 1; d1 < d; ++d1) {
    int d2 = d - d1;
    Integer pair = Integer(d1) * d2;
    Integer coeff = Integer(3 * d - 2) * (pair * pair + 28) -
                    Integer(16) * (9 * pair - 1);
    scaled += coeff * pascal_binomial(3 * d - 2, 3 * d1 - 1) * pair *
              n[static_cast<std::size_t>(d1)] * n[static_cast<std::size_t>(d2)];
  }
  return exact_quotient(scaled, Integer(2) * (3 * d - 2));
}

//   2d W11 = 6(d-1)(d-2)(d-3) N_d
//          + sum (d (d1^2 d2^2 - 6 d1 d2 - 4) + 18 d1 d2) C d1 d2 N N
inline Integer w11(int d, const std::vector<Integer>& n) {
  Integer scaled = Integer(6) * (d - 1) * (d - 2) * (d - 3) *
                   n[static_cast<std::size_t>(d)];
  for (int d1 = 1; d1 < d; ++d1) {
    int d2 = d - d1;
    Integer pair = Integer(d1) * d2;
    Integer coeff = Integer(d) * (pair * pair - 6 * pair - 4) + 18 * pair;
    scaled += coeff * pascal_binomial(3 * d - 2, 3 * d1 - 1) * pair *
              n[static_cast<std::size_t>(d1)] * n[static_cast<std::size_t>(d2)];
  }
  return exact_quotient(scaled, Integer(2) * d);
}

//   d W13 = 6(3d^2 - 12d + 9) N_d
//         + 3 sum (d (d1 d2 + 4) - 9 d1 d2) C d1 d2 N N
inline Integer w13(int d, const std::vector<Integer>& n) {
  Integer scaled = Integer(6) * (Integer(3) * d * d - 12 * d + 9) *
                   n[static_cast<std::size_t>(d)];
  for (int d1 = 1; d1 < d; ++d1) {
    int d2 = d - d1;
    Integer pair = Integer(d1) * d2;
    Integer coeff = Integer(3) * (Integer(d) * (pair + 4) - 9 * pair);
    scaled += coeff * pascal_binomial(3 * d - 2, 3 * d1 - 1) * pair *
              n[static_cast<std::size_t>(d1)] * n[static_cast<std::size_t>(d2)];
  }
  return exact_quotient(scaled, Integer(d));
}

// Small deterministic generator for property tests.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return state_ >> 16;
  }

  long next_in(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace oracles

#endif  // CURVECOUNT_TESTS_ORACLES_HPP
