#include "curvecount/rational_counts.hpp"

#include <stdexcept>
#include <string>

#include "curvecount/binomial.hpp"

namespace curvecount {

namespace {

void require_positive_degree(int degree, const char* where) {
  if (degree < 1)
    throw std::invalid_argument(std::string(where) +
                                ": degree must be >= 1, got " +
                                std::to_string(degree));
}

const Integer& cached_genus0(const CountCache& cache, int degree) {
  const Integer* value = cache.find(CountFamily::genus0, degree);
  if (value == nullptr)
    throw std::logic_error("genus0 cache miss at degree " +
                           std::to_string(degree));
  return *value;
}

// One term of a split sum. For SplitOrder::swapped the roles of d1 and d2
// are exchanged everywhere, including a fresh binomial evaluation, so the
// weight symmetry is genuinely exercised rather than reused.
Rational split_term(int degree, const DegreeSplit& split, bool swap_roles,
                    const SplitCoefficient& coefficient,
                    const CountCache& cache) {
  const int a = swap_roles ? split.d2 : split.d1;
  const int b = swap_roles ? split.d1 : split.d2;
  Integer weight = swap_roles
                       ? Integer(binomial(3L * degree - 2, 3L * a - 1) * a * b)
                       : split.weight;
  Integer product = weight * cached_genus0(cache, a) * cached_genus0(cache, b);
  return coefficient(degree, a, b) * Rational(std::move(product));
}

// Split sum assuming genus0 is already filled up to degree - 1.
Rational split_sum_filled(int degree, const CountCache& cache,
                          const SplitCoefficient& coefficient,
                          SplitOrder order) {
  const std::vector<DegreeSplit> parts = splits(degree);
  Rational sum;
  if (order == SplitOrder::reverse) {
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
      sum += split_term(degree, *it, false, coefficient, cache);
  } else {
    const bool swap_roles = order == SplitOrder::swapped;
    for (const DegreeSplit& split : parts)
      sum += split_term(degree, split, swap_roles, coefficient, cache);
  }
  return sum;
}

}  // namespace

std::vector<DegreeSplit> splits(int degree) {
  require_positive_degree(degree, "splits");
  std::vector<DegreeSplit> result;
  result.reserve(static_cast<std::size_t>(degree > 1 ? degree - 1 : 0));
  for (int d1 = 1; d1 < degree; ++d1) {
    const int d2 = degree - d1;
    Integer weight = binomial(3L * degree - 2, 3L * d1 - 1) * d1 * d2;
    result.push_back({d1, d2, std::move(weight)});
  }
  return result;
}

Rational weighted_split_sum(int degree, CountCache& cache,
                            const SplitCoefficient& coefficient,
                            SplitOrder order) {
  require_positive_degree(degree, "weighted_split_sum");
  if (degree > 1) n_rational(degree - 1, cache);
  return split_sum_filled(degree, cache, coefficient, order);
}

Rational kontsevich_coefficient(int degree, int d1, int d2) {
  Integer diff = Integer(d1) - d2;
  return Rational(Integer(d1) * d2) -
         Rational(2 * diff * diff, Integer(3) * degree - 2);
}

Rational kontsevich_split_sum(int degree, CountCache& cache,
                              SplitOrder order) {
  return weighted_split_sum(degree, cache, kontsevich_coefficient, order);
}

Integer n_rational(int degree, CountCache& cache) {
  require_positive_degree(degree, "n_rational");
  if (const Integer* hit = cache.find(CountFamily::genus0, degree))
    return *hit;
  // Bottom-up fill keeps the cache contiguous and avoids deep recursion.
  // N_1 = N_2 = 1 are base values; the 1/(6(d-1)) prefactor is undefined
  // at d = 1.
  for (int d = 1; d <= degree; ++d) {
    if (cache.contains(CountFamily::genus0, d)) continue;
    Integer value;
    if (d <= 2) {
      value = 1;
    } else {
      Rational sum =
          split_sum_filled(d, cache, kontsevich_coefficient, SplitOrder::forward);
      value = rational_to_integer(sum / Rational(Integer(6) * (d - 1)));
    }
    cache.store(CountFamily::genus0, d, std::move(value));
  }
  return *cache.find(CountFamily::genus0, degree);
}

}  // namespace curvecount
