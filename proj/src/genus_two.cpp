#include "curvecount/genus_two.hpp"

#include <string>
#include <utility>

namespace curvecount {

namespace {

void require_positive_degree(int degree, const char* where) {
  if (degree < 1)
    throw std::invalid_argument(std::string(where) +
                                ": degree must be >= 1, got " +
                                std::to_string(degree));
}

Integer exact_sixth(Integer value) {
  if (value % 6 != 0) throw DivisibilityViolation(std::move(value), 6);
  return Integer(value / 6);
}

}  // namespace

DivisibilityViolation::DivisibilityViolation(Integer value, long divisor)
    : std::runtime_error(value.get_str() + " is not divisible by " +
                         std::to_string(divisor)),
      value_(std::move(value)),
      divisor_(divisor) {}

Integer DivisibilityViolation::remainder() const {
  return Integer(value_ % divisor_);
}

DecompositionViolation::DecompositionViolation(int degree, Integer n2d,
                                               Integer stratum_sum)
    : std::runtime_error("decomposition fails at degree " +
                         std::to_string(degree) + ": " + n2d.get_str() +
                         " != " + stratum_sum.get_str()),
      degree_(degree),
      n2d_(std::move(n2d)),
      stratum_sum_(std::move(stratum_sum)) {}

Rational genus_two_sum_coefficient(int degree, int d1, int d2,
                                   const GenusTwoCoefficients& k) {
  Integer pair = Integer(d1) * d2;
  return Rational(pair * pair + k.constant_term) -
         Rational(k.correction_scale * (k.product_scale * pair - k.product_shift),
                  Integer(k.degree_scale) * degree - 2);
}

Rational w11_sum_coefficient(int degree, int d1, int d2) {
  Integer pair = Integer(d1) * d2;
  return Rational(pair * pair - 6 * pair - 4) +
         Rational(18 * pair, Integer(degree));
}

Rational w13_sum_coefficient(int degree, int d1, int d2) {
  Integer pair = Integer(d1) * d2;
  return Rational(pair + 4) - Rational(9 * pair, Integer(degree));
}

Rational genus_two_split_sum(int degree, CountCache& cache,
                             const GenusTwoCoefficients& k, SplitOrder order) {
  return weighted_split_sum(
      degree, cache,
      [&k](int d, int d1, int d2) {
        return genus_two_sum_coefficient(d, d1, d2, k);
      },
      order);
}

Rational w11_split_sum(int degree, CountCache& cache, SplitOrder order) {
  return weighted_split_sum(degree, cache, w11_sum_coefficient, order);
}

Rational w13_split_sum(int degree, CountCache& cache, SplitOrder order) {
  return weighted_split_sum(degree, cache, w13_sum_coefficient, order);
}

Integer n_genus_two(int degree, CountCache& cache,
                    const GenusTwoCoefficients& k) {
  require_positive_degree(degree, "n_genus_two");
  const bool standard = k == GenusTwoCoefficients{};
  if (standard)
    if (const Integer* hit = cache.find(CountFamily::genus2, degree))
      return *hit;
  Rational n_d(n_rational(degree, cache));
  Rational total =
      Rational(Integer(3) * (Integer(degree) * degree - 1)) * n_d +
      genus_two_split_sum(degree, cache, k) / 2;
  Integer value = rational_to_integer(total);
  if (standard) cache.store(CountFamily::genus2, degree, value);
  return value;
}

Integer w11_contribution(int degree, CountCache& cache) {
  require_positive_degree(degree, "w11_contribution");
  if (const Integer* hit = cache.find(CountFamily::w11, degree)) return *hit;
  Rational n_d(n_rational(degree, cache));
  Rational first(Integer(3) * (degree - 1) * (degree - 2) * (degree - 3),
                 Integer(degree));
  Rational total = first * n_d + w11_split_sum(degree, cache) / 2;
  Integer value = rational_to_integer(total);
  cache.store(CountFamily::w11, degree, value);
  return value;
}

Integer w13_contribution(int degree, CountCache& cache) {
  require_positive_degree(degree, "w13_contribution");
  if (const Integer* hit = cache.find(CountFamily::w13, degree)) return *hit;
  Rational n_d(n_rational(degree, cache));
  Rational first(Integer(6) * (Integer(3) * degree * degree - 12 * degree + 9),
                 Integer(degree));
  Rational total = first * n_d + Rational(3) * w13_split_sum(degree, cache);
  Integer value = rational_to_integer(total);
  if (value % 6 != 0) throw DivisibilityViolation(std::move(value), 6);
  cache.store(CountFamily::w13, degree, value);
  return value;
}

Integer tacnodal_count(int degree, CountCache& cache) {
  require_positive_degree(degree, "tacnodal_count");
  if (const Integer* hit = cache.find(CountFamily::tacnodal, degree))
    return *hit;
  Integer value = exact_sixth(w13_contribution(degree, cache));
  cache.store(CountFamily::tacnodal, degree, value);
  return value;
}

Integer kqr_published(int degree, CountCache& cache,
                      const GenusTwoCoefficients& k) {
  require_positive_degree(degree, "kqr_published");
  Integer sixth = exact_sixth(n_genus_two(degree, cache, k));
  return Integer(sixth - tacnodal_count(degree, cache));
}

GenusTwoBreakdown breakdown(int degree, CountCache& cache) {
  require_positive_degree(degree, "breakdown");
  GenusTwoBreakdown result;
  result.degree = degree;
  result.n2d = n_genus_two(degree, cache);
  result.w11 = w11_contribution(degree, cache);
  result.w13 = w13_contribution(degree, cache);
  result.tacnodal = tacnodal_count(degree, cache);
  result.kqr_published = kqr_published(degree, cache);

  Integer stratum_sum = result.w11 + result.w13;
  if (result.n2d != stratum_sum)
    throw DecompositionViolation(degree, result.n2d, std::move(stratum_sum));
  if (result.w13 != 6 * result.tacnodal)
    throw std::logic_error("breakdown: w13 != 6 * tacnodal at degree " +
                           std::to_string(degree));
  if (result.n2d != 6 * (result.kqr_published + result.tacnodal))
    throw std::logic_error("breakdown: n2d != 6 (kqr + tacnodal) at degree " +
                           std::to_string(degree));
  return result;
}

}  // namespace curvecount
