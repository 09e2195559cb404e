#ifndef CURVECOUNT_VERIFICATION_HPP
#define CURVECOUNT_VERIFICATION_HPP

#include <string>
#include <vector>

#include "curvecount/count_cache.hpp"
#include "curvecount/genus_two.hpp"

#include "json.hpp"

namespace curvecount {

// One invariant checked at one degree. On failure lhs and rhs hold both
// sides of the violated equation as exact decimal strings.
struct CheckResult {
  std::string name;
  int degree = 0;
  bool passed = false;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  int max_degree = 0;
  bool passed = false;
  std::vector<CheckResult> checks;
};

// Golden values for d = 1..7, embedded as decimal strings because they
// exceed 32-bit (and nearly 64-bit) ranges.
extern const char* const kGoldenGenusZero[7];
extern const char* const kGoldenGenusTwo[7];

// Compares n_rational and n_genus_two for d = 1..7 against the golden
// values. Failures are recorded, never thrown.
std::vector<CheckResult> check_table(CountCache& cache);

// Asserts n2d = w11 + w13 exactly for every d in 2..max_degree.
std::vector<CheckResult> check_decomposition(int max_degree,
                                             CountCache& cache);

// Full suite: golden table, decomposition, integrality, divisibility by 6,
// and split-order symmetry, for all degrees up to max_degree (>= 7 so the
// golden table is always exercised). Checks are merged in (name, degree)
// order, so two runs produce identical reports. Non-default coefficients
// exist for fault-sensitivity testing of the genus-two formula.
VerificationReport run_suite(int max_degree,
                             const GenusTwoCoefficients& k = {});
VerificationReport run_suite(int max_degree, CountCache& cache,
                             const GenusTwoCoefficients& k = {});

nlohmann::ordered_json report_to_json(const VerificationReport& report);

}  // namespace curvecount

#endif  // CURVECOUNT_VERIFICATION_HPP
