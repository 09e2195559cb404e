#include "curvecount/verification.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "curvecount/rational_counts.hpp"

namespace curvecount {

const char* const kGoldenGenusZero[7] = {
    "1", "1", "12", "620", "87304", "26312976", "14616808192"};

const char* const kGoldenGenusTwo[7] = {
    "0", "0", "0", "14400", "6350400", "3931128000", "3718909209600"};

namespace {

CheckResult pass(std::string name, int degree) {
  return {std::move(name), degree, true, "", ""};
}

CheckResult fail(std::string name, int degree, std::string lhs,
                 std::string rhs) {
  return {std::move(name), degree, false, std::move(lhs), std::move(rhs)};
}

// Runs one check body, translating the engine's exceptions into recorded
// failures so a broken formula yields a full report instead of an abort.
CheckResult guarded(const std::string& name, int degree,
                    const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const IntegralityViolation& e) {
    return fail(name, degree, e.value().denominator().get_str(), "1");
  } catch (const DivisibilityViolation& e) {
    return fail(name, degree, e.remainder().get_str(), "0");
  } catch (const DecompositionViolation& e) {
    return fail(name, degree, e.n2d().get_str(), e.stratum_sum().get_str());
  } catch (const std::exception& e) {
    return fail(name, degree, std::string("exception: ") + e.what(), "");
  }
}

CheckResult equality_check(std::string name, int degree, const Integer& lhs,
                           const Integer& rhs) {
  if (lhs == rhs) return pass(std::move(name), degree);
  return fail(std::move(name), degree, lhs.get_str(), rhs.get_str());
}

std::vector<CheckResult> check_table_impl(CountCache& cache,
                                          const GenusTwoCoefficients& k) {
  std::vector<CheckResult> results;
  for (int d = 1; d <= 7; ++d) {
    results.push_back(guarded("golden_n_d", d, [&] {
      return equality_check("golden_n_d", d, n_rational(d, cache),
                            Integer(kGoldenGenusZero[d - 1]));
    }));
    results.push_back(guarded("golden_n_2_d", d, [&] {
      return equality_check("golden_n_2_d", d, n_genus_two(d, cache, k),
                            Integer(kGoldenGenusTwo[d - 1]));
    }));
  }
  return results;
}

std::vector<CheckResult> check_decomposition_impl(
    int max_degree, CountCache& cache, const GenusTwoCoefficients& k) {
  if (max_degree < 2)
    throw std::invalid_argument("check_decomposition: max_degree must be >= 2");
  std::vector<CheckResult> results;
  for (int d = 2; d <= max_degree; ++d) {
    results.push_back(guarded("decomposition", d, [&] {
      Integer n2d = n_genus_two(d, cache, k);
      Integer stratum_sum =
          w11_contribution(d, cache) + w13_contribution(d, cache);
      return equality_check("decomposition", d, n2d, stratum_sum);
    }));
  }
  return results;
}

void append(std::vector<CheckResult>& all, std::vector<CheckResult> more) {
  for (CheckResult& r : more) all.push_back(std::move(r));
}

// Integrality is asserted inside each computation; reaching the return
// value means the pre-division rationals all normalized to denominator 1.
std::vector<CheckResult> integrality_checks(int max_degree, CountCache& cache,
                                            const GenusTwoCoefficients& k) {
  std::vector<CheckResult> results;
  for (int d = 1; d <= max_degree; ++d) {
    results.push_back(guarded("integral_genus0", d, [&] {
      n_rational(d, cache);
      return pass("integral_genus0", d);
    }));
    results.push_back(guarded("integral_genus2", d, [&] {
      n_genus_two(d, cache, k);
      return pass("integral_genus2", d);
    }));
    results.push_back(guarded("integral_w11", d, [&] {
      w11_contribution(d, cache);
      return pass("integral_w11", d);
    }));
    results.push_back(guarded("integral_w13", d, [&] {
      w13_contribution(d, cache);
      return pass("integral_w13", d);
    }));
    results.push_back(guarded("integral_tacnodal", d, [&] {
      tacnodal_count(d, cache);
      return pass("integral_tacnodal", d);
    }));
    results.push_back(guarded("integral_kqr", d, [&] {
      kqr_published(d, cache, k);
      return pass("integral_kqr", d);
    }));
  }
  return results;
}

std::vector<CheckResult> divisibility_checks(int max_degree,
                                             CountCache& cache) {
  std::vector<CheckResult> results;
  for (int d = 1; d <= max_degree; ++d) {
    results.push_back(guarded("w13_divisible_by_6", d, [&] {
      Integer remainder(w13_contribution(d, cache) % 6);
      if (remainder == 0) return pass("w13_divisible_by_6", d);
      return fail("w13_divisible_by_6", d, remainder.get_str(), "0");
    }));
  }
  return results;
}

CheckResult order_symmetry_check(const std::string& name, int degree,
                                 const std::function<Rational(SplitOrder)>& sum) {
  return guarded(name, degree, [&] {
    Rational forward = sum(SplitOrder::forward);
    Rational reversed = sum(SplitOrder::reverse);
    Rational swapped = sum(SplitOrder::swapped);
    if (forward != reversed) return fail(name, degree, forward.str(), reversed.str());
    if (forward != swapped) return fail(name, degree, forward.str(), swapped.str());
    return pass(name, degree);
  });
}

std::vector<CheckResult> symmetry_checks(int max_degree, CountCache& cache,
                                         const GenusTwoCoefficients& k) {
  std::vector<CheckResult> results;
  for (int d = 2; d <= max_degree; ++d) {
    results.push_back(order_symmetry_check(
        "split_symmetry_genus0", d,
        [&](SplitOrder o) { return kontsevich_split_sum(d, cache, o); }));
    results.push_back(order_symmetry_check(
        "split_symmetry_genus2", d,
        [&](SplitOrder o) { return genus_two_split_sum(d, cache, k, o); }));
    results.push_back(order_symmetry_check(
        "split_symmetry_w11", d,
        [&](SplitOrder o) { return w11_split_sum(d, cache, o); }));
    results.push_back(order_symmetry_check(
        "split_symmetry_w13", d,
        [&](SplitOrder o) { return w13_split_sum(d, cache, o); }));
  }
  return results;
}

}  // namespace

std::vector<CheckResult> check_table(CountCache& cache) {
  return check_table_impl(cache, GenusTwoCoefficients{});
}

std::vector<CheckResult> check_decomposition(int max_degree,
                                             CountCache& cache) {
  return check_decomposition_impl(max_degree, cache, GenusTwoCoefficients{});
}

VerificationReport run_suite(int max_degree, const GenusTwoCoefficients& k) {
  CountCache cache;
  return run_suite(max_degree, cache, k);
}

VerificationReport run_suite(int max_degree, CountCache& cache,
                             const GenusTwoCoefficients& k) {
  if (max_degree < 7)
    throw std::invalid_argument(
        "run_suite: max_degree must be >= 7 so the golden table is exercised");

  VerificationReport report;
  report.max_degree = max_degree;

  append(report.checks, check_table_impl(cache, k));
  append(report.checks, check_decomposition_impl(max_degree, cache, k));
  append(report.checks, integrality_checks(max_degree, cache, k));
  append(report.checks, divisibility_checks(max_degree, cache));
  append(report.checks, symmetry_checks(max_degree, cache, k));

  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     if (a.name != b.name) return a.name < b.name;
                     return a.degree < b.degree;
                   });
  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return c.passed; });
  return report;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["max_degree"] = report.max_degree;
  j["passed"] = report.passed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& check : report.checks) {
    nlohmann::ordered_json c;
    c["name"] = check.name;
    c["degree"] = check.degree;
    c["passed"] = check.passed;
    if (!check.passed) {
      c["lhs"] = check.lhs;
      c["rhs"] = check.rhs;
    }
    j["checks"].push_back(std::move(c));
  }
  return j;
}

}  // namespace curvecount
