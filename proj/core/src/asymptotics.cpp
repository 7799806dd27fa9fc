#include "rockers/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "rockers/bounds.hpp"
#include "rockers/core.hpp"
#include "rockers/summation.hpp"

namespace rockers {

double prefix_log_sum(Natural n, std::int64_t m) {
  require_at_least(n, 3, "prefix_log_sum");
  if (m < 0 || m > n.value() - 1) {
    throw DomainError("prefix_log_sum: requires 0 <= m <= n-1, got m = " + std::to_string(m));
  }
  // Bases n-m .. n-1, smallest first.
  CompensatedSum<long double> sum;
  for (std::int64_t j = m; j >= 1; --j) {
    sum += std::log(static_cast<long double>(n.value() - j));
  }
  return static_cast<double>(sum.value());
}

PsiValue psi_closed_form(Natural n) {
  require_at_least(n, 3, "psi_closed_form");
  const std::int64_t last = n.value() - 2;

  // Running S(m) for m = 1..n-2.
  std::vector<long double> prefix(static_cast<std::size_t>(last) + 1, 0.0L);
  CompensatedSum<long double> running;
  for (std::int64_t m = 1; m <= last; ++m) {
    running += std::log(static_cast<long double>(n.value() - m));
    prefix[static_cast<std::size_t>(m)] = running.value();
  }

  // Term m is S(m)/((m+1)(m+2)), which shrinks with m: add from the tail.
  CompensatedSum<long double> psi;
  for (std::int64_t m = last; m >= 1; --m) {
    const auto mp1 = static_cast<long double>(m + 1);
    psi += prefix[static_cast<std::size_t>(m)] / (mp1 * (mp1 + 1.0L));
  }
  return PsiValue{n, static_cast<double>(psi.value()), PsiMethod::closed_form, 0.0};
}

double abel_identity_residual(Natural n) {
  require_at_least(n, 3, "abel_identity_residual");
  const long double weighted = denominator_product_log(n);
  const long double boundary =
      static_cast<long double>(prefix_log_sum(n, n.value() - 1)) / static_cast<long double>(n.value());
  const long double psi = psi_closed_form(n).value;
  return static_cast<double>(weighted - (boundary + psi));
}

namespace {

double asymptotic_log(std::int64_t n, long double psi) {
  const auto x = static_cast<long double>(n);
  const long double exponent = x - 1.0L / (2.0L * x) - 0.5L;
  const long double half_log_two_pi = 0.5L * std::log(2.0L * std::numbers::pi_v<long double>);
  return static_cast<double>(exponent * std::log(x) + half_log_two_pi - (x + psi - 1.0L));
}

}  // namespace

double log_lambda_asymptotic(Natural n) {
  require_at_least(n, 3, "log_lambda_asymptotic");
  return asymptotic_log(n.value(), psi_closed_form(n).value);
}

double index_sum_constant(Natural n) {
  require_at_least(n, 3, "index_sum_constant");
  const auto x = static_cast<long double>(n.value());
  return static_cast<double>(x - std::log(x) - static_cast<long double>(index_sum(n)));
}

std::vector<AsymptoticReport> asymptotic_report(Natural n_min, Natural n_max, std::int64_t step) {
  require_at_least(n_min, 3, "asymptotic_report");
  if (n_min > n_max) {
    throw DomainError("asymptotic_report: empty range");
  }
  if (step < 1) {
    throw DomainError("asymptotic_report: step must be >= 1");
  }
  std::vector<AsymptoticReport> rows;
  for (std::int64_t v = n_min.value(); v <= n_max.value(); v += step) {
    const Natural n(v);
    const double exact = static_cast<double>(log_lambda(n).log);
    const double psi = psi_closed_form(n).value;
    const double asym = asymptotic_log(v, psi);
    const double log_error = exact - asym;
    rows.push_back({n, exact, asym, psi, log_error, std::expm1(log_error)});
  }
  return rows;
}

}  // namespace rockers
