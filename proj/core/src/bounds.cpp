#include "rockers/bounds.hpp"

#include <cmath>
#include <numbers>

#include "rockers/core.hpp"
#include "rockers/summation.hpp"

namespace rockers {

double denominator_product_log(Natural n) {
  require_at_least(n, 3, "denominator_product_log");
  // j = n-1 is the base-1 factor and contributes log 1 = 0.
  CompensatedSum<long double> sum;
  for (std::int64_t j = n.value() - 1; j >= 1; --j) {
    sum += std::log(static_cast<long double>(n.value() - j)) / static_cast<long double>(j + 1);
  }
  return static_cast<double>(sum.value());
}

BoundsVerdict bounds_check(Natural n) {
  require_at_least(n, 3, "bounds_check");
  const auto x = static_cast<double>(n.value());
  const double log_n = std::log(x);
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);

  BoundsVerdict v{n, 0, 0, 0, 0, 0, 0, false, false, false, false};
  v.denom_log = denominator_product_log(n);
  v.lower_log = std::numbers::ln2 * log_n;
  v.upper_log = log_n * log_n;
  v.lambda_log = static_cast<double>(log_lambda(n).log);
  v.lambda_lower_log = (x - log_n) * log_n + 0.5 * log_n + half_log_two_pi - x;
  v.lambda_upper_log = x * log_n + 0.5 * log_n + half_log_two_pi - std::numbers::ln2 * log_n - x;

  v.lower_holds = v.lower_log <= v.denom_log;
  v.upper_holds = v.denom_log <= v.upper_log;
  v.lambda_lower_holds = v.lambda_lower_log <= v.lambda_log;
  v.lambda_upper_holds = v.lambda_log <= v.lambda_upper_log;
  return v;
}

Natural bounds_threshold(Natural n_min, Natural n_max) {
  require_at_least(n_min, 3, "bounds_threshold");
  if (n_min > n_max) {
    throw DomainError("bounds_threshold: empty range");
  }
  for (std::int64_t v = n_max.value(); v >= n_min.value(); --v) {
    if (!bounds_check(Natural(v)).all_hold()) {
      if (v == n_max.value()) {
        throw ThresholdNotFound("bounds_threshold: inequalities fail at the top of the window, n = " +
                                std::to_string(v));
      }
      return Natural(v + 1);
    }
  }
  return n_min;
}

Natural bounds_threshold() { return bounds_threshold(Natural(3), Natural(10000)); }

BigCount::BigCount(mpz_class value) : value_(std::move(value)) {
  if (sgn(value_) < 0) {
    throw DomainError("BigCount: value must be nonnegative");
  }
}

double BigCount::log() const {
  if (sgn(value_) == 0) {
    return -HUGE_VAL;
  }
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value_.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

BigCount escape_count(Natural n, const PrecisionConfig& config) {
  require_at_least(n, 3, "escape_count");
  mpz_class product = n.value();
  for (std::int64_t k = 1; k <= n.value() - 2; ++k) {
    const FloorCertificate cert = floor_power(n.value() - k, index(k), config);
    product *= static_cast<long>(cert.floor);
  }
  return BigCount(std::move(product));
}

double escape_ratio(Natural n, const PrecisionConfig& config) {
  const double log_count = escape_count(n, config).log();
  return std::exp(log_count - static_cast<double>(log_lambda(n).log));
}

}  // namespace rockers
