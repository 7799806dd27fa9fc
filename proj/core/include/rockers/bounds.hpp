#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "rockers/natural.hpp"
#include "rockers/precision.hpp"
#include "rockers/rational.hpp"

namespace rockers {

/// Outcome of the sandwich inequalities at one n, all compared in log space.
///
///   2^{log n} <= D(n) <= n^{log n},   D(n) = Π_{j=1}^{n-1} (n-j)^{1/(j+1)}
///
/// and the corresponding bounds on λ(n) after a Stirling substitution:
///
///   n^{n - log n} √n √(2π) / e^n <= λ(n) <= n^n √n √(2π) / (2^{log n} e^n).
struct BoundsVerdict {
  Natural n;
  double denom_log;
  double lower_log;
  double upper_log;
  double lambda_log;
  double lambda_lower_log;
  double lambda_upper_log;
  bool lower_holds;
  bool upper_holds;
  bool lambda_lower_holds;
  bool lambda_upper_holds;

  [[nodiscard]] bool all_hold() const noexcept {
    return lower_holds && upper_holds && lambda_lower_holds && lambda_upper_holds;
  }
};

/// Exact nonnegative integer, used for the escape count A(n).
class BigCount {
 public:
  BigCount() = default;
  explicit BigCount(mpz_class value);

  [[nodiscard]] const mpz_class& value() const noexcept { return value_; }
  [[nodiscard]] std::string to_string() const { return value_.get_str(); }
  /// Natural log, computed from the mantissa/exponent split so it never overflows.
  [[nodiscard]] double log() const;

  friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }

 private:
  mpz_class value_;
};

/// ⌊base^exponent⌋ together with how it was established.
struct FloorCertificate {
  std::int64_t base;
  Rational exponent;
  std::int64_t floor;
  bool is_exact_power;
  /// Working precision of the enclosure that certified the floor; 0 when
  /// the value was recognized as an exact integer power.
  unsigned precision_bits_used;
};

/// log D(n) = Σ_{j=1}^{n-1} log(n-j)/(j+1), smallest base first.
double denominator_product_log(Natural n);

BoundsVerdict bounds_check(Natural n);

/// Least n* in [n_min, n_max] such that every n in [n*, n_max] satisfies all
/// four inequalities, found by scanning down from n_max. Throws
/// ThresholdNotFound when n_max itself fails.
Natural bounds_threshold(Natural n_min, Natural n_max);

/// The threshold over the default window [3, 10^4].
Natural bounds_threshold();

/// Certified ⌊base^{p/q}⌋ for 0 < p/q <= 1. Exact q-th powers are detected
/// with integer root extraction; otherwise base^p is rooted in interval
/// arithmetic, doubling precision until the enclosure pins the floor.
FloorCertificate floor_power(std::int64_t base, const Rational& exponent,
                             const PrecisionConfig& config = {});

/// A(n) = n · Π_{k=1}^{n-2} ⌊(n-k)^{k/(k+1)}⌋.
BigCount escape_count(Natural n, const PrecisionConfig& config = {});

/// A(n) / λ(n), evaluated as exp(log A(n) - log λ(n)).
double escape_ratio(Natural n, const PrecisionConfig& config = {});

}  // namespace rockers
