#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <limits>

#include "rockers/errors.hpp"

namespace rockers {

/// A strictly positive real carried as its natural logarithm, so that
/// λ(n), n! and the inequality bounds stay representable for large n.
struct LogValue {
  long double log = 0.0L;
  /// Significant bits of the floating type the log was accumulated in.
  int precision_hint = std::numeric_limits<long double>::digits;

  static LogValue of(long double positive) {
    if (!(positive > 0.0L)) {
      throw DomainError("LogValue requires a strictly positive quantity");
    }
    return LogValue{std::log(positive)};
  }

  /// e^log; overflows to +inf once the value leaves the double range.
  [[nodiscard]] double value() const { return static_cast<double>(std::exp(log)); }

  friend LogValue operator*(LogValue a, LogValue b) noexcept {
    return LogValue{a.log + b.log, std::min(a.precision_hint, b.precision_hint)};
  }
  friend LogValue operator/(LogValue a, LogValue b) noexcept {
    return LogValue{a.log - b.log, std::min(a.precision_hint, b.precision_hint)};
  }

  friend bool operator==(LogValue a, LogValue b) noexcept { return a.log == b.log; }
  friend std::partial_ordering operator<=>(LogValue a, LogValue b) noexcept {
    return a.log <=> b.log;
  }
};

}  // namespace rockers
