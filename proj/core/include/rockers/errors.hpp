#pragma once

#include <stdexcept>
#include <string>

namespace rockers {

/// An argument lies outside the domain of the operation (n < 3 for the
/// product form, k < 1 for an index, an inverted range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Working-precision escalation hit its configured ceiling before a result
/// could be certified.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature exhausted its subdivision budget.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The inequality scan found a failure at the very top of its window.
class ThresholdNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rockers
