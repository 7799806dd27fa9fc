#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "rockers/errors.hpp"

namespace rockers {

/// A positive integer argument of the rockers function.
class Natural {
 public:
  explicit Natural(std::int64_t value) : value_(value) {
    if (value < 1) {
      throw DomainError("natural number must be >= 1, got " + std::to_string(value));
    }
  }

  [[nodiscard]] std::int64_t value() const noexcept { return value_; }

  friend auto operator<=>(const Natural&, const Natural&) = default;

 private:
  std::int64_t value_;
};

/// Throws DomainError naming `operation` unless n >= minimum.
inline void require_at_least(Natural n, std::int64_t minimum, const char* operation) {
  if (n.value() < minimum) {
    throw DomainError(std::string(operation) + ": requires n >= " + std::to_string(minimum) +
                      ", got " + std::to_string(n.value()));
  }
}

}  // namespace rockers
