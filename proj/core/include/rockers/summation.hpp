#pragma once

#include <cmath>
#include <concepts>

namespace rockers {

/// Neumaier's variant of Kahan summation: the running compensation also
/// captures the low part when an addend is larger than the partial sum.
template <std::floating_point T>
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  constexpr explicit CompensatedSum(T initial) : sum_(initial) {}

  constexpr void add(T x) noexcept {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  constexpr CompensatedSum& operator+=(T x) noexcept {
    add(x);
    return *this;
  }

  [[nodiscard]] constexpr T value() const noexcept { return sum_ + compensation_; }

 private:
  T sum_ = 0;
  T compensation_ = 0;
};

}  // namespace rockers
