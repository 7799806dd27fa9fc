#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace rockers {

/// Exact fraction of 64-bit integers, always held in lowest terms with a
/// positive denominator. Arithmetic is exact; an intermediate that does not
/// fit back into 64 bits after reduction throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);  // NOLINT: implicit from integer

  [[nodiscard]] std::int64_t numerator() const noexcept { return num_; }
  [[nodiscard]] std::int64_t denominator() const noexcept { return den_; }

  [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }
  [[nodiscard]] Rational reciprocal() const;
  [[nodiscard]] long double to_long_double() const noexcept {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }

  /// "p/q", or just "p" for integers.
  [[nodiscard]] std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace rockers
