#include "rockers/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "rockers/errors.hpp"

namespace rockers {

namespace {

__extension__ using Wide = __int128;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Wide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("Rational: value does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

Rational make_reduced(Wide num, Wide den) {
  if (den == 0) {
    throw DomainError("Rational: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw DomainError("Rational: zero denominator");
  }
  Wide num = numerator;
  Wide den = denominator;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = narrow(num);
  den_ = narrow(den);
}

Rational Rational::reciprocal() const {
  if (num_ == 0) {
    throw DomainError("Rational: reciprocal of zero");
  }
  return make_reduced(den_, num_);
}

std::string Rational::to_string() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make_reduced(Wide{a.num_} * b.den_ + Wide{b.num_} * a.den_, Wide{a.den_} * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make_reduced(Wide{a.num_} * b.den_ - Wide{b.num_} * a.den_, Wide{a.den_} * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first so products of telescoping factors stay small.
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  const Wide num = Wide{a.num_ / g1} * (b.num_ / g2);
  const Wide den = Wide{a.den_ / g2} * (b.den_ / g1);
  return make_reduced(num, den);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return Wide{a.num_} * b.den_ <=> Wide{b.num_} * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace rockers
