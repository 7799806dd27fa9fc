#include <algorithm>
#include <string>

#include <gmpxx.h>

#include "mpfr_value.hpp"
#include "rockers/bounds.hpp"

namespace rockers {

FloorCertificate floor_power(std::int64_t base, const Rational& exponent, const PrecisionConfig& config) {
  if (base < 1) {
    throw DomainError("floor_power: base must be >= 1, got " + std::to_string(base));
  }
  if (exponent <= Rational(0) || exponent > Rational(1)) {
    throw DomainError("floor_power: exponent must lie in (0, 1], got " + exponent.to_string());
  }
  const auto p = static_cast<unsigned long>(exponent.numerator());
  const auto q = static_cast<unsigned long>(exponent.denominator());

  const mpz_class b = static_cast<long>(base);
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), b.get_mpz_t(), q) != 0) {
    mpz_class value;
    mpz_pow_ui(value.get_mpz_t(), root.get_mpz_t(), p);
    return FloorCertificate{base, exponent, value.get_si(), true, 0};
  }

  // Not a q-th power, so base^{p/q} is irrational and some finite
  // precision separates it from both neighbouring integers.
  mpz_class powered;
  mpz_pow_ui(powered.get_mpz_t(), b.get_mpz_t(), p);

  unsigned precision = std::min(config.start_bits, config.ceiling_bits);
  for (;;) {
    detail::MpfrValue lo(precision);
    detail::MpfrValue hi(precision);
    mpfr_set_z(lo.get(), powered.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi.get(), powered.get_mpz_t(), MPFR_RNDU);
    mpfr_rootn_ui(lo.get(), lo.get(), q, MPFR_RNDD);
    mpfr_rootn_ui(hi.get(), hi.get(), q, MPFR_RNDU);

    mpz_class floor_lo;
    mpz_class floor_hi;
    mpfr_get_z(floor_lo.get_mpz_t(), lo.get(), MPFR_RNDD);
    mpfr_get_z(floor_hi.get_mpz_t(), hi.get(), MPFR_RNDD);
    if (floor_lo == floor_hi) {
      return FloorCertificate{base, exponent, floor_lo.get_si(), false, precision};
    }
    if (precision >= config.ceiling_bits) {
      throw PrecisionError("floor_power: floor of " + std::to_string(base) + "^(" + exponent.to_string() +
                           ") not certified within " + std::to_string(config.ceiling_bits) + " bits");
    }
    precision = std::min(precision * 2, config.ceiling_bits);
  }
}

}  // namespace rockers
