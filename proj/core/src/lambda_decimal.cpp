#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "mpfr_value.hpp"
#include "rockers/core.hpp"

namespace rockers {

namespace {

using detail::MpfrValue;

constexpr double kLog2Of10 = 3.321928094887362;

// Outward-rounded evaluation of the factor product: lo <= λ(n) <= hi.
void enclose_lambda(Natural n, mpfr_ptr lo, mpfr_ptr hi) {
  if (n.value() <= 2) {
    mpfr_set_si(lo, n.value(), MPFR_RNDN);
    mpfr_set_si(hi, n.value(), MPFR_RNDN);
    return;
  }
  MpfrValue term(mpfr_get_prec(lo));
  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);
  for (const FactorTerm& factor : factorization(n).terms) {
    for (const auto& [target, rnd] : {std::pair{lo, MPFR_RNDD}, std::pair{hi, MPFR_RNDU}}) {
      // Every intermediate is positive, so directed rounding is monotone.
      mpfr_set_si(term.get(), factor.base, rnd);
      mpfr_log(term.get(), term.get(), rnd);
      mpfr_mul_si(term.get(), term.get(), factor.exponent.numerator(), rnd);
      mpfr_div_si(term.get(), term.get(), factor.exponent.denominator(), rnd);
      mpfr_add(target, target, term.get(), rnd);
    }
  }
  mpfr_exp(lo, lo, MPFR_RNDD);
  mpfr_exp(hi, hi, MPFR_RNDU);
}

// Number of decimal digits before the point of x >= 1, rounded in direction rnd.
long integer_digits(mpfr_srcptr x, mpfr_rnd_t rnd) {
  MpfrValue t(mpfr_get_prec(x));
  mpfr_log10(t.get(), x, rnd);
  return mpfr_get_si(t.get(), MPFR_RNDD) + 1;
}

// round_half_even(x * 10^scale) as an integer, rounded outward first.
mpz_class scaled_round(mpfr_srcptr x, long scale, mpfr_rnd_t rnd) {
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  MpfrValue y(mpfr_get_prec(x));
  if (scale >= 0) {
    mpfr_mul_z(y.get(), x, power.get_mpz_t(), rnd);
  } else {
    mpfr_div_z(y.get(), x, power.get_mpz_t(), rnd);
  }
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), y.get(), MPFR_RNDN);
  return z;
}

struct CertifiedDigits {
  mpz_class digits;
  long exponent;  // value ≈ digits * 10^exponent
};

enum class Mode { significant, fixed };

CertifiedDigits certify(Natural n, Mode mode, long count, const PrecisionConfig& config) {
  const double log10_lambda = static_cast<double>(log_lambda(n).log) / std::log(10.0);
  const long total_digits =
      mode == Mode::significant ? count : static_cast<long>(std::floor(log10_lambda)) + 1 + count;
  const double bits_needed = static_cast<double>(std::max(total_digits, 1L)) * kLog2Of10 + 32.0 +
                             2.0 * std::log2(static_cast<double>(n.value()) + 1.0);
  if (bits_needed > config.ceiling_bits) {
    throw PrecisionError("lambda_value: " + std::to_string(count) +
                         " digits need more than the " + std::to_string(config.ceiling_bits) +
                         "-bit precision ceiling");
  }
  auto precision = static_cast<unsigned>(std::ceil(bits_needed));
  precision = std::min(std::max(precision, config.start_bits), config.ceiling_bits);

  for (;;) {
    MpfrValue lo(precision);
    MpfrValue hi(precision);
    enclose_lambda(n, lo.get(), hi.get());

    std::optional<long> scale;
    long exponent = 0;
    if (mode == Mode::fixed) {
      scale = count;
      exponent = -count;
    } else {
      const long e_lo = integer_digits(lo.get(), MPFR_RNDD);
      const long e_hi = integer_digits(hi.get(), MPFR_RNDU);
      if (e_lo == e_hi) {
        scale = count - e_lo;
        exponent = e_lo - count;
      }
    }
    if (scale) {
      const mpz_class z_lo = scaled_round(lo.get(), *scale, MPFR_RNDD);
      const mpz_class z_hi = scaled_round(hi.get(), *scale, MPFR_RNDU);
      if (z_lo == z_hi) {
        return {z_lo, exponent};
      }
    }
    if (precision >= config.ceiling_bits) {
      throw PrecisionError("lambda_value: digits of lambda(" + std::to_string(n.value()) +
                           ") not certified within " + std::to_string(config.ceiling_bits) +
                           " bits");
    }
    precision = std::min(precision * 2, config.ceiling_bits);
  }
}

}  // namespace

std::string lambda_value(Natural n, int significant_digits, const PrecisionConfig& config) {
  if (significant_digits < 1) {
    throw DomainError("lambda_value: significant_digits must be >= 1");
  }
  const long sig = significant_digits;
  auto [z, exponent] = certify(n, Mode::significant, sig, config);
  std::string digits = z.get_str();
  // Rounding carried into a new leading digit (9.99.. -> 10.0..).
  if (static_cast<long>(digits.size()) > sig) {
    digits.resize(static_cast<std::size_t>(sig));
    ++exponent;
  }
  const long int_digits = exponent + sig;
  if (int_digits > sig) {
    std::string out(1, digits.front());
    if (sig > 1) {
      out += '.';
      out.append(digits, 1);
    }
    return out + "e+" + std::to_string(int_digits - 1);
  }
  if (int_digits <= 0) {
    return "0." + std::string(static_cast<std::size_t>(-int_digits), '0') + digits;
  }
  std::string out = digits.substr(0, static_cast<std::size_t>(int_digits));
  if (int_digits < sig) {
    out += '.';
    out.append(digits, static_cast<std::size_t>(int_digits));
  }
  return out;
}

std::string lambda_fixed(Natural n, int decimals, const PrecisionConfig& config) {
  if (decimals < 0) {
    throw DomainError("lambda_fixed: decimals must be >= 0");
  }
  std::string digits = certify(n, Mode::fixed, decimals, config).digits.get_str();
  const auto places = static_cast<std::size_t>(decimals);
  if (places == 0) {
    return digits;
  }
  if (digits.size() <= places) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - places, 1, '.');
  return digits;
}

}  // namespace rockers
