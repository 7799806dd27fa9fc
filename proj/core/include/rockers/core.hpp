#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rockers/log_value.hpp"
#include "rockers/natural.hpp"
#include "rockers/precision.hpp"
#include "rockers/rational.hpp"

namespace rockers {

/// One factor base^exponent of the rockers product.
struct FactorTerm {
  std::int64_t base;
  Rational exponent;

  friend bool operator==(const FactorTerm&, const FactorTerm&) = default;
};

/// λ(n) as an ordered product of factor terms, largest base first:
/// n^1, (n-1)^{1/2}, (n-2)^{2/3}, ..., 2^{(n-2)/(n-1)}. The trivial base-1
/// factor is not listed.
struct Decomposition {
  Natural n;
  std::vector<FactorTerm> terms;
};

/// Factor terms of λ(n). Requires n >= 3; λ(1) and λ(2) are special cases.
Decomposition factorization(Natural n);

/// Ind(n-k) = k/(k+1), the exponent carried by the k-th iteration factor.
Rational index(std::int64_t k);

/// Π_{k=1}^{n-2} Ind(n-k), multiplied out exactly. Equals 1/(n-1).
Rational index_product(Natural n);

/// Σ_{k=1}^{n-2} Ind(n-k) by compensated summation.
double index_sum(Natural n);

/// log n! as a compensated sum of log m, m = 2..n.
LogValue log_factorial(Natural n);

/// log λ(n) from the factor product; λ(1) = 1 and λ(2) = 2 are stored.
LogValue log_lambda(Natural n);

/// λ(n) in decimal with `significant_digits` correctly rounded digits
/// (round-half-even). Trailing zeros are kept; values with more integer
/// digits than requested digits switch to d.ddde+X notation. The digits are
/// certified by interval evaluation; throws PrecisionError when the
/// precision ceiling is reached first.
std::string lambda_value(Natural n, int significant_digits, const PrecisionConfig& config = {});

/// λ(n) rounded half-even to a fixed number of decimals, certified as above.
std::string lambda_fixed(Natural n, int decimals, const PrecisionConfig& config = {});

}  // namespace rockers
