#include <cmath>
#include <ranges>

#include "rockers/core.hpp"
#include "rockers/summation.hpp"

namespace rockers {

Decomposition factorization(Natural n) {
  require_at_least(n, 3, "factorization");
  Decomposition d{n, {}};
  d.terms.reserve(static_cast<std::size_t>(n.value() - 1));
  d.terms.push_back({n.value(), Rational(1)});
  for (std::int64_t k = 1; k <= n.value() - 2; ++k) {
    d.terms.push_back({n.value() - k, index(k)});
  }
  return d;
}

Rational index(std::int64_t k) {
  if (k < 1) {
    throw DomainError("index: requires k >= 1, got " + std::to_string(k));
  }
  return Rational(k, k + 1);
}

Rational index_product(Natural n) {
  require_at_least(n, 3, "index_product");
  Rational product(1);
  for (std::int64_t k = 1; k <= n.value() - 2; ++k) {
    product *= index(k);
  }
  return product;
}

double index_sum(Natural n) {
  require_at_least(n, 3, "index_sum");
  CompensatedSum<long double> sum;
  for (std::int64_t k = 1; k <= n.value() - 2; ++k) {
    sum += static_cast<long double>(k) / static_cast<long double>(k + 1);
  }
  return static_cast<double>(sum.value());
}

LogValue log_factorial(Natural n) {
  CompensatedSum<long double> sum;
  for (std::int64_t m = 2; m <= n.value(); ++m) {
    sum += std::log(static_cast<long double>(m));
  }
  return LogValue{sum.value()};
}

LogValue log_lambda(Natural n) {
  if (n.value() <= 2) {
    return LogValue{std::log(static_cast<long double>(n.value()))};
  }
  const Decomposition d = factorization(n);
  // Smallest base first: the terms grow with the base.
  CompensatedSum<long double> sum;
  for (const FactorTerm& term : std::views::reverse(d.terms)) {
    sum += term.exponent.to_long_double() * std::log(static_cast<long double>(term.base));
  }
  return LogValue{sum.value()};
}

}  // namespace rockers
