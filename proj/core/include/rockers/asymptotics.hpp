#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include "rockers/natural.hpp"

namespace rockers {

inline constexpr double euler_gamma = std::numbers::egamma;

/// Limit of n - log n - Σ Ind as n grows: 1 + γ.
inline constexpr double index_sum_limit = 1.0 + euler_gamma;

enum class PsiMethod { closed_form, quadrature };

/// Ψ(n) = ∫_1^{n-1} S(⌊t⌋)/(t+1)^2 dt with S(m) = Σ_{j=1}^{m} log(n-j).
struct PsiValue {
  Natural n;
  double value;
  PsiMethod method;
  /// Zero for the closed form; the accumulated rule-pair estimate otherwise.
  double abs_error_bound;
};

struct AsymptoticReport {
  Natural n;
  double log_lambda_exact;
  double log_lambda_asym;
  double psi;
  double log_error;    // log_lambda_exact - log_lambda_asym
  double ratio_error;  // e^{log_error} - 1
};

/// S(m) = Σ_{j=1}^{m} log(n-j), for n >= 3 and 0 <= m <= n-1.
double prefix_log_sum(Natural n, std::int64_t m);

/// Ψ(n) integrated exactly over each unit step of the integrand:
/// Σ_{m=1}^{n-2} S(m) (1/(m+1) - 1/(m+2)).
PsiValue psi_closed_form(Natural n);

/// Ψ(n) by adaptive Gauss-Kronrod (7/15) quadrature, never subdividing
/// across an integer. Throws ToleranceError if `tol` is not reached within
/// `max_subintervals` subintervals.
PsiValue psi_quadrature(Natural n, double tol, std::size_t max_subintervals = std::size_t{1} << 16);

/// Σ_{j=1}^{n-1} log(n-j)/(j+1) - [S(n-1)/n + Ψ(n)]. Zero up to rounding.
double abel_identity_residual(Natural n);

/// (n - 1/(2n) - 1/2) log n + log(2π)/2 - (n + Ψ(n) - 1).
double log_lambda_asymptotic(Natural n);

/// c(n) = n - log n - Σ_{k=1}^{n-2} Ind; tends to index_sum_limit.
double index_sum_constant(Natural n);

/// One report per n in {n_min, n_min+step, ...} not exceeding n_max.
std::vector<AsymptoticReport> asymptotic_report(Natural n_min, Natural n_max, std::int64_t step = 1);

}  // namespace rockers
