#include "quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "rockers/asymptotics.hpp"
#include "rockers/errors.hpp"
#include "rockers/summation.hpp"

namespace rockers {

namespace detail {

namespace {

// 15-point Kronrod abscissae on [-1, 1] (non-negative half) and weights;
// the odd-indexed nodes are the 7-point Gauss nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;

  friend bool operator<(const Segment& x, const Segment& y) { return x.error < y.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) {
      gauss += kGaussWeights[i / 2] * pair;
    }
  }
  return Segment{a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_pieces(const std::function<double(double)>& f,
                                  std::span<const Interval> pieces, double tol,
                                  std::size_t max_subintervals) {
  std::priority_queue<Segment> queue;
  double error = 0.0;
  for (const Interval& piece : pieces) {
    const Segment segment = gauss_kronrod(f, piece.a, piece.b);
    error += segment.error;
    queue.push(segment);
  }

  while (error > tol && queue.size() < max_subintervals) {
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  // Re-sum from scratch; the running error picks up cancellation noise.
  const std::size_t subintervals = queue.size();
  CompensatedSum<double> value;
  CompensatedSum<double> total_error;
  for (; !queue.empty(); queue.pop()) {
    value += queue.top().value;
    total_error += queue.top().error;
  }
  return QuadratureResult{value.value(), total_error.value(), subintervals,
                          total_error.value() <= tol};
}

}  // namespace detail

PsiValue psi_quadrature(Natural n, double tol, std::size_t max_subintervals) {
  require_at_least(n, 3, "psi_quadrature");
  if (!(tol > 0.0)) {
    throw DomainError("psi_quadrature: tolerance must be positive");
  }

  // S(⌊t⌋), evaluated directly for each unit step.
  const std::int64_t last = n.value() - 2;
  std::vector<double> step_heights(static_cast<std::size_t>(last) + 1, 0.0);
  std::vector<detail::Interval> pieces;
  pieces.reserve(static_cast<std::size_t>(last));
  for (std::int64_t m = 1; m <= last; ++m) {
    step_heights[static_cast<std::size_t>(m)] = prefix_log_sum(n, m);
    pieces.push_back({static_cast<double>(m), static_cast<double>(m + 1)});
  }

  const auto integrand = [&step_heights, last](double t) {
    // Nodes are interior to each unit piece, so the floor is never ambiguous.
    auto m = static_cast<std::int64_t>(std::floor(t));
    m = std::min(std::max<std::int64_t>(m, 1), last);
    const double shifted = t + 1.0;
    return step_heights[static_cast<std::size_t>(m)] / (shifted * shifted);
  };

  const detail::QuadratureResult result =
      detail::integrate_pieces(integrand, pieces, tol, max_subintervals);
  if (!result.converged) {
    throw ToleranceError("psi_quadrature: tolerance " + std::to_string(tol) + " not reached within " +
                         std::to_string(max_subintervals) + " subintervals");
  }
  return PsiValue{n, result.value, PsiMethod::quadrature, result.error_estimate};
}

}  // namespace rockers
