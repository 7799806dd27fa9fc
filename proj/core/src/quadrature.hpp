#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace rockers::detail {

struct Interval {
  double a;
  double b;
};

struct QuadratureResult {
  double value;
  double error_estimate;
  std::size_t subintervals;
  bool converged;
};

/// Globally adaptive Gauss-Kronrod 7/15 integration over the union of
/// `pieces`. Subdivision bisects the piece with the largest |K15 - G7|
/// estimate, so no subinterval ever crosses a piece boundary.
QuadratureResult integrate_pieces(const std::function<double(double)>& f,
                                  std::span<const Interval> pieces, double tol,
                                  std::size_t max_subintervals);

}  // namespace rockers::detail
