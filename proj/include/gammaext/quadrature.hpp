#pragma once

#include <functional>

namespace gammaext {

struct QuadratureResult {
  double value;
  double error_estimate;
  int intervals;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [lo, hi]: the
/// interval with the largest error estimate is bisected until the summed
/// estimate drops below abs_tol. Throws ConvergenceError after max_intervals.
QuadratureResult integrate_gk15(const std::function<double(double)>& f, double lo, double hi,
                                double abs_tol, int max_intervals = 2000);

}  // namespace gammaext
