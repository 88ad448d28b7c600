#pragma once

// One-dimensional minimization of h_kappa over alpha > 0, carried out in
// x = ln(alpha) coordinates, plus log-spaced scans of h_kappa.

#include <functional>
#include <stdexcept>
#include <vector>

#include "gammaext/gamma_prob.hpp"
#include "gammaext/parallel.hpp"

namespace gammaext {

inline constexpr double kDefaultTol = 1e-8;
inline constexpr double kScanAlphaLo = 1e-4;
inline constexpr double kScanAlphaHi = 1e6;
inline constexpr int kDefaultBracketGrid = 200;
inline constexpr int kMaxBrentEvaluations = 200;

using Objective = std::function<double(double)>;

struct Bracket {
  double lo, mid, hi;
};

/// The sampled minimum of a grid lies on its boundary: the infimum is a limit
/// at lo or hi rather than an interior minimum.
class NoInteriorMinimum : public std::runtime_error {
 public:
  enum class Side { lower, upper };
  NoInteriorMinimum(Side side, double boundary_x, double boundary_value);

  Side side() const noexcept { return side_; }
  double boundary_x() const noexcept { return boundary_x_; }
  double boundary_value() const noexcept { return boundary_value_; }

 private:
  Side side_;
  double boundary_x_;
  double boundary_value_;
};

class MaxEvaluations : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// argmin/min_value are in the objective's own coordinates for brent_min;
/// min_h reports them in alpha (bracket included).
struct OptimizationResult {
  double argmin;
  double min_value;
  Bracket bracket;
  int evaluations;
  bool converged;
};

/// Samples f on grid_n equally spaced points of [lo, hi] and returns the
/// neighbours of the smallest sample (first one on ties). Throws
/// NoInteriorMinimum when the smallest value is attained at an end point.
Bracket bracket_minimum(const Objective& f, double lo, double hi, int grid_n);

/// Brent's method (golden section with parabolic steps) inside a bracket.
/// Stops when the minimizer is pinned to an absolute abscissa tolerance tol.
OptimizationResult brent_min(const Objective& f, const Bracket& bracket, double tol,
                             int max_evaluations = kMaxBrentEvaluations);

/// min over alpha in [kScanAlphaLo, kScanAlphaHi] of h_kappa(alpha).
/// For kappa <= 1 the grid minimum sits at the alpha -> infinity end and
/// NoInteriorMinimum (with boundary_x in alpha units) is thrown.
OptimizationResult min_h(Kappa kappa, double tol = kDefaultTol,
                         int grid_n = kDefaultBracketGrid);

struct ScanRow {
  double alpha;
  double value;
};

/// n log-spaced alphas from alpha_lo to alpha_hi (end points exact) with h_kappa.
std::vector<ScanRow> scan(Kappa kappa, double alpha_lo, double alpha_hi, int n,
                          Execution exec = Execution::parallel);

}  // namespace gammaext
