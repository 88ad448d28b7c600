#include "gammaext/optimize.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "gammaext/errors.hpp"

namespace gammaext {

namespace {

constexpr double kGoldenFraction = 0.3819660112501051;  // (3 - sqrt 5) / 2

std::string boundary_message(NoInteriorMinimum::Side side, double x, double value) {
  std::ostringstream os;
  os.precision(12);
  os << "no interior minimum: smallest sample at the "
     << (side == NoInteriorMinimum::Side::lower ? "lower" : "upper") << " boundary x=" << x
     << " (value " << value << ")";
  return os.str();
}

}  // namespace

NoInteriorMinimum::NoInteriorMinimum(Side side, double boundary_x, double boundary_value)
    : std::runtime_error(boundary_message(side, boundary_x, boundary_value)),
      side_(side),
      boundary_x_(boundary_x),
      boundary_value_(boundary_value) {}

Bracket bracket_minimum(const Objective& f, double lo, double hi, int grid_n) {
  if (!(lo < hi) || grid_n < 3) throw DomainError("bracket_minimum: need lo < hi and grid_n >= 3");
  const double step = (hi - lo) / (grid_n - 1);
  auto abscissa = [&](int i) { return i == grid_n - 1 ? hi : lo + i * step; };

  std::vector<double> values(static_cast<std::size_t>(grid_n));
  int best = 0;
  for (int i = 0; i < grid_n; ++i) {
    values[i] = f(abscissa(i));
    if (values[i] < values[best]) best = i;
  }
  // A minimum shared with an end point (e.g. an underflowed plateau) is not interior.
  if (values.front() == values[best]) {
    throw NoInteriorMinimum(NoInteriorMinimum::Side::lower, lo, values.front());
  }
  if (values.back() == values[best]) {
    throw NoInteriorMinimum(NoInteriorMinimum::Side::upper, hi, values.back());
  }
  return {abscissa(best - 1), abscissa(best), abscissa(best + 1)};
}

OptimizationResult brent_min(const Objective& f, const Bracket& bracket, double tol,
                             int max_evaluations) {
  if (!(tol > 0.0)) throw DomainError("brent_min: tol must be positive");
  if (!(bracket.lo < bracket.mid && bracket.mid < bracket.hi)) {
    throw DomainError("brent_min: bracket must satisfy lo < mid < hi");
  }
  double a = bracket.lo;
  double b = bracket.hi;
  double x = bracket.mid;
  double w = x;
  double v = x;
  double fx = f(x);
  double fw = fx;
  double fv = fx;
  int evaluations = 1;
  double d = 0.0;
  double e = 0.0;

  while (true) {
    const double xm = 0.5 * (a + b);
    const double tol1 = tol + std::numeric_limits<double>::epsilon() * std::fabs(x);
    const double tol2 = 2.0 * tol1;
    if (std::fabs(x - xm) <= tol2 - 0.5 * (b - a)) {
      return {x, fx, bracket, evaluations, true};
    }
    if (evaluations >= max_evaluations) {
      throw MaxEvaluations("brent_min: evaluation budget exhausted");
    }
    bool golden = true;
    if (std::fabs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::fabs(q);
      const double previous = e;
      e = d;
      if (std::fabs(p) < std::fabs(0.5 * q * previous) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = std::copysign(tol1, xm - x);
        golden = false;
      }
    }
    if (golden) {
      e = (x >= xm) ? a - x : b - x;
      d = kGoldenFraction * e;
    }
    const double u = std::fabs(d) >= tol1 ? x + d : x + std::copysign(tol1, d);
    const double fu = f(u);
    ++evaluations;
    if (fu <= fx) {
      if (u >= x) a = x; else b = x;
      v = std::exchange(w, std::exchange(x, u));
      fv = std::exchange(fw, std::exchange(fx, fu));
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = std::exchange(w, u);
        fv = std::exchange(fw, fu);
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }
}

OptimizationResult min_h(Kappa kappa, double tol, int grid_n) {
  auto objective = [kappa](double log_alpha) { return h(kappa, std::exp(log_alpha)).value(); };
  const double lo = std::log(kScanAlphaLo);
  const double hi = std::log(kScanAlphaHi);
  Bracket bracket;
  try {
    bracket = bracket_minimum(objective, lo, hi, grid_n);
  } catch (const NoInteriorMinimum& boundary) {
    const double alpha = boundary.side() == NoInteriorMinimum::Side::lower ? kScanAlphaLo
                                                                          : kScanAlphaHi;
    throw NoInteriorMinimum(boundary.side(), alpha, boundary.boundary_value());
  }
  OptimizationResult found = brent_min(objective, bracket, tol);
  const double argmin = std::exp(found.argmin);
  return {argmin,
          h(kappa, argmin).value(),
          {std::exp(bracket.lo), std::exp(bracket.mid), std::exp(bracket.hi)},
          found.evaluations + grid_n,
          found.converged};
}

std::vector<ScanRow> scan(Kappa kappa, double alpha_lo, double alpha_hi, int n, Execution exec) {
  if (!(alpha_lo > 0.0) || !(alpha_lo < alpha_hi) || n < 2) {
    throw DomainError("scan: need 0 < alpha_lo < alpha_hi and n >= 2");
  }
  const double log_lo = std::log(alpha_lo);
  const double step = (std::log(alpha_hi) - log_lo) / (n - 1);
  const auto count = static_cast<std::size_t>(n);
  return map_indices(exec, count, [&](std::size_t i) {
    double alpha = std::exp(log_lo + static_cast<double>(i) * step);
    if (i == 0) alpha = alpha_lo;
    if (i + 1 == count) alpha = alpha_hi;
    return ScanRow{alpha, h(kappa, alpha).value()};
  });
}

}  // namespace gammaext
