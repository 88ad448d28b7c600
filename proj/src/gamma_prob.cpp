#include "gammaext/gamma_prob.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "gammaext/errors.hpp"
#include "gammaext/quadrature.hpp"

namespace gammaext {

GammaParams::GammaParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > 0.0) || !std::isfinite(alpha) || !(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("GammaParams: alpha and beta must be positive and finite");
  }
}

Kappa::Kappa(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError("Kappa: must be positive and finite");
  }
}

Probability h(Kappa kappa, double alpha) {
  const long double a = alpha;
  return Probability(static_cast<double>(reg_gamma_tails(a, a * kappa.value()).lower));
}

double log_h(Kappa kappa, double alpha) {
  return log_reg_lower_gamma(alpha, alpha * kappa.value());
}

Probability g(Kappa kappa, const GammaParams& params) { return h(kappa, params.alpha()); }

Probability band(const GammaParams& params, Kappa kappa) {
  // Standardize to scale 1: the band is [a - k sqrt a, a + k sqrt a].
  const long double a = params.alpha();
  const long double half_width = static_cast<long double>(kappa.value()) * std::sqrt(a);
  const GammaTails upper = reg_gamma_tails(a, a + half_width);
  if (a <= half_width) return Probability(static_cast<double>(upper.lower));
  const GammaTails lower = reg_gamma_tails(a, a - half_width);
  // Difference of CDFs, taken from whichever tails are the small ones.
  const long double inside = (upper.lower <= 0.5L) ? upper.lower - lower.lower
                                                   : lower.upper - upper.upper;
  return Probability(static_cast<double>(inside));
}

Probability t(double alpha) { return band(GammaParams(alpha, 1.0), Kappa(1.0)); }

double step_monotone_integral(Kappa kappa, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("step_monotone_integral: alpha must be positive and finite");
  }
  const long double k = kappa.value();
  const long double a = alpha;
  // kappa (1 + w/a)^a e^{-kappa w} = kappa exp(a log1pmx(w/a) + (1 - kappa) w)
  auto integrand = [k, a](double w) {
    const long double lw = w;
    return static_cast<double>(k * std::exp(a * log1pmx(lw / a) + (1.0L - k) * lw));
  };
  return integrate_gk15(integrand, 0.0, 1.0, kStepIntegralTol).value;
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes (1, 3, 5) and the centre.
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo, hi, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(centre - dx) + f(centre + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {lo, hi, kronrod * half, std::fabs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_gk15(const std::function<double(double)>& f, double lo, double hi,
                                double abs_tol, int max_intervals) {
  std::priority_queue<Segment> segments;
  segments.push(gk15(f, lo, hi));
  double total = segments.top().value;
  double error = segments.top().error;
  while (error > abs_tol) {
    if (static_cast<int>(segments.size()) >= max_intervals) {
      throw ConvergenceError("adaptive quadrature: interval budget exhausted");
    }
    const Segment worst = segments.top();
    segments.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Segment left = gk15(f, worst.lo, mid);
    const Segment right = gk15(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    segments.push(left);
    segments.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  double sum = 0.0;
  double err = 0.0;
  const int count = static_cast<int>(segments.size());
  while (!segments.empty()) {
    sum += segments.top().value;
    err += segments.top().error;
    segments.pop();
  }
  return {sum, err, count};
}

}  // namespace gammaext
