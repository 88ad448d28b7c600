#pragma once

// Probability functions of X ~ Gamma(alpha, beta) (shape alpha, scale beta):
//
//   g_kappa(alpha, beta) = P{X <= kappa E[X]}            (independent of beta)
//   h_kappa(alpha)       = g_kappa(alpha, 1) = P(alpha, kappa alpha)
//   band(alpha, kappa)   = P{|X - E X| <= kappa sd(X)}   (independent of beta)
//   t(alpha)             = band(alpha, 1)

#include "gammaext/specfun.hpp"

namespace gammaext {

class GammaParams {
 public:
  /// Throws DomainError unless both parameters are positive and finite.
  GammaParams(double alpha, double beta = 1.0);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double mean() const noexcept { return alpha_ * beta_; }
  double variance() const noexcept { return alpha_ * beta_ * beta_; }

 private:
  double alpha_;
  double beta_;
};

class Kappa {
 public:
  explicit Kappa(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

Probability h(Kappa kappa, double alpha);
/// ln h_kappa(alpha); stays finite where h itself underflows (kappa < 1, large alpha).
double log_h(Kappa kappa, double alpha);
Probability g(Kappa kappa, const GammaParams& params);

Probability band(const GammaParams& params, Kappa kappa);
Probability t(double alpha);

/// The integral of kappa (1 + w/alpha)^alpha e^{-kappa w} over w in [0, 1].
/// For kappa <= 1 it is below 1 exactly when h_kappa(alpha + 1) < h_kappa(alpha).
/// Absolute error <= kStepIntegralTol.
inline constexpr double kStepIntegralTol = 1e-10;
double step_monotone_integral(Kappa kappa, double alpha);

}  // namespace gammaext
