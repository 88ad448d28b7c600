#pragma once

// Special functions written from scratch: log-gamma, the regularized
// incomplete gamma functions P(a,x) and Q(a,x), and the standard normal
// CDF / band probabilities derived from them.
//
// Every routine is computed internally in long double. The double entry
// points round the extended result once at the end.

#include <compare>

namespace gammaext {

/// A probability in [0, 1]. Values that overshoot the interval by at most
/// 1e-12 (round-off) are clamped; anything further out is rejected.
class Probability {
 public:
  static constexpr double kSlack = 1e-12;

  explicit Probability(double v);

  double value() const noexcept { return value_; }
  explicit operator double() const noexcept { return value_; }

  friend auto operator<=>(const Probability&, const Probability&) = default;

 private:
  double value_;
};

// Supported range of reg_lower_gamma and friends.
inline constexpr double kMinShape = 1e-6;
inline constexpr double kMaxShape = 1e7;

inline constexpr long double kGammaTinyDenominator = 1e-300L;
inline constexpr long double kGammaConvergenceTol = 1e-18L;
inline constexpr long kGammaIterationCap = 1'000'000;

/// ln Gamma(a) for a > 0.
double ln_gamma(double a);
long double ln_gamma(long double a);

/// P(a,x) = gamma(a,x) / Gamma(a), a in [kMinShape, kMaxShape], x >= 0.
Probability reg_lower_gamma(double a, double x);

/// Both tails of the incomplete gamma ratio, each accurate in absolute terms.
/// The smaller tail is the one computed directly.
struct GammaTails {
  long double lower;  // P(a,x)
  long double upper;  // Q(a,x)
};
GammaTails reg_gamma_tails(long double a, long double x);

/// ln P(a,x) and ln Q(a,x); finite even where P or Q underflows.
double log_reg_lower_gamma(double a, double x);
double log_reg_upper_gamma(double a, double x);

/// P{|Z| <= kappa} = erf(kappa / sqrt 2) for kappa > 0.
Probability std_normal_band(double kappa);

/// Phi(x), and ln Phi(x) (accurate far into the lower tail).
double std_normal_cdf(double x);
double log_std_normal_cdf(double x);

/// ln(1 + mu) - mu without cancellation near mu = 0. Requires mu > -1.
long double log1pmx(long double mu);

namespace detail {

/// ln( x^a e^{-x} / Gamma(a+1) ), evaluated without overflow for large a.
long double log_gamma_prefactor(long double a, long double x);

/// Power-series route: returns P(a,x) (or ln P). Converges for any x >= 0.
long double lower_gamma_series(long double a, long double x);
long double log_lower_gamma_series(long double a, long double x);
/// Continued-fraction route (modified Lentz): returns ln Q(a,x). x > 0.
long double log_upper_gamma_cf(long double a, long double x);

}  // namespace detail

}  // namespace gammaext
