#include "gammaext/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "gammaext/errors.hpp"

namespace gammaext {

namespace {

using Real = long double;

constexpr Real kEulerGamma = 0.577215664901532860606512090082402431L;
constexpr Real kHalfLog2Pi = 0.918938533204672741780329736405617640L;

// B_{2k} / (2k (2k-1)) for k = 1..9: Stirling correction coefficients.
constexpr std::array<Real, 9> kStirling = {
    1.0L / 12.0L,          -1.0L / 360.0L,      1.0L / 1260.0L,
    -1.0L / 1680.0L,       1.0L / 1188.0L,      -691.0L / 360360.0L,
    1.0L / 156.0L,         -3617.0L / 122400.0L, 43867.0L / 244188.0L};

// ln Gamma*(a) = ln Gamma(a) - [(a - 1/2) ln a - a + ln sqrt(2 pi)], a >= 10.
Real stirling_correction(Real a) {
  const Real inv = 1.0L / a;
  const Real inv2 = inv * inv;
  Real sum = 0.0L;
  for (std::size_t k = kStirling.size(); k-- > 0;) sum = sum * inv2 + kStirling[k];
  return sum * inv;
}

constexpr int kZetaTerms = 48;

// zeta(k) - 1 for k = 2..kZetaTerms+1 by Euler-Maclaurin summation from n = 32.
const std::array<Real, kZetaTerms>& zeta_minus_one() {
  static const std::array<Real, kZetaTerms> table = [] {
    // B_{2j} / (2j)! for j = 1..5
    constexpr std::array<Real, 5> b = {1.0L / 12.0L, -1.0L / 720.0L, 1.0L / 30240.0L,
                                       -1.0L / 1209600.0L, 1.0L / 47900160.0L};
    constexpr int n_cut = 32;
    std::array<Real, kZetaTerms> out{};
    for (int i = 0; i < kZetaTerms; ++i) {
      const Real s = static_cast<Real>(i + 2);
      Real sum = 0.0L;
      for (int n = n_cut - 1; n >= 2; --n) sum += std::pow(static_cast<Real>(n), -s);
      const Real N = n_cut;
      Real tail = std::pow(N, 1.0L - s) / (s - 1.0L) + 0.5L * std::pow(N, -s);
      // rising factorial s (s+1) ... (s+2j-2) times N^{-s-2j+1}
      Real rising = s;
      for (std::size_t j = 0; j < b.size(); ++j) {
        tail += b[j] * rising * std::pow(N, -s - static_cast<Real>(2 * j + 1));
        rising *= (s + static_cast<Real>(2 * j + 1)) * (s + static_cast<Real>(2 * j + 2));
      }
      out[i] = sum + tail;
    }
    return out;
  }();
  return table;
}

// ln Gamma(1 + z) for |z| <= 1/2.
Real ln_gamma_1p(Real z) {
  const auto& zeta = zeta_minus_one();
  Real series = 0.0L;
  for (int k = kZetaTerms + 1; k >= 2; --k) {
    const Real sign = (k % 2 == 0) ? 1.0L : -1.0L;
    series = series * z + sign * zeta[k - 2] / static_cast<Real>(k);
  }
  return -std::log1p(z) + z * (1.0L - kEulerGamma) + series * z * z;
}

Real ln_gamma_impl(Real a) {
  if (!(a > 0.0L) || !std::isfinite(a)) {
    throw DomainError("ln_gamma: argument must be positive and finite");
  }
  if (a >= 13.0L) {
    return (a - 0.5L) * std::log(a) - a + kHalfLog2Pi + stirling_correction(a);
  }
  if (a < 0.5L) return ln_gamma_1p(a) - std::log(a);
  if (a <= 1.5L) return ln_gamma_1p(a - 1.0L);
  if (a <= 2.5L) return std::log1p(a - 2.0L) + ln_gamma_1p(a - 2.0L);
  // Shift down into (1.5, 2.5].
  Real product = 1.0L;
  Real shifted = a;
  while (shifted > 2.5L) {
    shifted -= 1.0L;
    product *= shifted;
  }
  return std::log1p(shifted - 2.0L) + ln_gamma_1p(shifted - 2.0L) + std::log(product);
}

void check_gamma_args(Real a, Real x, const char* who) {
  if (!(a >= static_cast<Real>(kMinShape) && a <= static_cast<Real>(kMaxShape))) {
    throw DomainError(std::string(who) + ": shape outside [1e-6, 1e7]");
  }
  if (!(x >= 0.0L) || !std::isfinite(x)) {
    throw DomainError(std::string(who) + ": x must be finite and nonnegative");
  }
}

}  // namespace

Probability::Probability(double v) {
  if (!(v >= -kSlack && v <= 1.0 + kSlack)) {
    throw DomainError("probability out of [0,1]: " + std::to_string(v));
  }
  value_ = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

double ln_gamma(double a) { return static_cast<double>(ln_gamma_impl(a)); }
long double ln_gamma(long double a) { return ln_gamma_impl(a); }

long double log1pmx(long double mu) {
  if (!(mu > -1.0L)) throw DomainError("log1pmx: argument must exceed -1");
  if (std::fabs(mu) >= 0.5L) return std::log1p(mu) - mu;
  // -mu^2/2 + mu^3/3 - ...
  Real term = mu;
  Real sum = 0.0L;
  for (int k = 2; k < 200; ++k) {
    term *= -mu;
    const Real add = term / static_cast<Real>(k);
    sum += add;
    if (std::fabs(add) <= std::numeric_limits<Real>::epsilon() * std::fabs(sum)) break;
  }
  return sum;
}

namespace detail {

long double log_gamma_prefactor(long double a, long double x) {
  if (x == 0.0L) return -std::numeric_limits<Real>::infinity();
  if (a < 10.0L) return a * std::log(x) - x - ln_gamma_impl(a + 1.0L);
  const Real mu = (x - a) / a;
  return a * log1pmx(mu) - 0.5L * std::log(2.0L * std::acos(-1.0L) * a) -
         stirling_correction(a);
}

long double log_lower_gamma_series(long double a, long double x) {
  if (x == 0.0L) return -std::numeric_limits<Real>::infinity();
  Real term = 1.0L;
  Real sum = 1.0L;
  Real denom = a;
  for (long n = 1; n <= kGammaIterationCap; ++n) {
    denom += 1.0L;
    term *= x / denom;
    sum += term;
    if (term <= sum * kGammaConvergenceTol) return log_gamma_prefactor(a, x) + std::log(sum);
  }
  throw ConvergenceError("incomplete gamma series: iteration cap reached");
}

long double lower_gamma_series(long double a, long double x) {
  return std::exp(log_lower_gamma_series(a, x));
}

long double log_upper_gamma_cf(long double a, long double x) {
  if (!(x > 0.0L)) throw DomainError("incomplete gamma continued fraction needs x > 0");
  Real b = x + 1.0L - a;
  Real c = 1.0L / kGammaTinyDenominator;
  Real d = 1.0L / b;
  Real h = d;
  for (long i = 1; i <= kGammaIterationCap; ++i) {
    const Real an = -static_cast<Real>(i) * (static_cast<Real>(i) - a);
    b += 2.0L;
    d = an * d + b;
    if (std::fabs(d) < kGammaTinyDenominator) d = kGammaTinyDenominator;
    c = b + an / c;
    if (std::fabs(c) < kGammaTinyDenominator) c = kGammaTinyDenominator;
    d = 1.0L / d;
    const Real del = d * c;
    h *= del;
    if (std::fabs(del - 1.0L) < kGammaConvergenceTol) {
      // x^a e^{-x} / Gamma(a) = a * x^a e^{-x} / Gamma(a+1)
      return log_gamma_prefactor(a, x) + std::log(a) + std::log(h);
    }
  }
  throw ConvergenceError("incomplete gamma continued fraction: iteration cap reached");
}

}  // namespace detail

GammaTails reg_gamma_tails(long double a, long double x) {
  check_gamma_args(a, x, "reg_gamma_tails");
  if (x < a + 1.0L) {
    const Real p = detail::lower_gamma_series(a, x);
    return {p, 1.0L - p};
  }
  const Real q = std::exp(detail::log_upper_gamma_cf(a, x));
  return {1.0L - q, q};
}

Probability reg_lower_gamma(double a, double x) {
  return Probability(static_cast<double>(reg_gamma_tails(a, x).lower));
}

double log_reg_lower_gamma(double a, double x) {
  check_gamma_args(a, x, "log_reg_lower_gamma");
  const Real la = a;
  const Real lx = x;
  if (lx < la + 1.0L) return static_cast<double>(detail::log_lower_gamma_series(la, lx));
  return static_cast<double>(std::log1p(-std::exp(detail::log_upper_gamma_cf(la, lx))));
}

double log_reg_upper_gamma(double a, double x) {
  check_gamma_args(a, x, "log_reg_upper_gamma");
  const Real la = a;
  const Real lx = x;
  if (lx < la + 1.0L) return static_cast<double>(std::log1p(-detail::lower_gamma_series(la, lx)));
  return static_cast<double>(detail::log_upper_gamma_cf(la, lx));
}

Probability std_normal_band(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw DomainError("std_normal_band: kappa must be positive and finite");
  }
  // erf(k / sqrt 2) = P(1/2, k^2 / 2)
  const Real half_sq = 0.5L * static_cast<Real>(kappa) * static_cast<Real>(kappa);
  return Probability(static_cast<double>(reg_gamma_tails(0.5L, half_sq).lower));
}

double std_normal_cdf(double x) {
  if (std::isnan(x)) throw DomainError("std_normal_cdf: NaN argument");
  if (x == 0.0) return 0.5;
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  const Real half_sq = 0.5L * static_cast<Real>(x) * static_cast<Real>(x);
  if (half_sq > static_cast<Real>(kMaxShape) * 100.0L) return x > 0 ? 1.0 : 0.0;
  const GammaTails tails = reg_gamma_tails(0.5L, half_sq);
  return static_cast<double>(x > 0 ? 0.5L + 0.5L * tails.lower : 0.5L * tails.upper);
}

double log_std_normal_cdf(double x) {
  if (std::isnan(x)) throw DomainError("log_std_normal_cdf: NaN argument");
  if (x >= 0.0) return std::log(std_normal_cdf(x));
  const Real half_sq = 0.5L * static_cast<Real>(x) * static_cast<Real>(x);
  if (half_sq < 1.5L) return std::log(std_normal_cdf(x));
  // Phi(x) = Q(1/2, x^2/2) / 2 for x < 0.
  return static_cast<double>(detail::log_upper_gamma_cf(0.5L, half_sq) - std::log(2.0L));
}

}  // namespace gammaext
