#include "gammaext/iddist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gammaext/errors.hpp"
#include "gammaext/gamma_prob.hpp"

namespace gammaext {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

struct Interval {
  long double lo;
  long double hi;
};

Interval one_sd_band(const DistributionSpec& spec) {
  const Moments m = moments(spec);
  const long double mean = m.mean;
  const long double sd = std::sqrt(static_cast<long double>(m.variance));
  return {mean - sd, mean + sd};
}

// Sum of exp(log_pmf(k)) over the integers of [lo, hi].
template <class LogPmf>
long double integer_band_sum(Interval band, LogPmf log_pmf) {
  const long double first = std::max(0.0L, std::ceil(band.lo));
  const long double last = std::floor(band.hi);
  long double sum = 0.0L;
  for (long double k = first; k <= last; k += 1.0L) sum += std::exp(log_pmf(k));
  return sum;
}

// P(X <= x) for the inverse Gaussian law; the second term is formed in logs
// because exp(2 shape / mu) overflows long before the product does.
long double inverse_gaussian_cdf(const InverseGaussian& d, long double x) {
  if (x <= 0.0L) return 0.0L;
  const long double root = std::sqrt(d.shape / x);
  const double first = std_normal_cdf(static_cast<double>(root * (x / d.mu - 1.0L)));
  const double log_second = 2.0 * d.shape / d.mu +
                            log_std_normal_cdf(static_cast<double>(-root * (x / d.mu + 1.0L)));
  return static_cast<long double>(first) + std::exp(static_cast<long double>(log_second));
}

// Accurate P(a, hi) - P(a, lo) for lo <= hi, subtracting whichever tails are small.
long double gamma_increment(long double a, long double lo, long double hi) {
  const GammaTails upper = reg_gamma_tails(a, hi);
  if (lo <= 0.0L) return upper.lower;
  const GammaTails lower = reg_gamma_tails(a, lo);
  if (hi < a) return upper.lower - lower.lower;
  return lower.upper - upper.upper;
}

}  // namespace

void validate(const DistributionSpec& spec) {
  std::visit(Overloaded{[](const Poisson& d) { require(positive(d.lambda), "Poisson: lambda must be > 0"); },
                        [](const NegativeBinomial& d) {
                          require(positive(d.r), "NegativeBinomial: r must be > 0");
                          require(d.p > 0.0 && d.p < 1.0, "NegativeBinomial: p must lie in (0, 1)");
                        },
                        [](const InverseGaussian& d) {
                          require(positive(d.mu) && positive(d.shape),
                                  "InverseGaussian: mu and shape must be > 0");
                        },
                        [](const CompoundPoissonExp& d) {
                          require(positive(d.rate) && positive(d.jump_scale),
                                  "CompoundPoissonExp: rate and jump_scale must be > 0");
                        },
                        [](const GammaDist& d) {
                          require(positive(d.alpha) && positive(d.beta), "Gamma: alpha and beta must be > 0");
                        },
                        [](const NormalBaseline&) {}},
             spec);
}

Moments moments(const DistributionSpec& spec) {
  validate(spec);
  return std::visit(
      Overloaded{[](const Poisson& d) { return Moments{d.lambda, d.lambda}; },
                 [](const NegativeBinomial& d) {
                   const double q = 1.0 - d.p;
                   return Moments{d.r * q / d.p, d.r * q / (d.p * d.p)};
                 },
                 [](const InverseGaussian& d) { return Moments{d.mu, d.mu * d.mu * d.mu / d.shape}; },
                 [](const CompoundPoissonExp& d) {
                   return Moments{d.rate * d.jump_scale, 2.0 * d.rate * d.jump_scale * d.jump_scale};
                 },
                 [](const GammaDist& d) { return Moments{d.alpha * d.beta, d.alpha * d.beta * d.beta}; },
                 [](const NormalBaseline&) { return Moments{0.0, 1.0}; }},
      spec);
}

SeriesTrace compound_poisson_band_series(const CompoundPoissonExp& d) {
  validate(d);
  const Interval band = one_sd_band(d);
  const long double lambda = d.rate;
  const long double theta = d.jump_scale;
  const long double lo = std::max(0.0L, band.lo) / theta;
  const long double hi = band.hi / theta;

  SeriesTrace trace{0.0L, 1.0L, 0, true, band.lo <= 0.0L};
  if (trace.atom_included) trace.value = std::exp(-lambda);
  const long double log_lambda = std::log(lambda);
  for (int n = 1; n <= kSeriesTermCap; ++n) {
    const long double nn = n;
    const long double log_weight = nn * log_lambda - lambda - ln_gamma(nn + 1.0L);
    const long double term = std::exp(log_weight) * gamma_increment(nn, lo, hi);
    const long double next = trace.value + term;
    if (next < trace.value) trace.monotone = false;
    trace.value = next;
    trace.terms = n;
    // P(N > n) = P(n + 1, lambda)
    trace.tail_bound = reg_gamma_tails(nn + 1.0L, lambda).lower;
    if (trace.tail_bound < kSeriesTailTol) return trace;
  }
  throw ConvergenceError("compound Poisson series: tail above 1e-12 after the term cap");
}

Probability band_prob(const DistributionSpec& spec) {
  validate(spec);
  return std::visit(
      Overloaded{
          [&](const Poisson& d) {
            const long double lambda = d.lambda;
            const long double log_lambda = std::log(lambda);
            return Probability(static_cast<double>(integer_band_sum(one_sd_band(spec), [&](long double k) {
              return k * log_lambda - lambda - ln_gamma(k + 1.0L);
            })));
          },
          [&](const NegativeBinomial& d) {
            const long double r = d.r;
            const long double log_p = std::log(static_cast<long double>(d.p));
            const long double log_q = std::log1p(-static_cast<long double>(d.p));
            const long double base = r * log_p - ln_gamma(r);
            return Probability(static_cast<double>(integer_band_sum(one_sd_band(spec), [&](long double k) {
              return base + ln_gamma(k + r) - ln_gamma(k + 1.0L) + k * log_q;
            })));
          },
          [&](const InverseGaussian& d) {
            const Interval band = one_sd_band(spec);
            return Probability(
                static_cast<double>(inverse_gaussian_cdf(d, band.hi) - inverse_gaussian_cdf(d, band.lo)));
          },
          [](const CompoundPoissonExp& d) {
            return Probability(static_cast<double>(compound_poisson_band_series(d).value));
          },
          [](const GammaDist& d) { return band(GammaParams(d.alpha, d.beta), Kappa(1.0)); },
          [](const NormalBaseline&) { return std_normal_band(1.0); }},
      spec);
}

const char* to_string(Family f) {
  switch (f) {
    case Family::poisson: return "poisson";
    case Family::negative_binomial: return "negbinomial";
    case Family::inverse_gaussian: return "invgaussian";
    case Family::compound_poisson_exp: return "compoundpoisson";
    case Family::gamma: return "gamma";
    case Family::normal: return "normal";
  }
  return "?";
}

std::vector<Family> all_families() {
  return {Family::poisson, Family::negative_binomial, Family::inverse_gaussian,
          Family::compound_poisson_exp, Family::gamma, Family::normal};
}

Family parse_family(const std::string& name) {
  for (Family f : all_families()) {
    if (name == to_string(f)) return f;
  }
  throw DomainError("unknown family: " + name);
}

std::vector<std::string> parameter_names(Family f) {
  switch (f) {
    case Family::poisson: return {"lambda"};
    case Family::negative_binomial: return {"r", "p"};
    case Family::inverse_gaussian: return {"mu", "shape"};
    case Family::compound_poisson_exp: return {"rate", "jump_scale"};
    case Family::gamma: return {"alpha"};
    case Family::normal: return {};
  }
  return {};
}

DistributionSpec make_spec(Family f, const std::vector<double>& p) {
  if (p.size() != parameter_names(f).size()) {
    throw DomainError(std::string("wrong number of parameters for ") + to_string(f));
  }
  switch (f) {
    case Family::poisson: return Poisson{p[0]};
    case Family::negative_binomial: return NegativeBinomial{p[0], p[1]};
    case Family::inverse_gaussian: return InverseGaussian{p[0], p[1]};
    case Family::compound_poisson_exp: return CompoundPoissonExp{p[0], p[1]};
    case Family::gamma: return GammaDist{p[0], 1.0};
    case Family::normal: return NormalBaseline{};
  }
  throw DomainError("unknown family");
}

std::string convention(Family f) {
  switch (f) {
    case Family::poisson: return "pmf summed over integers k with |k - lambda| <= sqrt(lambda)";
    case Family::negative_binomial:
      return "X = number of failures before the r-th success, success probability p; pmf summed over the integer band";
    case Family::inverse_gaussian: return "closed-form CDF through the standard normal CDF";
    case Family::compound_poisson_exp:
      return "Poisson(rate) jumps of mean jump_scale; atom at 0 counted iff 0 >= mean - sd; series cut at tail < 1e-12";
    case Family::gamma: return "shape alpha, scale 1 (the band does not depend on the scale)";
    case Family::normal: return "standard normal, equal to the threshold";
  }
  return "";
}

std::vector<double> ParamAxis::points() const {
  if (n < 1 || !(lo <= hi) || (log_spaced && !(lo > 0.0))) throw DomainError("invalid parameter axis");
  if (n == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / (n - 1);
    out[i] = log_spaced ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))) : lo + f * (hi - lo);
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

FamilyGrid default_grid(Family f) {
  switch (f) {
    case Family::poisson: return {f, {{0.01, 1e3, 200, true}}};
    case Family::negative_binomial: return {f, {{0.01, 100.0, 50, true}, {0.01, 0.99, 50, false}}};
    case Family::inverse_gaussian: return {f, {{0.01, 100.0, 50, true}, {0.01, 100.0, 50, true}}};
    case Family::compound_poisson_exp: return {f, {{0.01, 100.0, 50, true}, {0.1, 10.0, 50, true}}};
    case Family::gamma: return {f, {{1e-3, 1e5, 200, true}}};
    case Family::normal: return {f, {}};
  }
  throw DomainError("unknown family");
}

ScanReport conjecture_scan(const FamilyGrid& grid, double threshold, Execution exec) {
  const auto names = parameter_names(grid.family);
  if (grid.axes.size() != names.size()) throw DomainError("grid axes do not match the family");

  std::vector<std::vector<double>> axes;
  std::size_t total = 1;
  for (const auto& axis : grid.axes) {
    axes.push_back(axis.points());
    total *= axes.back().size();
  }
  auto params_at = [&](std::size_t index) {
    std::vector<double> p(axes.size());
    for (std::size_t k = axes.size(); k-- > 0;) {
      p[k] = axes[k][index % axes[k].size()];
      index /= axes[k].size();
    }
    return p;
  };

  ScanReport report{grid.family, names, {}, threshold, std::numeric_limits<double>::infinity(), {}, {}};
  report.grid = map_indices(exec, total, [&](std::size_t i) {
    auto p = params_at(i);
    const double value = band_prob(make_spec(grid.family, p)).value();
    return GridPoint{std::move(p), value};
  });
  for (const auto& point : report.grid) {
    if (point.band < report.min_band) {
      report.min_band = point.band;
      report.argmin_params = point.params;
    }
    if (point.band < threshold - kViolationSlack) report.violations.push_back(point);
  }
  return report;
}

}  // namespace gammaext
