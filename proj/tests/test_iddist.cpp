#include <doctest.h>

#include <boost/math/distributions/inverse_gaussian.hpp>
#include <boost/math/distributions/negative_binomial.hpp>
#include <boost/math/distributions/poisson.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "gammaext/errors.hpp"
#include "gammaext/gamma_prob.hpp"
#include "gammaext/iddist.hpp"

using namespace gammaext;

namespace {

constexpr double kNormalBand = 0.6826894921370859;

double prob(const DistributionSpec& s) { return band_prob(s).value(); }

// P{lo <= X <= hi} for an integer-valued law given its CDF.
template <class Dist>
double integer_band_oracle(const Dist& d, double mean, double sd) {
  const double lo = std::ceil(mean - sd);
  const double hi = std::floor(mean + sd);
  if (hi < std::max(lo, 0.0)) return 0.0;
  const double below = lo <= 0.0 ? 0.0 : boost::math::cdf(d, lo - 1.0);
  return boost::math::cdf(d, hi) - below;
}

// Atom e^{-rate} at 0 plus the integral of the jump-part density
// e^{-rate - x/s} sqrt(rate / (s x)) I_1(2 sqrt(rate x / s)).
double compound_poisson_oracle(double rate, double s) {
  const double mean = rate * s;
  const double sd = std::sqrt(2.0 * rate) * s;
  const double lo = std::max(0.0, mean - sd);
  const double hi = mean + sd;
  auto density = [&](double x) {
    if (x <= 0.0) return rate / s * std::exp(-rate);
    const double z = 2.0 * std::sqrt(rate * x / s);
    return std::exp(-rate - x / s) * std::sqrt(rate / (s * x)) * boost::math::cyl_bessel_i(1, z);
  };
  const double jumps = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(density, lo, hi, 15, 1e-14);
  const double atom = mean - sd <= 0.0 ? std::exp(-rate) : 0.0;
  return atom + jumps;
}

}  // namespace

TEST_CASE("moments examples") {
  auto check = [](const DistributionSpec& s, double mean, double var) {
    const Moments m = moments(s);
    CHECK(m.mean == doctest::Approx(mean).epsilon(1e-15));
    CHECK(m.variance == doctest::Approx(var).epsilon(1e-15));
  };
  check(Poisson{1.0}, 1.0, 1.0);
  check(GammaDist{2.0, 3.0}, 6.0, 18.0);
  check(CompoundPoissonExp{2.0, 1.0}, 2.0, 4.0);
  check(NegativeBinomial{3.0, 0.25}, 9.0, 36.0);
  check(InverseGaussian{2.0, 4.0}, 2.0, 2.0);
  check(NormalBaseline{}, 0.0, 1.0);
}

TEST_CASE("band_prob examples") {
  CHECK(prob(Poisson{1.0}) == doctest::Approx(2.5 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(std::fabs(prob(Poisson{1.0}) - 0.9196986) <= 1e-7);
  CHECK(prob(GammaDist{1.0, 1.0}) == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-14));
  CHECK(std::fabs(prob(NormalBaseline{}) - 0.6826895) <= 1e-7);
  CHECK(prob(NormalBaseline{}) == std_normal_band(1.0).value());
}

TEST_CASE("Gamma band ignores the scale and equals t") {
  for (double a : {1e-3, 0.5, 1.0, 7.0, 300.0, 1e5}) {
    for (double beta : {0.01, 1.0, 42.0}) {
      CHECK(std::fabs(prob(GammaDist{a, beta}) - t(a).value()) <= 1e-12);
    }
  }
}

TEST_CASE("Poisson band agrees with the boost Poisson CDF") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(std::log(0.01), std::log(1e3));
  for (int i = 0; i < 500; ++i) {
    const double lambda = std::exp(u(rng));
    const double ref = integer_band_oracle(boost::math::poisson_distribution<double>(lambda), lambda, std::sqrt(lambda));
    INFO("lambda = " << lambda);
    CHECK(std::fabs(prob(Poisson{lambda}) - ref) <= 1e-11);
  }
}

TEST_CASE("negative binomial band agrees with the boost CDF") {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> ur(std::log(0.01), std::log(100.0));
  std::uniform_real_distribution<double> up(0.01, 0.99);
  for (int i = 0; i < 500; ++i) {
    const double r = std::exp(ur(rng));
    const double p = up(rng);
    const Moments m = moments(NegativeBinomial{r, p});
    const double ref = integer_band_oracle(boost::math::negative_binomial_distribution<double>(r, p), m.mean,
                                           std::sqrt(m.variance));
    INFO("r = " << r << ", p = " << p);
    CHECK(std::fabs(prob(NegativeBinomial{r, p}) - ref) <= 1e-10);
  }
}

TEST_CASE("inverse Gaussian band agrees with the boost CDF and with density quadrature") {
  std::mt19937_64 rng(63);
  std::uniform_real_distribution<double> u(std::log(0.01), std::log(100.0));
  int cdf_compared = 0;
  for (int i = 0; i < 500; ++i) {
    const double mu = std::exp(u(rng));
    const double shape = std::exp(u(rng));
    const boost::math::inverse_gaussian_distribution<double> d(mu, shape);
    const double sd = std::sqrt(mu * mu * mu / shape);
    const double lo = std::max(0.0, mu - sd);
    const double got = prob(InverseGaussian{mu, shape});
    INFO("mu = " << mu << ", shape = " << shape);
    // boost forms exp(2 shape / mu) directly, which overflows for shape / mu > ~354
    const double ref = boost::math::cdf(d, mu + sd) - (lo > 0.0 ? boost::math::cdf(d, lo) : 0.0);
    if (std::isfinite(ref)) {
      ++cdf_compared;
      CHECK(std::fabs(got - ref) <= 1e-10);
    }
    // in u = ln x, where the density is smooth even for very skewed laws; below
    // shape / 1000 the density carries less than e^{-400}
    auto pdf = [&](double u) { return boost::math::pdf(d, std::exp(u)) * std::exp(u); };
    const double u_lo = lo > 0.0 ? std::log(lo) : std::log(shape * 1e-3);
    const double quad =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(pdf, u_lo, std::log(mu + sd), 15, 1e-14);
    CHECK(std::fabs(got - quad) <= 1e-10);
  }
  CHECK(cdf_compared > 250);
}

TEST_CASE("compound Poisson band agrees with atom plus Bessel-density quadrature") {
  for (double rate : {0.05, 0.5, 1.0, 2.0, 2.5, 5.0, 20.0}) {
    for (double s : {0.1, 1.0, 10.0}) {
      INFO("rate = " << rate << ", scale = " << s);
      CHECK(std::fabs(prob(CompoundPoissonExp{rate, s}) - compound_poisson_oracle(rate, s)) <= 1e-9);
    }
  }
}

TEST_CASE("compound Poisson series: tail bound, monotone partial sums, atom rule") {
  for (double rate : {0.01, 0.3, 1.9, 2.0, 2.1, 10.0, 100.0}) {
    const SeriesTrace tr = compound_poisson_band_series({rate, 1.0});
    CHECK(tr.tail_bound < kSeriesTailTol);
    CHECK(tr.monotone);
    CHECK(tr.terms <= kSeriesTermCap);
    CHECK(tr.atom_included == (rate <= 2.0));
    CHECK(tr.value >= 0.0L);
    CHECK(tr.value <= 1.0L);
  }
}

TEST_CASE("Poisson band endpoints are inclusive") {
  // lambda = 4: sd 2, band [2, 6] with both ends on integers
  const double lambda = 4.0;
  double ref = 0.0;
  for (int k = 2; k <= 6; ++k) ref += std::exp(k * std::log(lambda) - lambda - std::lgamma(k + 1.0));
  CHECK(prob(Poisson{lambda}) == doctest::Approx(ref).epsilon(1e-13));
  // nudging lambda changes the integer set only when an endpoint crosses an integer
  CHECK(prob(Poisson{lambda}) != doctest::Approx(prob(Poisson{lambda * (1.0 - 1e-9)})).epsilon(1e-6));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(Poisson{0.0}), DomainError);
  CHECK_THROWS_AS(validate(NegativeBinomial{1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(validate(NegativeBinomial{-1.0, 0.5}), DomainError);
  CHECK_THROWS_AS(validate(InverseGaussian{1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(validate(CompoundPoissonExp{1.0, NAN}), DomainError);
  CHECK_THROWS_AS(validate(GammaDist{-1.0}), DomainError);
  CHECK_NOTHROW(validate(NormalBaseline{}));
  CHECK_THROWS_AS(band_prob(Poisson{-2.0}), DomainError);
}

TEST_CASE("family names round trip") {
  for (Family f : all_families()) {
    CHECK(parse_family(to_string(f)) == f);
    CHECK(!convention(f).empty());
    CHECK(parameter_names(f).size() == default_grid(f).axes.size());
  }
  CHECK(all_families().size() == 6);
  CHECK_THROWS_AS(parse_family("cauchy"), DomainError);
}

TEST_CASE("Gamma scan has no violations") {
  const ScanReport r = conjecture_scan(default_grid(Family::gamma));
  CHECK(r.grid.size() == 200);
  CHECK(r.violations.empty());
  CHECK(r.min_band > kNormalBand);
  CHECK(r.threshold == std_normal_band(1.0).value());
}

TEST_CASE("normal baseline scan sits on the threshold") {
  const ScanReport r = conjecture_scan(default_grid(Family::normal));
  CHECK(r.grid.size() == 1);
  CHECK(r.min_band == r.threshold);
  CHECK(r.violations.empty());
}

TEST_CASE("Poisson scan report is self-consistent") {
  const ScanReport r = conjecture_scan(default_grid(Family::poisson));
  REQUIRE(r.grid.size() == 200);
  const auto lowest = std::min_element(r.grid.begin(), r.grid.end(),
                                       [](const GridPoint& a, const GridPoint& b) { return a.band < b.band; });
  CHECK(r.min_band == lowest->band);
  CHECK(r.argmin_params == lowest->params);
  for (const auto& v : r.violations) {
    CHECK(v.band < r.threshold - kViolationSlack);
    CHECK(std::any_of(r.grid.begin(), r.grid.end(), [&](const GridPoint& g) { return g.params == v.params; }));
  }
  std::size_t below = 0;
  for (const auto& g : r.grid) below += g.band < r.threshold - kViolationSlack;
  CHECK(below == r.violations.size());
  // each recorded band is the direct evaluation at its point
  for (std::size_t i = 0; i < r.grid.size(); i += 17) {
    CHECK(r.grid[i].band == prob(Poisson{r.grid[i].params[0]}));
  }
}

TEST_CASE("grid order: the last axis varies fastest") {
  FamilyGrid g{Family::negative_binomial, {{1.0, 2.0, 2, false}, {0.2, 0.4, 3, false}}};
  const ScanReport r = conjecture_scan(g, kNormalBand, Execution::serial);
  REQUIRE(r.grid.size() == 6);
  CHECK(r.grid[0].params == std::vector<double>{1.0, 0.2});
  CHECK(r.grid[1].params[0] == 1.0);
  CHECK(r.grid[1].params[1] == doctest::Approx(0.3));
  CHECK(r.grid[3].params == std::vector<double>{2.0, 0.2});
  CHECK(ParamAxis{1e-2, 1e2, 5, true}.points()[2] == doctest::Approx(1.0).epsilon(1e-14));
}
