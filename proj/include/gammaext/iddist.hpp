#pragma once

// A small catalog of infinitely divisible laws with closed-form moments and
// one-standard-deviation band probabilities, and a grid scanner comparing
// those bands with the standard normal one. Scan results are evidence only:
// a clean scan proves nothing about the families in general.

#include <string>
#include <variant>
#include <vector>

#include "gammaext/parallel.hpp"
#include "gammaext/specfun.hpp"

namespace gammaext {

struct Poisson {
  double lambda;
};
/// Number of failures before the r-th success; success probability p.
struct NegativeBinomial {
  double r;
  double p;
};
struct InverseGaussian {
  double mu;
  double shape;
};
/// Poisson(rate) many Exp(mean jump_scale) jumps.
struct CompoundPoissonExp {
  double rate;
  double jump_scale;
};
struct GammaDist {
  double alpha;
  double beta = 1.0;
};
struct NormalBaseline {};

using DistributionSpec =
    std::variant<Poisson, NegativeBinomial, InverseGaussian, CompoundPoissonExp, GammaDist, NormalBaseline>;

/// Throws DomainError if a parameter is outside its variant's range.
void validate(const DistributionSpec& spec);

struct Moments {
  double mean;
  double variance;
};
Moments moments(const DistributionSpec& spec);

inline constexpr long double kSeriesTailTol = 1e-12L;
inline constexpr int kSeriesTermCap = 100'000;

/// The compound Poisson band as a series over the jump count n.
struct SeriesTrace {
  long double value;
  long double tail_bound;  // P(N > last n), the mass not summed
  int terms;
  bool monotone;           // every partial sum >= the previous one
  bool atom_included;      // the atom at 0 lies inside the band
};
/// Throws ConvergenceError if the tail does not drop below kSeriesTailTol
/// within kSeriesTermCap terms.
SeriesTrace compound_poisson_band_series(const CompoundPoissonExp& d);

/// P{|L - E L| <= sd(L)}, end points inclusive.
Probability band_prob(const DistributionSpec& spec);

enum class Family { poisson, negative_binomial, inverse_gaussian, compound_poisson_exp, gamma, normal };
const char* to_string(Family f);
/// Accepts the to_string names; throws DomainError otherwise.
Family parse_family(const std::string& name);
std::vector<Family> all_families();

/// Parameter names in grid order, e.g. {"r", "p"}.
std::vector<std::string> parameter_names(Family f);
DistributionSpec make_spec(Family f, const std::vector<double>& params);
std::string convention(Family f);

struct ParamAxis {
  double lo;
  double hi;
  int n;
  bool log_spaced;

  std::vector<double> points() const;
};

struct FamilyGrid {
  Family family;
  std::vector<ParamAxis> axes;  // one per parameter; empty for the normal baseline
};

/// 200 log points per scalar parameter, 50 x 50 for two-parameter families.
FamilyGrid default_grid(Family f);

inline constexpr double kViolationSlack = 1e-9;

struct GridPoint {
  std::vector<double> params;
  double band;
};

struct ScanReport {
  Family family;
  std::vector<std::string> parameter_names;
  std::vector<GridPoint> grid;        // every evaluated point, in grid order
  double threshold;
  double min_band;
  std::vector<double> argmin_params;
  std::vector<GridPoint> violations;  // band < threshold - kViolationSlack
};

/// Grid order: the last axis varies fastest.
ScanReport conjecture_scan(const FamilyGrid& grid, double threshold = std_normal_band(1.0).value(),
                           Execution exec = Execution::parallel);

}  // namespace gammaext
