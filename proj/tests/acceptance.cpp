// One PASS/FAIL line per acceptance criterion, with its wall time against the
// budget. Exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gammaext/certificates.hpp"
#include "gammaext/gamma_prob.hpp"
#include "gammaext/iddist.hpp"
#include "gammaext/optimize.hpp"
#include "gammaext/specfun.hpp"

using namespace gammaext;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::string str(double x, int digits = 10) {
  std::ostringstream s;
  s.precision(digits);
  s << x;
  return s.str();
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

Outcome minimum_table() {
  struct Row {
    double kappa, argmin, value;
  };
  const Row rows[] = {{1.01, 33.4871, 0.545885}, {1.1, 3.47146, 0.64021},  {1.2, 1.78959, 0.691283},
                      {1.5, 0.757559, 0.774739}, {2.0, 0.396184, 0.841243}, {3.0, 0.205464, 0.899108},
                      {4.0, 0.13917, 0.925864}};
  Outcome o;
  double worst_arg = 0.0;
  double worst_val = 0.0;
  for (const Row& row : rows) {
    const OptimizationResult r = min_h(Kappa(row.kappa));
    const double rel = std::fabs(r.argmin / row.argmin - 1.0);
    const double abs = std::fabs(r.min_value - row.value);
    worst_arg = std::max(worst_arg, rel);
    worst_val = std::max(worst_val, abs);
    o.require(r.converged, "kappa " + str(row.kappa) + " did not converge");
    o.require(rel <= 1e-3, "kappa " + str(row.kappa) + " argmin " + str(r.argmin));
    o.require(abs <= 1e-4, "kappa " + str(row.kappa) + " min " + str(r.min_value));
  }
  if (o.ok) o.detail = "max argmin rel err " + str(worst_arg, 3) + ", max value err " + str(worst_val, 3);
  return o;
}

Outcome counterexamples() {
  auto gamma = [](double a, double k) { return band(GammaParams(a, 1.0), Kappa(k)).value(); };
  struct Row {
    const char* label;
    double computed, printed;
  };
  const Row rows[] = {{"Gamma(1) k=0.5", gamma(1.0, 0.5), 0.3834005},
                      {"normal k=0.5", std_normal_band(0.5).value(), 0.3829249},
                      {"Gamma(2) k=0.5", gamma(2.0, 0.5), 0.3819693},
                      {"Gamma(1) k=2", gamma(1.0, 2.0), 0.9502129},
                      {"normal k=2", std_normal_band(2.0).value(), 0.9544997},
                      {"Gamma(10) k=2", gamma(10.0, 2.0), 0.9585112}};
  Outcome o;
  double worst = 0.0;
  for (const Row& r : rows) {
    worst = std::max(worst, std::fabs(r.computed - r.printed));
    o.require(std::fabs(r.computed - r.printed) <= 1e-6, std::string(r.label) + " = " + str(r.computed));
  }
  if (o.ok) o.detail = "max abs err " + str(worst, 3);
  return o;
}

Outcome certificates() {
  Outcome o;
  const auto outcomes = run_verifications(all_verifications(), CompareMode::spot);
  std::vector<CertificateReport> reports;
  for (const auto& v : outcomes) {
    o.require(v.passed(), std::string(to_string(v.which)) + ": " + v.failure.value_or(""));
    for (const auto& c : v.certificates) reports.push_back(c);
  }
  auto find = [&](const std::string& name) -> const CertificateReport* {
    for (const auto& r : reports) {
      if (r.name == name) return &r;
    }
    return nullptr;
  };
  struct Expect {
    const char* name;
    const char* constant;
    SignVerdict verdict;
  };
  const Expect expects[] = {{"G+", nullptr, SignVerdict::all_negative},
                            {"I+", nullptr, SignVerdict::all_negative},
                            {"V+", "23565171557938261664962395", SignVerdict::all_positive},
                            {"G-", "128409", SignVerdict::all_positive},
                            {"I-", nullptr, SignVerdict::all_positive},
                            {"V-", "1058023271132626023", SignVerdict::all_positive},
                            {"(1+q^2)^6 I", "240", SignVerdict::all_positive}};
  for (const Expect& e : expects) {
    const CertificateReport* r = find(e.name);
    o.require(r != nullptr, std::string("missing report ") + e.name);
    if (!r) continue;
    o.require(r->sign_verdict == e.verdict, std::string(e.name) + " verdict " + to_string(r->sign_verdict));
    o.require(r->spot_checks_pass(), std::string(e.name) + " spot check mismatch");
    if (e.constant) {
      o.require(!r->coefficients.empty() && r->coefficients.front() == BigRational(mpz_class(e.constant)),
                std::string(e.name) + " constant term");
    }
  }
  if (o.ok) o.detail = std::to_string(outcomes.size()) + " verifications, exact constants matched";
  return o;
}

Outcome properties() {
  Outcome o;
  const auto grid = log_grid(1e-4, 1e6, 1000);
  for (double a : grid) {
    o.require(h(Kappa(1.0), a).value() > 0.5, "h(1, " + str(a) + ") <= 1/2");
    o.require(t(a).value() > 0.6826895, "t(" + str(a) + ") <= 0.6826895");
    o.require(t(a + 1.0) < t(a), "t not decreasing at " + str(a));
    for (double k : {0.2, 0.5, 0.8, 1.0}) {
      o.require(log_h(Kappa(k), a + 1.0) < log_h(Kappa(k), a), "h_" + str(k) + " not decreasing at " + str(a));
    }
  }
  for (double k : {0.2, 0.5, 0.8, 1.0, 1.5, 4.0}) {
    o.require(h(Kappa(k), 1e-6).value() > 0.9999, "h(" + str(k) + ", 1e-6) <= 0.9999");
  }
  const double far = h(Kappa(1.0), 1e7).value();
  o.require(far > 0.5 && far < 0.501, "h(1, 1e7) = " + str(far));
  const double t6 = t(1e6).value();
  o.require(std::fabs(t6 - 0.6826895) <= 5e-4, "t(1e6) = " + str(t6));
  if (o.ok) o.detail = "1000-point grids; h(1,1e7) = " + str(far, 8) + ", t(1e6) = " + str(t6, 8);
  return o;
}

Outcome specfun_oracles() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ux(0.0, 40.0);
  double worst = 0.0;
  for (int n = 1; n <= 10; ++n) {
    for (int i = 0; i < 1000; ++i) {
      const double x = ux(rng);
      long double term = 1.0L, sum = 0.0L;
      for (int k = 0; k < n; ++k) {
        sum += term;
        term *= x / (k + 1);
      }
      const double ref = static_cast<double>(1.0L - std::exp(-static_cast<long double>(x)) * sum);
      worst = std::max(worst, std::fabs(reg_lower_gamma(n, x).value() - ref));
    }
  }
  o.require(worst <= 1e-12, "closed-form error " + str(worst, 3));

  std::uniform_real_distribution<double> la(std::log(1e-3), std::log(1e4));
  double worst_rec = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double a = std::exp(la(rng));
    const double x = a * std::exp(la(rng) / 4.0);
    const long double step = std::exp(static_cast<long double>(a) * std::log(static_cast<long double>(x)) - x -
                                      ln_gamma(a + 1.0L));
    const double lhs = reg_lower_gamma(a + 1.0, x).value();
    const double rhs = static_cast<double>(reg_lower_gamma(a, x).value() - step);
    worst_rec = std::max(worst_rec, std::fabs(lhs - rhs));
  }
  o.require(worst_rec <= 1e-11, "recurrence error " + str(worst_rec, 3));

  // series P and continued-fraction Q at x = (a+1)(1 +- 1%), a log-random over the supported range
  std::uniform_real_distribution<double> lshape(std::log(1e-6), std::log(1e7));
  double worst_comp = 0.0;
  double first_bad_a = INFINITY;
  for (int i = 0; i < 10000; ++i) {
    const long double a = std::exp(lshape(rng));
    const long double x = (a + 1.0L) * (i % 2 ? 1.01L : 0.99L);
    const long double p = detail::lower_gamma_series(a, x);
    const long double q = std::exp(detail::log_upper_gamma_cf(a, x));
    double gap = static_cast<double>(std::fabs(p + q - 1.0L));
    if (std::isnan(gap)) gap = INFINITY;
    worst_comp = std::max(worst_comp, gap);
    if (gap > 1e-11) first_bad_a = std::min(first_bad_a, static_cast<double>(a));
  }
  o.require(worst_comp <= 1e-11, "complementarity gap " + str(worst_comp, 3) + " (exceeds 1e-11 from a = " +
                                     str(first_bad_a, 4) + ", continued fraction below the crossover)");
  if (o.ok) {
    o.detail = "closed forms " + str(worst, 3) + ", recurrence " + str(worst_rec, 3) + ", complement " +
               str(worst_comp, 3);
  }
  return o;
}

Outcome conjecture_scans() {
  Outcome o;
  std::ostringstream summary;
  for (Family f : all_families()) {
    const ScanReport r = conjecture_scan(default_grid(f));
    summary << to_string(f) << " min " << str(r.min_band, 7) << " (" << r.violations.size() << " below); ";
    o.require(!r.grid.empty(), std::string(to_string(f)) + " empty scan");
    o.require(std::isfinite(r.min_band), std::string(to_string(f)) + " minimum not finite");
    std::size_t below = 0;
    for (const auto& g : r.grid) below += g.band < r.threshold - kViolationSlack;
    o.require(below == r.violations.size(), std::string(to_string(f)) + " violation count inconsistent");
    if (f == Family::gamma) {
      o.require(r.violations.empty(), "gamma scan has violations");
      o.require(r.min_band > 0.6826895, "gamma min_band " + str(r.min_band));
    }
    if (f == Family::normal) {
      o.require(r.min_band == r.threshold && r.violations.empty(), "normal baseline is not the threshold");
    }
  }
  o.detail = summary.str() + (o.ok ? "" : o.detail);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {{1, "minimum table", 5.0, minimum_table},
                                {2, "counterexample probabilities", 1.0, counterexamples},
                                {3, "certificate suite", 60.0, certificates},
                                {4, "property grids", 20.0, properties},
                                {5, "special-function oracles", 5.0, specfun_oracles},
                                {6, "family scans recorded", 30.0, conjecture_scans}};
  bool all_ok = true;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = seconds < c.budget_s;
    const bool pass = o.ok && in_time;
    all_ok = all_ok && pass;
    std::printf("%s criterion %d (%s): %.2f s of %.0f s; %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.budget_s, o.detail.c_str(), in_time ? "" : " [over budget]");
  }
  return all_ok ? 0 : 1;
}
