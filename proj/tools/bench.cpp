// Serial reference vs OpenMP timing for the grid kernels, with a check that
// both paths produce identical output.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "gammaext/certificates.hpp"
#include "gammaext/iddist.hpp"
#include "gammaext/optimize.hpp"

using namespace gammaext;

namespace {

double seconds(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool same_rows(const std::vector<ScanRow>& a, const std::vector<ScanRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].alpha != b[i].alpha || a[i].value != b[i].value) return false;
  }
  return true;
}

bool same_grid(const ScanReport& a, const ScanReport& b) {
  if (a.grid.size() != b.grid.size()) return false;
  for (std::size_t i = 0; i < a.grid.size(); ++i) {
    if (a.grid[i].params != b.grid[i].params || a.grid[i].band != b.grid[i].band) return false;
  }
  return true;
}

void line(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-28s serial %8.3f s  parallel %8.3f s  speedup %5.2f  identical %s\n", name, serial,
              parallel, serial / parallel, identical ? "yes" : "NO");
}

}  // namespace

int main() {
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
  bool ok = true;

  std::vector<ScanRow> s1, p1;
  const double ts = seconds([&] { s1 = scan(Kappa(1.01), 1e-4, 1e6, 4000, Execution::serial); });
  const double tp = seconds([&] { p1 = scan(Kappa(1.01), 1e-4, 1e6, 4000, Execution::parallel); });
  ok = ok && same_rows(s1, p1);
  line("scan h_1.01, 4000 points", ts, tp, same_rows(s1, p1));

  for (Family f : {Family::poisson, Family::compound_poisson_exp}) {
    ScanReport s2, p2;
    const auto grid = default_grid(f);
    const double cs = seconds([&] { s2 = conjecture_scan(grid, std_normal_band(1.0).value(), Execution::serial); });
    const double cp = seconds([&] { p2 = conjecture_scan(grid, std_normal_band(1.0).value(), Execution::parallel); });
    ok = ok && same_grid(s2, p2);
    line((std::string("conjecture ") + to_string(f)).c_str(), cs, cp, same_grid(s2, p2));
  }

  std::vector<VerificationOutcome> s3, p3;
  const double vs = seconds([&] { s3 = run_verifications(all_verifications(), CompareMode::spot, Execution::serial); });
  const double vp = seconds([&] { p3 = run_verifications(all_verifications(), CompareMode::spot, Execution::parallel); });
  bool same = s3.size() == p3.size();
  for (std::size_t i = 0; same && i < s3.size(); ++i) {
    same = s3[i].passed() == p3[i].passed() && s3[i].certificates.size() == p3[i].certificates.size();
    for (std::size_t k = 0; same && k < s3[i].certificates.size(); ++k) {
      same = s3[i].certificates[k].coefficients == p3[i].certificates[k].coefficients;
    }
  }
  ok = ok && same;
  line("certificate suite", vs, vp, same);
  return ok ? 0 : 1;
}
