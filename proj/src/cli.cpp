#include "gammaext/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "gammaext/errors.hpp"
#include "gammaext/gamma_prob.hpp"
#include "gammaext/optimize.hpp"
#include "gammaext/report_io.hpp"

namespace gammaext::cli {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  require(colon != std::string::npos, "--range expects lo:hi, got '" + text + "'");
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo_text = text.substr(0, colon);
    const std::string hi_text = text.substr(colon + 1);
    const double lo = std::stod(lo_text, &used_lo);
    const double hi = std::stod(hi_text, &used_hi);
    require(used_lo == lo_text.size() && used_hi == hi_text.size(), "--range: trailing characters");
    require(positive(lo) && positive(hi) && lo < hi, "--range needs 0 < lo < hi");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--range expects two numbers lo:hi, got '" + text + "'");
  }
}

Verification parse_verification(const std::string& name) {
  for (Verification v : all_verifications()) {
    if (name == to_string(v)) return v;
  }
  throw UsageError("unknown certificate '" + name + "'");
}

// Writes to a file when a path is given, otherwise to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError("cannot open '" + path + "' for writing");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int run_eval(const Eval& c, std::ostream& out) {
  switch (c.function) {
    case EvalFunction::h:
      out << "h(kappa=" << format_g12(c.kappa) << ", alpha=" << format_g12(c.alpha)
          << ") = " << format_g12(h(Kappa(c.kappa), c.alpha).value()) << '\n';
      break;
    case EvalFunction::t:
      out << "t(alpha=" << format_g12(c.alpha) << ") = " << format_g12(t(c.alpha).value()) << '\n';
      break;
    case EvalFunction::band:
      out << "band(alpha=" << format_g12(c.alpha) << ", beta=" << format_g12(c.beta)
          << ", kappa=" << format_g12(c.kappa)
          << ") = " << format_g12(band(GammaParams(c.alpha, c.beta), Kappa(c.kappa)).value()) << '\n';
      break;
  }
  return kExitOk;
}

int run_minimize(const Minimize& c, std::ostream& out) {
  try {
    const OptimizationResult r = min_h(Kappa(c.kappa), c.tol);
    out << "kappa=" << format_g12(c.kappa) << " argmin=" << format_g12(r.argmin)
        << " min=" << format_g12(r.min_value) << " bracket=[" << format_g12(r.bracket.lo) << ", "
        << format_g12(r.bracket.hi) << "] evaluations=" << r.evaluations
        << " converged=" << (r.converged ? "yes" : "no") << '\n';
    return r.converged ? kExitOk : kExitCheckFailed;
  } catch (const NoInteriorMinimum& e) {
    const double alpha = e.boundary_x();
    out << "kappa=" << format_g12(c.kappa) << " no interior minimum on [" << format_g12(kScanAlphaLo)
        << ", " << format_g12(kScanAlphaHi) << "]: smallest value h(" << format_g12(alpha)
        << ") = " << format_g12(e.boundary_value()) << " at the "
        << (e.side() == NoInteriorMinimum::Side::upper ? "upper" : "lower") << " end\n";
    if (e.side() == NoInteriorMinimum::Side::upper) {
      const char* limit = c.kappa == 1.0 ? "1/2" : (c.kappa < 1.0 ? "0" : "unknown");
      out << "infimum approached as alpha -> infinity (limit " << limit << "), not attained\n";
    }
    return kExitOk;
  }
}

int run_scan(const Scan& c, std::ostream& out) {
  const auto rows = scan(Kappa(c.kappa), c.lo, c.hi, c.n);
  Sink sink(c.out, out);
  write_scan_csv(sink.get(), rows);
  return kExitOk;
}

int run_verify(const Verify& c, std::ostream& out) {
  const auto outcomes =
      run_verifications(c.selection, c.full_compare ? CompareMode::full : CompareMode::spot);
  bool all_passed = true;
  std::vector<Record> records;
  for (const auto& o : outcomes) {
    print_outcome(out, o, c.show_coefficients);
    all_passed = all_passed && o.passed();
    for (auto& r : records_for(o)) records.push_back(std::move(r));
  }
  out << '\n';
  for (const auto& r : records) out << format_record(r) << '\n';
  if (!c.out.empty()) {
    Sink sink(c.out, out);
    for (const auto& r : records) sink.get() << format_record(r) << '\n';
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

int run_counterexamples(std::ostream& out) {
  bool ok = true;
  out << "quantity,computed,printed,abs_diff\n";
  for (const auto& row : counterexample_rows()) {
    const double diff = std::fabs(row.computed - row.printed);
    ok = ok && diff <= kCounterexampleTol;
    out << row.label << ',' << format_g12(row.computed) << ',' << format_g12(row.printed) << ','
        << format_g12(diff) << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int run_conjecture(const Conjecture& c, std::ostream& out) {
  bool clean = true;
  for (Family f : c.families) {
    FamilyGrid grid = default_grid(f);
    if (!grid.axes.empty()) {
      if (c.range) {
        grid.axes.front().lo = c.range->first;
        grid.axes.front().hi = c.range->second;
      }
      if (c.n) {
        for (auto& axis : grid.axes) axis.n = *c.n;
      }
    }
    const ScanReport report = conjecture_scan(grid);
    print_scan_summary(out, report);
    out << format_record(record_for(report)) << '\n';
    clean = clean && report.violations.empty();
    if (!c.out.empty()) {
      const std::string path = c.families.size() == 1 ? c.out : c.out + "." + to_string(f) + ".csv";
      Sink sink(path, out);
      write_conjecture_csv(sink.get(), report);
    }
  }
  return clean ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::vector<CounterexampleRow> counterexample_rows() {
  auto gamma_band = [](double alpha, double kappa) {
    return band(GammaParams(alpha, 1.0), Kappa(kappa)).value();
  };
  return {{"gamma(1;1) band kappa=0.5", gamma_band(1.0, 0.5), 0.3834005},
          {"normal band kappa=0.5", std_normal_band(0.5).value(), 0.3829249},
          {"gamma(2;1) band kappa=0.5", gamma_band(2.0, 0.5), 0.3819693},
          {"gamma(1;1) band kappa=2", gamma_band(1.0, 2.0), 0.9502129},
          {"normal band kappa=2", std_normal_band(2.0).value(), 0.9544997},
          {"gamma(10;1) band kappa=2", gamma_band(10.0, 2.0), 0.9585112}};
}

Command parse(const std::vector<std::string>& args) {
  CLI::App app{"gamma distribution extreme-value probabilities", "gammaext"};
  app.require_subcommand(1);

  double kappa = 1.0;
  double alpha = NAN;
  double beta = 1.0;
  double tol = 1e-8;
  int n = 400;
  std::string range_text;
  std::string out_path;

  auto* eval = app.add_subcommand("eval", "evaluate h, t or band at one point");
  std::string function = "h";
  eval->add_option("function", function, "h | t | band")->required();
  eval->add_option("--kappa", kappa);
  eval->add_option("--alpha", alpha)->required();
  eval->add_option("--beta", beta);

  auto* minimize = app.add_subcommand("minimize", "minimize h_kappa over alpha");
  minimize->add_option("--kappa", kappa)->required();
  minimize->add_option("--tol", tol);

  auto* scan_cmd = app.add_subcommand("scan", "CSV of h_kappa on a log grid");
  scan_cmd->add_option("--kappa", kappa)->required();
  scan_cmd->add_option("--range", range_text, "lo:hi (default 1e-4:1e6)");
  scan_cmd->add_option("--n", n);
  scan_cmd->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "rebuild and check the positivity certificates");
  bool all = false;
  bool full_compare = false;
  bool show_coefficients = false;
  std::vector<std::string> only;
  verify->add_flag("--all", all, "run every verification (the default)");
  verify->add_option("--only", only, "subset, e.g. chain_plus case2_J")->delimiter(',');
  verify->add_flag("--full-compare", full_compare, "compare every printed coefficient");
  verify->add_flag("--coefficients", show_coefficients, "print the recomputed coefficients");
  verify->add_option("--out", out_path, "write the records here");

  app.add_subcommand("counterexamples", "band probabilities on both sides of the normal band");

  auto* conjecture = app.add_subcommand("conjecture", "scan distribution families against the normal band");
  std::string family = "all";
  std::optional<int> conj_n;
  conjecture->add_option("--family", family, "poisson|negbinomial|invgaussian|compoundpoisson|gamma|normal|all");
  conjecture->add_option("--range", range_text, "lo:hi of the first parameter");
  conjecture->add_option("--n", conj_n, "points per parameter axis");
  conjecture->add_option("--out", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream help;
    std::ostringstream ignored;
    app.exit(e, help, ignored);
    throw HelpRequested(help.str());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (eval->parsed()) {
    Eval c{EvalFunction::h, alpha, kappa, beta};
    if (function == "h") c.function = EvalFunction::h;
    else if (function == "t") c.function = EvalFunction::t;
    else if (function == "band") c.function = EvalFunction::band;
    else throw UsageError("eval: function must be h, t or band");
    require(positive(alpha), "--alpha must be a positive number");
    require(positive(kappa), "--kappa must be a positive number");
    require(positive(beta), "--beta must be a positive number");
    return c;
  }
  if (minimize->parsed()) {
    require(positive(kappa), "--kappa must be a positive number");
    require(positive(tol), "--tol must be a positive number");
    return Minimize{kappa, tol};
  }
  if (scan_cmd->parsed()) {
    require(positive(kappa), "--kappa must be a positive number");
    require(n >= 2, "--n must be at least 2");
    Scan c{kappa, kScanAlphaLo, kScanAlphaHi, n, out_path};
    if (!range_text.empty()) std::tie(c.lo, c.hi) = parse_range(range_text);
    return c;
  }
  if (verify->parsed()) {
    require(!(all && !only.empty()), "verify: --all and --only are exclusive");
    Verify c{all_verifications(), full_compare, show_coefficients, out_path};
    if (!only.empty()) {
      c.selection.clear();
      for (const auto& name : only) c.selection.push_back(parse_verification(name));
    }
    return c;
  }
  if (conjecture->parsed()) {
    Conjecture c{{}, std::nullopt, conj_n, out_path};
    if (family == "all") {
      c.families = all_families();
    } else {
      try {
        c.families = {parse_family(family)};
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
    }
    if (conj_n) require(*conj_n >= 1, "--n must be at least 1");
    if (!range_text.empty()) c.range = parse_range(range_text);
    return c;
  }
  return Counterexamples{};
}

int run(const Command& command, std::ostream& out) {
  return std::visit(
      [&out](const auto& c) -> int {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Eval>) return run_eval(c, out);
        else if constexpr (std::is_same_v<T, Minimize>) return run_minimize(c, out);
        else if constexpr (std::is_same_v<T, Scan>) return run_scan(c, out);
        else if constexpr (std::is_same_v<T, Verify>) return run_verify(c, out);
        else if constexpr (std::is_same_v<T, Counterexamples>) return run_counterexamples(out);
        else return run_conjecture(c, out);
      },
      command);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command command;
  try {
    command = parse(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    return run(command, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace gammaext::cli
