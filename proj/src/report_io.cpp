#include "gammaext/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace gammaext {

namespace {

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), ';', ',');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::string join(const std::vector<double>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += format_g12(xs[i]);
  }
  return out;
}

std::string named_params(const std::vector<std::string>& names, const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < names.size() && i < values.size(); ++i) {
    if (i) out += " ";
    out += names[i] + "=" + format_g12(values[i]);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

std::string format_g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "alpha,value\n";
  for (const auto& r : rows) out << format_g12(r.alpha) << ',' << format_g12(r.value) << '\n';
}

void write_conjecture_csv(std::ostream& out, const ScanReport& report) {
  for (const auto& name : report.parameter_names) out << name << ',';
  out << "value\n";
  for (const auto& p : report.grid) {
    if (!p.params.empty()) out << join(p.params) << ',';
    out << format_g12(p.band) << '\n';
  }
}

std::string format_record(const Record& r) {
  return "name=" + sanitize(r.name) + ";verdict=" + sanitize(r.verdict) + ";detail=" + sanitize(r.detail);
}

std::vector<Record> records_for(const VerificationOutcome& o) {
  std::vector<Record> out;
  const std::string prefix = to_string(o.which);
  for (const auto& c : o.certificates) {
    std::ostringstream d;
    d << "degree " << c.degree << ", signs " << to_string(c.sign_verdict) << ", "
      << std::count_if(c.spot_checks.begin(), c.spot_checks.end(), [](const SpotCheck& s) { return s.matched; })
      << "/" << c.spot_checks.size() << " printed coefficients matched";
    if (!c.coefficients.empty()) d << ", constant " << c.coefficients.front().get_str();
    out.push_back({prefix + "/" + c.name, c.passed() ? "pass" : "fail", d.str()});
  }
  if (o.numeric) {
    std::ostringstream d;
    for (std::size_t i = 0; i < o.numeric->checks.size(); ++i) {
      const auto& c = o.numeric->checks[i];
      if (i) d << ", ";
      d << c.label << " " << format_g12(static_cast<double>(c.computed)) << (c.passed ? " ok" : " FAILED");
    }
    out.push_back({prefix + "/" + o.numeric->name, o.numeric->passed() ? "pass" : "fail", d.str()});
  }
  if (o.failure) out.push_back({prefix, "fail", *o.failure});
  return out;
}

Record record_for(const ScanReport& report) {
  std::ostringstream d;
  d << "evidence only; " << report.grid.size() << " grid points; min_band " << format_g12(report.min_band)
    << " at " << named_params(report.parameter_names, report.argmin_params) << "; threshold "
    << format_g12(report.threshold) << "; " << report.violations.size() << " below threshold-1e-9; "
    << convention(report.family);
  return {std::string("conjecture/") + to_string(report.family), report.violations.empty() ? "pass" : "fail",
          d.str()};
}

void print_certificate(std::ostream& out, const CertificateReport& r, bool show_coefficients) {
  out << r.name << ": degree " << r.degree << ", signs " << to_string(r.sign_verdict);
  if (r.required_verdict) out << " (required " << to_string(*r.required_verdict) << ")";
  out << ", " << (r.passed() ? "PASS" : "FAIL") << " [" << r.elapsed.count() << " s]\n";
  for (const auto& s : r.spot_checks) {
    out << "  " << (s.matched ? "match   " : "MISMATCH") << " " << s.target << " [" << s.index
        << "] = " << s.actual.get_str();
    if (!s.matched) out << " (printed " << s.expected.get_str() << ")";
    out << '\n';
  }
  for (const auto& n : r.notes) out << "  - " << n << '\n';
  if (show_coefficients) {
    for (std::size_t i = 0; i < r.coefficients.size(); ++i) {
      if (sgn(r.coefficients[i]) != 0) out << "    [" << i << "] " << r.coefficients[i].get_str() << '\n';
    }
  }
}

void print_numeric(std::ostream& out, const NumericReport& r) {
  out << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " [" << r.elapsed.count() << " s]\n";
  for (const auto& c : r.checks) {
    out << "  " << (c.passed ? "ok    " : "FAILED") << " " << c.label << " = "
        << format_g12(static_cast<double>(c.computed));
    if (c.tolerance > 0) {
      out << " (expected " << format_g12(static_cast<double>(c.expected)) << " +- "
          << format_g12(static_cast<double>(c.tolerance)) << ")";
    }
    out << '\n';
  }
  for (const auto& n : r.notes) out << "  - " << n << '\n';
}

void print_outcome(std::ostream& out, const VerificationOutcome& o, bool show_coefficients) {
  out << "== " << to_string(o.which) << '\n';
  for (const auto& c : o.certificates) print_certificate(out, c, show_coefficients);
  if (o.numeric) print_numeric(out, *o.numeric);
  if (o.failure) out << "  FAILED: " << *o.failure << '\n';
}

void print_scan_summary(std::ostream& out, const ScanReport& report) {
  out << "family " << to_string(report.family) << " (" << convention(report.family) << ")\n"
      << "  evidence only: a clean grid does not settle the question for the family\n"
      << "  grid points " << report.grid.size() << ", threshold " << format_g12(report.threshold) << '\n'
      << "  min band " << format_g12(report.min_band) << " at "
      << named_params(report.parameter_names, report.argmin_params) << '\n'
      << "  points below threshold - 1e-9: " << report.violations.size() << '\n';
  for (const auto& v : report.violations) {
    out << "    " << named_params(report.parameter_names, v.params) << " band " << format_g12(v.band) << '\n';
  }
}

}  // namespace gammaext
