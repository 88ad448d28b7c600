#pragma once

// Output formats: CSV scans (12 significant digits, "%.12g"), line records
// "name=...;verdict=...;detail=..." and human-readable certificate text.

#include <ostream>
#include <string>
#include <vector>

#include "gammaext/certificates.hpp"
#include "gammaext/iddist.hpp"
#include "gammaext/optimize.hpp"

namespace gammaext {

std::string format_g12(double x);

/// Header "alpha,value", one newline-terminated row per entry.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);
/// Header "<param names...>,value".
void write_conjecture_csv(std::ostream& out, const ScanReport& report);

struct Record {
  std::string name;
  std::string verdict;  // "pass" or "fail" (or "evidence" for open-question scans)
  std::string detail;
};

/// ';' and newlines inside fields are replaced so a record stays one line.
std::string format_record(const Record& r);

std::vector<Record> records_for(const VerificationOutcome& outcome);
/// Verdict "pass" when no grid point falls below the threshold, else "fail".
Record record_for(const ScanReport& report);

void print_certificate(std::ostream& out, const CertificateReport& r, bool show_coefficients = false);
void print_numeric(std::ostream& out, const NumericReport& r);
void print_outcome(std::ostream& out, const VerificationOutcome& o, bool show_coefficients = false);
void print_scan_summary(std::ostream& out, const ScanReport& report);

}  // namespace gammaext
