#pragma once

// Exact-arithmetic reconstruction of the polynomial positivity certificates
// behind t(alpha + 1) < t(alpha), with spot checks against the printed
// expansions.
//
// Substitutions used:
//   w = sqrt(alpha + 1) - sqrt(alpha),  alpha = (1 - w^2)^2 / (4 w^2)
//   small-alpha case: w = 1 / (1 + q^2)
//   plus chain:       w = 1 / (2 (1 + q^2))   maps q in R onto (0, 1/2]
//   minus chain:      w = 1 / (4 (1 + q^2))   maps q in R onto (0, 1/4]

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammaext/exact_poly.hpp"
#include "gammaext/parallel.hpp"

namespace gammaext {

enum class SignVerdict { all_positive, all_negative, mixed };
const char* to_string(SignVerdict v);

/// all_positive: every coefficient >= 0 and the constant term > 0 (so the
/// polynomial in q^2 is positive for every real q); all_negative likewise.
SignVerdict classify_signs(const std::vector<BigRational>& coefficients);

struct SpotCheck {
  std::string target;  // which expansion, e.g. "V+" or "F+/(2w)"
  std::size_t index;   // power of the variable
  BigRational expected;
  BigRational actual;
  bool matched;
};

struct CertificateReport {
  std::string name;
  int degree = -1;
  std::vector<BigRational> coefficients;
  SignVerdict sign_verdict = SignVerdict::mixed;
  std::optional<SignVerdict> required_verdict;
  bool odd_powers_vanish = true;
  std::vector<SpotCheck> spot_checks;
  std::vector<std::string> notes;  // implication chain and side checks
  std::chrono::duration<double> elapsed{};

  bool spot_checks_pass() const;
  bool passed() const;
};

struct NumericCheck {
  std::string label;
  long double computed;
  long double expected;
  long double tolerance;
  bool passed;
};

struct NumericReport {
  std::string name;
  std::vector<NumericCheck> checks;
  std::vector<std::string> notes;
  std::chrono::duration<double> elapsed{};

  bool passed() const;
};

class CertificateMismatch : public std::runtime_error {
 public:
  CertificateMismatch(const SpotCheck& check);
  const SpotCheck& check() const noexcept { return check_; }

 private:
  SpotCheck check_;
};

class SignViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ChainSide { plus, minus };

struct PQ {
  RationalFunction P;
  RationalFunction Q;
};

/// P and Q of the chosen side as exact rational functions of w: the log
/// terms alpha ln(1 + tau) and alpha ln(1 + tau / 2) replaced by their Taylor
/// polynomials (order 5 on the plus side, order 4 on the minus side).
PQ build_P_Q(ChainSide side);

enum class CompareMode { spot, full };

/// Compares a computed polynomial with a printed one. In spot mode only the
/// constant term, the first nonconstant printed term and the top term are
/// compared; full mode compares every printed term and also requires that
/// the computed polynomial has no terms the printed one lacks. Both modes
/// flag a computed degree that differs from the printed top power.
std::vector<SpotCheck> compare_with_printed(const std::string& target, const RationalPoly& computed,
                                            const std::vector<std::pair<unsigned, BigRational>>& printed,
                                            CompareMode mode);

// Each verify_* throws CertificateMismatch, SignViolation or NumericMismatch
// when a check fails; on success the returned reports carry every detail.
CertificateReport verify_small_alpha_certificate();
std::vector<CertificateReport> verify_chain_plus(CompareMode mode = CompareMode::spot);
std::vector<CertificateReport> verify_chain_minus(CompareMode mode = CompareMode::spot);
CertificateReport verify_case2_J();
NumericReport verify_case1_transcendental();

/// Positivity of the scale factors used in both chains, verified by Sturm counts.
CertificateReport verify_scale_factors();

enum class Verification { small_alpha, chain_plus, chain_minus, case2_j, case1, scale_factors };
const char* to_string(Verification v);
std::vector<Verification> all_verifications();

struct VerificationOutcome {
  Verification which;
  std::vector<CertificateReport> certificates;
  std::optional<NumericReport> numeric;
  std::optional<std::string> failure;  // exception text if the verification threw

  bool passed() const { return !failure; }
};

/// Runs the selected verifications (concurrently under Execution::parallel);
/// the outcomes are returned in selection order either way.
std::vector<VerificationOutcome> run_verifications(const std::vector<Verification>& selection,
                                                   CompareMode mode,
                                                   Execution exec = Execution::parallel);

}  // namespace gammaext
