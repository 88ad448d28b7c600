#pragma once

// Command-line front end. parse() turns argv into a validated Command and
// run() executes it against an output stream; both are usable without a
// process boundary, which is how the tests drive them.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error.

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gammaext/certificates.hpp"
#include "gammaext/iddist.hpp"

namespace gammaext::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

enum class EvalFunction { h, t, band };

struct Eval {
  EvalFunction function;
  double alpha;
  double kappa = 1.0;
  double beta = 1.0;
};

struct Minimize {
  double kappa;
  double tol = 1e-8;
};

struct Scan {
  double kappa;
  double lo = 1e-4;
  double hi = 1e6;
  int n = 400;
  std::string out;  // empty: the output stream
};

struct Verify {
  std::vector<Verification> selection;
  bool full_compare = false;
  bool show_coefficients = false;
  std::string out;  // records file; empty: records go to the output stream only
};

struct Counterexamples {};

struct Conjecture {
  std::vector<Family> families;
  std::optional<std::pair<double, double>> range;  // overrides the first axis
  std::optional<int> n;                            // points per axis
  std::string out;                                 // CSV path (per family suffix when several)
};

using Command = std::variant<Eval, Minimize, Scan, Verify, Counterexamples, Conjecture>;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Carries the help text for --help.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws UsageError for bad syntax or out-of-range numbers, HelpRequested for --help.
/// args excludes the program name.
Command parse(const std::vector<std::string>& args);

int run(const Command& command, std::ostream& out);

/// parse + run with exit-code mapping; --help prints usage and returns 0.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CounterexampleRow {
  std::string label;
  double computed;
  double printed;
};
/// The four Gamma band probabilities and the two normal bands they straddle.
std::vector<CounterexampleRow> counterexample_rows();
inline constexpr double kCounterexampleTol = 1e-6;

}  // namespace gammaext::cli
