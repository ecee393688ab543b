#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cmub_eur/bounds.hpp"
#include "cmub_eur/errors.hpp"
#include "cmub_eur/scenario.hpp"

// Implementation of the cmub-eur command-line tool. The executable in tools/
// only forwards argv to run_cli so that every command is testable in-process.
namespace cmub::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kInvariant = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct SweepConfig {
  Example example = Example::One;
  std::string param = "theta";
  double lo = 0.0;
  double hi = 0.0;
  int steps = 201;
  std::map<std::string, double> fixed;
  std::string out;

  // Throws UsageError for bad parameter names, lo >= hi or steps < 2.
  void validate() const;
};

struct SweepRow {
  double param = 0.0;
  BoundReport report;
};

// Evaluates every grid point lo + k (hi - lo)/(steps - 1). Rows that break a
// report invariant abort the sweep with InvariantViolation.
std::vector<SweepRow> run_sweep(const SweepConfig& config);
// Header: param,lhs,zhang_lower,thm1_lower,thm2_upper,delta_cmub,delta_zhang,purity_a
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

struct RandomConfig {
  RandomStateSpec spec;
  Example example = Example::Three;  // Three or Six
};

struct RandomRow {
  int index = 0;
  BoundReport report;
};

// Rows come back sorted by uncertainty ascending (ties by index).
std::vector<RandomRow> run_random(const RandomConfig& config);
// Header: index,lhs,zhang_lower,thm1_lower,thm2_upper
void write_random_csv(const std::vector<RandomRow>& rows, std::ostream& out);

struct BoundsRequest {
  QuantumState state;
  std::string mub = "auto";  // "auto" picks the standard set for dim(measured)
  std::string partition;     // empty: all bases to one memory
  std::string measured = "A";
  LabelSet memories;         // empty: every other label, in state order
};

BoundReport run_bounds(const BoundsRequest& request);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Candidate MUB tables keyed by name; each entry lists the bases as column
// matrices. The default uses the built-in sets for d = 2, 3, 4, 5.
struct VerifyInputs {
  std::vector<std::pair<std::string, std::vector<ComplexMatrix>>> tables;
  std::uint64_t seed = 2024;
  int states_per_check = 50;
};

VerifyInputs default_verify_inputs();
std::vector<CheckResult> run_verify(const VerifyInputs& inputs);

// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace cmub::cli
