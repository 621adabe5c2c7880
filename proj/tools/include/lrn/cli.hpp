#pragma once

// The `lrn` command line: argument parsing into a RunConfig, execution with
// output to arbitrary streams (so tests can drive it), and the record
// encoders shared by every subcommand.

#include "lrn/oracle.hpp"
#include "lrn/sieve.hpp"
#include "lrn/solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrn::cli {

enum class Command { Sieve, Solve, Table, Verify, Oracle, ClassNum, Lehmer };
enum class Format { Jsonl, Csv, Pretty };

const char* to_string(Command c);
const char* to_string(Format f);

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// "A..B" or a single "A"; throws std::invalid_argument if empty or malformed.
IntRange parse_range(const std::string& text);

struct RunConfig {
  Command command = Command::Verify;
  IntRange c1_range{2, 10};
  IntRange c2_range{1, 80};
  std::int64_t thue_bound = 1'000'000;
  std::int64_t case3_bound = 1'000'000;
  Int oracle_cap{1'000'000'000'000};
  Format format = Format::Jsonl;
  unsigned jobs = 1;
  /// --golden; empty means LRN_GOLDEN, then the embedded table.
  std::string golden_path;
  bool unit_variants = true;

  // Positional operands of the probe subcommands.
  std::vector<std::string> operands;
  std::optional<Int> fixed_y;
  unsigned n_max = 0;
};

/// Thrown for unusable flags or operands; mapped to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses argv (argv[0] is the program name). Returns nothing when help was
/// requested and already printed to `out`.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Checks the RunConfig invariants; throws UsageError.
void validate(const RunConfig& config);

/// Executes a validated config. Returns the exit status (0, or 1 for a
/// golden diff); throws UsageError for bad operands.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + validate + run, with every UsageError and parse error turned
/// into a message on `err` and exit status 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The golden table selected by --golden, LRN_GOLDEN or the embedded copy.
std::vector<GoldenRow> select_golden(const RunConfig& config);

// Records. Integers are JSON numbers when they fit in 64 bits, strings otherwise.

std::string solution_jsonl(const Solution& s);
std::string skip_jsonl(const Int& c1, const Int& c2, const std::string& reason);
/// Inverse of solution_jsonl; throws std::invalid_argument on schema violations.
Solution solution_from_jsonl(const std::string& line);
std::string solution_csv(const Solution& s);
std::string solution_pretty(const Solution& s);

std::string report_jsonl(const EquationInstance& inst, const ExponentReport& report);
std::string report_pretty(const EquationInstance& inst, const ExponentReport& report);

/// Solutions or skip reason for one pair, as produced by `table`.
struct PairResult {
  Int c1;
  Int c2;
  std::vector<Solution> solutions;
  std::string skip_reason;
};

/// Solves every pair in the ranges on `jobs` threads; results in (C1, C2) order.
std::vector<PairResult> sweep(const RunConfig& config);

}  // namespace lrn::cli
