#include "lrn/cli.hpp"

#include "lrn/golden.hpp"
#include "lrn/lehmer.hpp"
#include "lrn/quadfield.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <thread>

namespace lrn::cli {
namespace {

using ojson = nlohmann::ordered_json;

ojson int_json(const Int& v) {
  if (fits_int64(v)) return v.get_si();
  return v.get_str();
}

Int operand_int(const RunConfig& config, std::size_t i, const char* name) {
  try {
    return parse_int(config.operands.at(i));
  } catch (const std::exception&) {
    throw UsageError(std::string("expected an integer ") + name);
  }
}

void require_operands(const RunConfig& config, std::size_t count, const char* usage) {
  if (config.operands.size() != count) {
    throw UsageError(std::string(to_string(config.command)) + ": usage: lrn " + to_string(config.command) + " " +
                     usage);
  }
}

SolveOptions solve_options(const RunConfig& config) {
  SolveOptions options;
  options.thue_bound = config.thue_bound;
  options.case3_bound = config.case3_bound;
  options.unit_variants = config.unit_variants;
  return options;
}

void emit_solutions(const std::vector<Solution>& sols, Format format, std::ostream& out) {
  for (const Solution& s : sols) {
    switch (format) {
      case Format::Jsonl: out << solution_jsonl(s) << "\n"; break;
      case Format::Csv: out << solution_csv(s) << "\n"; break;
      case Format::Pretty: out << solution_pretty(s) << "\n"; break;
    }
  }
}

void emit_skip(const Int& c1, const Int& c2, const std::string& reason, Format format, std::ostream& out,
               std::ostream& err) {
  switch (format) {
    case Format::Jsonl: out << skip_jsonl(c1, c2, reason) << "\n"; break;
    // CSV mirrors the golden table, which has no room for skips.
    case Format::Csv: err << "skip " << c1 << "," << c2 << ": " << reason << "\n"; break;
    case Format::Pretty: out << "skip (" << c1 << ", " << c2 << "): " << reason << "\n"; break;
  }
}

void csv_header(const RunConfig& config, std::ostream& out) {
  if (config.format == Format::Csv) out << "C1,C2,x,y,n\n";
}

int cmd_sieve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_operands(config, 2, "C1 C2");
  const auto inst = make_instance(operand_int(config, 0, "C1"), operand_int(config, 1, "C2"));
  if (!inst.valid) {
    emit_skip(inst.c1, inst.c2, inst.invalid_reason, config.format, out, err);
    return 0;
  }
  const ExponentReport report = exponent_set(inst);
  switch (config.format) {
    case Format::Jsonl: out << report_jsonl(inst, report) << "\n"; break;
    case Format::Csv: {
      out << "C1,C2,class_number,primes\n" << inst.c1 << "," << inst.c2 << "," << report.class_number << ",";
      for (std::size_t i = 0; i < report.primes.size(); ++i) out << (i ? ";" : "") << report.primes[i];
      out << "\n";
      break;
    }
    case Format::Pretty: out << report_pretty(inst, report) << "\n"; break;
  }
  return 0;
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_operands(config, 2, "C1 C2");
  const Int c1 = operand_int(config, 0, "C1");
  const Int c2 = operand_int(config, 1, "C2");
  if (c1 < 1 || c2 < 1) throw UsageError("solve: C1 and C2 must be positive");
  const auto inst = make_instance(c1, c2);
  csv_header(config, out);
  if (!inst.valid) {
    emit_skip(c1, c2, inst.invalid_reason, config.format, out, err);
    return 0;
  }
  emit_solutions(solve(inst, solve_options(config)), config.format, out);
  return 0;
}

void emit_sweep(const RunConfig& config, const std::vector<PairResult>& results, std::ostream& out,
                std::ostream& err) {
  csv_header(config, out);
  for (const PairResult& r : results) {
    if (!r.skip_reason.empty()) {
      emit_skip(r.c1, r.c2, r.skip_reason, config.format, out, err);
    } else {
      emit_solutions(r.solutions, config.format, out);
    }
  }
}

int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_operands(config, 0, "[--c1 A..B] [--c2 A..B]");
  emit_sweep(config, sweep(config), out, err);
  return 0;
}

void emit_diff_row(const char* tag, const GoldenRow& r, Format format, std::ostream& out) {
  if (format == Format::Jsonl) {
    ojson j;
    j["diff"] = tag;
    j["c1"] = int_json(r.c1);
    j["c2"] = int_json(r.c2);
    j["x"] = int_json(r.x);
    j["y"] = int_json(r.y);
    j["n"] = r.n;
    out << j.dump() << "\n";
  } else {
    out << tag << " " << r.c1 << "," << r.c2 << "," << r.x << "," << r.y << "," << r.n << "\n";
  }
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_operands(config, 0, "[--c1 A..B] [--c2 A..B] [--golden PATH]");
  const std::vector<GoldenRow> all_rows = select_golden(config);
  // Only rows inside the swept ranges take part in the comparison.
  std::vector<GoldenRow> rows;
  for (const GoldenRow& r : all_rows) {
    if (r.c1 >= config.c1_range.lo && r.c1 <= config.c1_range.hi && r.c2 >= config.c2_range.lo &&
        r.c2 <= config.c2_range.hi) {
      rows.push_back(r);
    }
  }
  std::vector<Solution> computed;
  for (PairResult& r : sweep(config)) {
    computed.insert(computed.end(), r.solutions.begin(), r.solutions.end());
  }
  const GoldenDiff diff = golden_diff(computed, rows);
  for (const GoldenRow& r : diff.missing) emit_diff_row("missing", r, config.format, out);
  for (const GoldenRow& r : diff.extra) emit_diff_row("extra", r, config.format, out);
  const std::string summary = std::to_string(diff.matched) + " matched, " + std::to_string(diff.missing.size()) +
                              " missing, " + std::to_string(diff.extra.size()) + " extra";
  if (config.format == Format::Jsonl) {
    ojson j;
    j["matched"] = diff.matched;
    j["missing"] = diff.missing.size();
    j["extra"] = diff.extra.size();
    out << j.dump() << "\n";
    err << summary << "\n";
  } else {
    out << summary << "\n";
  }
  return diff.empty() ? 0 : 1;
}

int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream&) {
  require_operands(config, 2, "C1 C2 [--fixed-y Y] [--n-max N] [--oracle-cap N]");
  const Int c1 = operand_int(config, 0, "C1");
  const Int c2 = operand_int(config, 1, "C2");
  if (c1 < 1 || c2 < 1) throw UsageError("oracle: C1 and C2 must be positive");
  if (config.fixed_y && *config.fixed_y < 2) throw UsageError("oracle: --fixed-y must be at least 2");
  OracleConfig oc;
  oc.value_cap = config.oracle_cap;
  oc.n_max = config.n_max;
  oc.fixed_y = config.fixed_y;
  csv_header(config, out);
  emit_solutions(brute_force(c1, c2, oc), config.format, out);
  return 0;
}

int cmd_classnum(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.operands.empty()) throw UsageError("classnum: usage: lrn classnum c [c ...]");
  if (config.format == Format::Csv) out << "c,class_number\n";
  for (std::size_t i = 0; i < config.operands.size(); ++i) {
    const Int c = operand_int(config, i, "c");
    if (c < 1 || squarefree_split(c).d != 1) throw UsageError("classnum: c must be a positive squarefree integer");
    const std::int64_t h = class_number(c);
    switch (config.format) {
      case Format::Jsonl: out << ojson{{"c", int_json(c)}, {"class_number", h}}.dump() << "\n"; break;
      case Format::Csv: out << c << "," << h << "\n"; break;
      case Format::Pretty: out << "h(Q(sqrt(-" << c << "))) = " << h << "\n"; break;
    }
  }
  return 0;
}

int cmd_lehmer(const RunConfig& config, std::ostream& out, std::ostream&) {
  require_operands(config, 3, "A B n");
  const LehmerParams params{operand_int(config, 0, "A"), operand_int(config, 1, "B")};
  const Int n_int = operand_int(config, 2, "n");
  if (n_int < 1 || n_int > 100000) throw UsageError("lehmer: n must be in 1..100000");
  const auto n = static_cast<unsigned long>(n_int.get_ui());
  const bool pair = is_lehmer_pair(params);
  const std::vector<Int> terms = lehmer_terms(params, n);
  std::optional<Int> prim;
  if (n >= 2 && pair) prim = primitive_divisor(params, n);
  const bool defective = n <= 30 && is_listed_defective(params, static_cast<unsigned>(n));

  switch (config.format) {
    case Format::Jsonl: {
      ojson j;
      j["A"] = int_json(params.A);
      j["B"] = int_json(params.B);
      j["n"] = n;
      j["lehmer_pair"] = pair;
      ojson t = ojson::array();
      for (const Int& v : terms) t.push_back(int_json(v));
      j["terms"] = t;
      j["primitive_divisor"] = prim ? int_json(*prim) : ojson(nullptr);
      j["listed_defective"] = defective;
      out << j.dump() << "\n";
      break;
    }
    case Format::Csv:
      out << "k,term\n";
      for (std::size_t k = 0; k < terms.size(); ++k) out << k + 1 << "," << terms[k] << "\n";
      break;
    case Format::Pretty:
      out << "(A, B) = (" << params.A << ", " << params.B << ")" << (pair ? "" : "  not a Lehmer pair") << "\n";
      for (std::size_t k = 0; k < terms.size(); ++k) out << "  u" << k + 1 << " = " << terms[k] << "\n";
      if (n >= 2 && pair) {
        out << "  primitive divisor of u" << n << ": " << (prim ? prim->get_str() : std::string("none")) << "\n";
      }
      if (defective) out << "  listed as " << n << "-defective\n";
      break;
  }
  return 0;
}

}  // namespace

const char* to_string(Command c) {
  switch (c) {
    case Command::Sieve: return "sieve";
    case Command::Solve: return "solve";
    case Command::Table: return "table";
    case Command::Verify: return "verify";
    case Command::Oracle: return "oracle";
    case Command::ClassNum: return "classnum";
    case Command::Lehmer: return "lehmer";
  }
  return "?";
}

const char* to_string(Format f) {
  switch (f) {
    case Format::Jsonl: return "jsonl";
    case Format::Csv: return "csv";
    case Format::Pretty: return "pretty";
  }
  return "?";
}

IntRange parse_range(const std::string& text) {
  auto parse_one = [&](const std::string& part) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw std::invalid_argument("bad range '" + text + "'");
    return static_cast<std::int64_t>(v);
  };
  IntRange r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_one(text);
  } else {
    r.lo = parse_one(text.substr(0, dots));
    r.hi = parse_one(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Solver for C1*x^2 + C2 = y^n", "lrn"};
  app.require_subcommand(1);

  RunConfig config;
  std::string c1_text, c2_text, format_text = "jsonl", cap_text, fixed_y_text;

  struct Entry {
    Command command;
    const char* help;
  };
  const std::vector<Entry> entries{
      {Command::Sieve, "Candidate odd prime exponents for C1 C2"},
      {Command::Solve, "All solutions for C1 C2"},
      {Command::Table, "Solve every valid pair in the --c1/--c2 ranges"},
      {Command::Verify, "Run table and compare with the golden solution table"},
      {Command::Oracle, "Brute-force enumeration for C1 C2 up to --oracle-cap"},
      {Command::ClassNum, "Class number of Q(sqrt(-c))"},
      {Command::Lehmer, "Lehmer sequence terms and primitive divisor for A B n"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(to_string(e.command), e.help);
    sub->add_option("operands", config.operands, "Positional arguments");
    sub->add_option("--c1", c1_text, "C1 range A..B (default 2..10)");
    sub->add_option("--c2", c2_text, "C2 range A..B (default 1..80)");
    sub->add_option("--thue-bound", config.thue_bound, "Box bound for Thue equations");
    sub->add_option("--case3-bound", config.case3_bound, "Largest y scanned for n = 4");
    sub->add_option("--oracle-cap", cap_text, "Largest y^n enumerated by the oracle");
    sub->add_option("--format", format_text, "jsonl, csv or pretty")
        ->check(CLI::IsMember({"jsonl", "csv", "pretty"}));
    sub->add_option("--jobs", config.jobs, "Worker threads for table and verify");
    sub->add_option("--golden", config.golden_path, "Golden CSV (overrides LRN_GOLDEN)");
    sub->add_flag("!--no-unit-variants", config.unit_variants, "Skip the omega unit variants");
    if (e.command == Command::Oracle) {
      sub->add_option("--fixed-y", fixed_y_text, "Only this y");
      sub->add_option("--n-max", config.n_max, "Largest exponent");
    }
    subs.emplace_back(sub, e.command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return std::nullopt;
    }
    throw UsageError(e.what());
  }

  for (const auto& [sub, command] : subs) {
    if (sub->parsed()) config.command = command;
  }
  try {
    if (!c1_text.empty()) config.c1_range = parse_range(c1_text);
    if (!c2_text.empty()) config.c2_range = parse_range(c2_text);
    if (!cap_text.empty()) config.oracle_cap = parse_int(cap_text);
    if (!fixed_y_text.empty()) config.fixed_y = parse_int(fixed_y_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  config.format = format_text == "csv" ? Format::Csv : format_text == "pretty" ? Format::Pretty : Format::Jsonl;
  return config;
}

void validate(const RunConfig& config) {
  if (config.c1_range.lo < 1 || config.c1_range.lo > config.c1_range.hi) throw UsageError("--c1: need 1 <= A <= B");
  if (config.c2_range.lo < 1 || config.c2_range.lo > config.c2_range.hi) throw UsageError("--c2: need 1 <= A <= B");
  if (config.thue_bound < 1) throw UsageError("--thue-bound must be at least 1");
  if (config.case3_bound < 1) throw UsageError("--case3-bound must be at least 1");
  if (config.oracle_cap < 8) throw UsageError("--oracle-cap must be at least 8");
  if (config.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (config.n_max != 0 && config.n_max < 3) throw UsageError("--n-max must be at least 3");
}

std::vector<GoldenRow> select_golden(const RunConfig& config) {
  if (!config.golden_path.empty()) return load_golden(config.golden_path);
  if (const char* env = std::getenv("LRN_GOLDEN"); env != nullptr && *env != '\0') return load_golden(env);
  return embedded_golden();
}

std::vector<PairResult> sweep(const RunConfig& config) {
  std::vector<PairResult> results;
  for (std::int64_t c1 = config.c1_range.lo; c1 <= config.c1_range.hi; ++c1) {
    for (std::int64_t c2 = config.c2_range.lo; c2 <= config.c2_range.hi; ++c2) {
      results.push_back({Int(static_cast<long>(c1)), Int(static_cast<long>(c2)), {}, {}});
    }
  }
  const SolveOptions options = solve_options(config);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < results.size(); i = next++) {
      PairResult& r = results[i];
      try {
        const auto inst = make_instance(r.c1, r.c2);
        if (!inst.valid) {
          r.skip_reason = inst.invalid_reason;
          continue;
        }
        r.solutions = solve(inst, options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(results.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::Sieve: return cmd_sieve(config, out, err);
    case Command::Solve: return cmd_solve(config, out, err);
    case Command::Table: return cmd_table(config, out, err);
    case Command::Verify: return cmd_verify(config, out, err);
    case Command::Oracle: return cmd_oracle(config, out, err);
    case Command::ClassNum: return cmd_classnum(config, out, err);
    case Command::Lehmer: return cmd_lehmer(config, out, err);
  }
  return 2;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto config = parse_args(argc, argv, out);
    if (!config) return 0;
    validate(*config);
    return run(*config, out, err);
  } catch (const UsageError& e) {
    err << "lrn: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    // Unreadable or corrupt golden table and similar environment problems.
    err << "lrn: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lrn::cli
