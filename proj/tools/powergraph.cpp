#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "powergraph/report_io.hpp"
#include "powergraph/selftest.hpp"
#include "powergraph/sweep.hpp"

namespace {

using namespace powergraph;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadOrder = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitIo = 4;

std::optional<std::uint64_t> parse_order(const std::string& text) {
  std::uint64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  if (value < 2 || value > kMaxOrder) return std::nullopt;
  return value;
}

// Precedence: --class-cap flag > POWERGRAPH_CLASS_CAP > built-in default.
std::size_t resolve_class_cap(bool flag_given, std::size_t flag_value) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("POWERGRAPH_CLASS_CAP")) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), value);
    if (ec == std::errc{} && ptr == env + std::string_view(env).size() && value >= 4) return value;
    std::cerr << "warning: ignoring invalid POWERGRAPH_CLASS_CAP value\n";
  }
  return kDefaultClassCap;
}

OracleMode parse_oracle(const std::string& name) {
  if (name == "none") return OracleMode::none;
  if (name == "maxflow") return OracleMode::maxflow;
  if (name == "exhaustive") return OracleMode::exhaustive;
  return OracleMode::both;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  return OutputFormat::table;
}

int write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return kExitIo;
  }
  out << content;
  if (!out.flush()) {
    std::cerr << "error: failed writing output file '" << path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

std::string factorization_string(const Factorization& f) {
  std::ostringstream out;
  out << f.n << " = ";
  for (int a = 1; a <= f.prime_count(); ++a) {
    if (a > 1) out << " * ";
    out << f.prime(a);
    if (f.exponent(a) > 1) out << "^" << f.exponent(a);
  }
  return out.str();
}

std::string analyze_table(const VerifyOutcome& outcome) {
  const MinCutReport& report = outcome.report;
  std::ostringstream out;
  out << "n = " << factorization_string(factorize(report.n)) << "\n";
  out << "regime: " << regime_name(report.regime) << "\n";
  if (!report.kappa) {
    out << "complete graph, no cut-set\n";
    return out.str();
  }
  out << "kappa: " << *report.kappa << "\n";
  out << "achieving:";
  for (const CutCandidate& c : report.achieving) out << " " << c.label();
  out << "\n";
  if (outcome.record.oracle_used != OracleMode::none) {
    out << "oracle: " << oracle_name(outcome.record.oracle_used)
        << ", kappa=" << (outcome.record.oracle_kappa ? std::to_string(*outcome.record.oracle_kappa)
                                                      : std::string("-"))
        << ", match=" << (outcome.record.match ? "yes" : "no")
        << ", disconnects=" << (outcome.record.disconnection_ok ? "yes" : "no") << "\n";
  }
  std::vector<const CutCandidate*> sorted;
  sorted.reserve(report.family.size());
  for (const CutCandidate& c : report.family) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(), [](const CutCandidate* x, const CutCandidate* y) {
    return x->size < y->size || (x->size == y->size && candidate_order_less(*x, *y));
  });
  out << "candidates (" << report.family_size << " total, sorted by size):\n";
  for (const CutCandidate* c : sorted) {
    out << "  " << c->size << "\t" << c->label();
    if (c->size == *report.kappa) out << "\t*";
    out << "\n";
  }
  return out.str();
}

std::string sweep_table_line(const VerifyOutcome& outcome) {
  const MinCutReport& report = outcome.report;
  std::ostringstream out;
  out << "n=" << report.n << " r=" << report.r << " regime=" << regime_name(report.regime);
  if (report.kappa)
    out << " kappa=" << *report.kappa;
  else
    out << " kappa=-";
  if (!report.achieving.empty()) out << " achieving=" << report.achieving.front().label();
  out << " oracle=" << oracle_name(outcome.record.oracle_used)
      << " match=" << (outcome.record.match ? "yes" : "no");
  return out.str();
}

struct AnalyzeOptions {
  std::string order_text;
  std::string format = "table";
  bool json_shorthand = false;
  std::string oracle = "none";
  std::size_t class_cap = kDefaultClassCap;
  bool cap_given = false;
  std::string output_path;
  bool timings = false;
};

int run_analyze(const AnalyzeOptions& opt) {
  const auto n = parse_order(opt.order_text);
  if (!n) {
    std::cerr << "error: order must be an integer in [2, 2^63 - 1], got '" << opt.order_text
              << "'\n";
    return kExitBadOrder;
  }
  const std::size_t cap = resolve_class_cap(opt.cap_given, opt.class_cap);
  const OutputFormat format =
      opt.json_shorthand ? OutputFormat::json : parse_format(opt.format);
  const VerifyOutcome outcome = verify_full(factorize(*n), parse_oracle(opt.oracle), cap);
  std::string rendered;
  switch (format) {
    case OutputFormat::json:
      rendered = report_to_json(outcome, opt.timings).dump(2) + "\n";
      break;
    case OutputFormat::csv:
      rendered = csv_header() + "\n" + csv_row(outcome) + "\n";
      break;
    case OutputFormat::table:
      rendered = analyze_table(outcome);
      break;
  }
  return write_output(opt.output_path, rendered);
}

struct RangeOptions {
  std::string lo_text;
  std::string hi_text;
  std::string oracle = "maxflow";
  std::string format = "table";
  std::size_t class_cap = kDefaultClassCap;
  bool cap_given = false;
  unsigned workers = 0;
  std::string output_path;
  bool timings = false;
};

int run_verify_range(const RangeOptions& opt) {
  const auto lo = parse_order(opt.lo_text);
  const auto hi = parse_order(opt.hi_text);
  if (!lo || !hi || *hi < *lo) {
    std::cerr << "error: range bounds must be integers in [2, 2^63 - 1] with lo <= hi\n";
    return kExitBadOrder;
  }
  SweepConfig config;
  config.lo = *lo;
  config.hi = *hi;
  config.oracle = parse_oracle(opt.oracle);
  config.class_cap = resolve_class_cap(opt.cap_given, opt.class_cap);
  config.workers = opt.workers > 0
                       ? opt.workers
                       : std::max(1u, std::thread::hardware_concurrency());
  config.format = parse_format(opt.format);
  config.output_path = opt.output_path;

  const SweepOutcome sweep = run_sweep(config);

  std::string rendered;
  switch (config.format) {
    case OutputFormat::json: {
      nlohmann::ordered_json records = nlohmann::ordered_json::array();
      for (const VerifyOutcome& entry : sweep.entries)
        records.push_back(report_to_json(entry, opt.timings));
      rendered = records.dump(2) + "\n";
      break;
    }
    case OutputFormat::csv: {
      rendered = csv_header() + "\n";
      for (const VerifyOutcome& entry : sweep.entries) rendered += csv_row(entry) + "\n";
      break;
    }
    case OutputFormat::table: {
      for (const VerifyOutcome& entry : sweep.entries)
        rendered += sweep_table_line(entry) + "\n";
      break;
    }
  }
  const int io_status = write_output(config.output_path, rendered);
  if (io_status != kExitOk) return io_status;

  std::ostream& summary = config.output_path.empty() ? std::cerr : std::cout;
  summary << "checked " << sweep.entries.size() << " orders in [" << config.lo << ", " << config.hi
          << "]: " << (sweep.entries.size() - sweep.failure_count) << " ok, "
          << sweep.failure_count << " failures\n";
  if (sweep.aborted && sweep.failure_count > 0)
    summary << "sweep aborted after the first failure\n";
  return sweep.failure_count == 0 ? kExitOk : kExitMismatch;
}

int run_selftest(std::uint64_t max_n) {
  const auto checks = run_inequality_suite(2, max_n);
  std::uint64_t total_violations = 0;
  for (const InequalityCheck& check : checks) {
    std::cout << check.name << ": " << check.instances << " instances, "
              << check.violation_count << " violations\n";
    for (const std::string& sample : check.samples) std::cout << "  " << sample << "\n";
    total_violations += check.violation_count;
  }
  std::cout << "inequality sweep over n in [2, " << max_n << "]: "
            << (total_violations == 0 ? "all hold" : "violations found") << "\n";
  return total_violations == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex connectivity of power graphs of cyclic groups"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opt;
  CLI::App* analyze = app.add_subcommand("analyze", "Analyze a single group order");
  analyze->add_option("n", analyze_opt.order_text, "Group order (>= 2)")->required();
  analyze->add_option("--format", analyze_opt.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  analyze->add_flag("--json", analyze_opt.json_shorthand, "Shorthand for --format json");
  analyze->add_option("--oracle", analyze_opt.oracle, "Cross-check oracle")
      ->check(CLI::IsMember({"none", "maxflow", "exhaustive", "both"}));
  analyze->add_option("--class-cap", analyze_opt.class_cap, "Divisor class cap")
      ->check(CLI::Range(std::size_t{4}, std::numeric_limits<std::size_t>::max()));
  analyze->add_option("--output", analyze_opt.output_path, "Write the report to a file");
  analyze->add_flag("--timings", analyze_opt.timings, "Include elapsed_ms in JSON output");

  RangeOptions range_opt;
  CLI::App* range = app.add_subcommand("verify-range", "Verify an inclusive range of orders");
  range->add_option("lo", range_opt.lo_text, "Lower bound (>= 2)")->required();
  range->add_option("hi", range_opt.hi_text, "Upper bound")->required();
  range->add_option("--oracle", range_opt.oracle, "Oracle selection")
      ->check(CLI::IsMember({"none", "maxflow", "exhaustive", "both"}));
  range->add_option("--format", range_opt.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  range->add_option("--class-cap", range_opt.class_cap, "Divisor class cap")
      ->check(CLI::Range(std::size_t{4}, std::numeric_limits<std::size_t>::max()));
  range->add_option("--workers", range_opt.workers, "Worker threads (default: logical CPUs)");
  range->add_option("--output", range_opt.output_path, "Write records to a file");
  range->add_flag("--timings", range_opt.timings, "Include elapsed_ms in JSON output");

  std::uint64_t selftest_max_n = 2000;
  CLI::App* selftest = app.add_subcommand("selftest", "Evaluate the coded inequality suite");
  selftest->add_option("--max-n", selftest_max_n, "Upper end of the n-sweep")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{10000000}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      analyze_opt.cap_given = analyze->count("--class-cap") > 0;
      return run_analyze(analyze_opt);
    }
    if (*range) {
      range_opt.cap_given = range->count("--class-cap") > 0;
      return run_verify_range(range_opt);
    }
    return run_selftest(selftest_max_n);
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadOrder;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadOrder;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 10;
  }
}
