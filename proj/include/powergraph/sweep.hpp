#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powergraph/theorem.hpp"

namespace powergraph {

enum class OutputFormat { table, json, csv };

struct SweepConfig {
  std::uint64_t lo = 2;
  std::uint64_t hi = 2;  // inclusive
  OracleMode oracle = OracleMode::maxflow;
  std::size_t class_cap = kDefaultClassCap;
  unsigned workers = 1;
  int exhaustive_limit = kDefaultExhaustiveLimit;
  bool abort_on_failure = true;
  std::string output_path;  // empty = stdout
  OutputFormat format = OutputFormat::table;

  void validate() const;  // lo >= 2, hi >= lo, workers >= 1, class_cap >= 4
};

struct SweepOutcome {
  std::vector<VerifyOutcome> entries;  // ascending n; truncated after an abort
  std::size_t failure_count = 0;       // mismatches plus failed disconnections
  bool aborted = false;
};

// Verifies every n in [lo, hi] under a bounded worker pool. A mismatch (or a
// candidate that fails to disconnect) stops the dispatch of further n once
// abort_on_failure is set; records already produced are kept.
SweepOutcome run_sweep(const SweepConfig& config);

}  // namespace powergraph
