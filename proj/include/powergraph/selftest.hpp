#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powergraph/arith.hpp"

namespace powergraph {

// Outcome of one coded inequality evaluated over an n-sweep. A handful of
// violation descriptions is kept for reporting; the count is exact.
struct InequalityCheck {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::string> samples;  // first few violations

  void record(std::uint64_t n, const std::string& detail);
};

// Evaluates every coded inequality for each n in [lo, hi]:
//   phi_layer_monotone           phi(n/p_i) >= phi(n/p_k) for i <= k
//   product_totient_bound        (t+1) phi(prod p_i) >= prod p_i over subsets,
//                                with its exact equality cases
//   totient_inclusion_exclusion  prod - phi(prod) as an alternating sum, |I| <= 4
//   layer_vs_nongenerators       phi(n/p_j) > n/(p_j p_r) - phi(n/(p_j p_r))
//   layer_plus_union             phi(n/p_a) + |T| > |Q_r^1| for p_b > 2
//   q_union_strictly_decreasing  |Q_a^1| > |Q_b^1| and |Z_a^1| > |Z_b^1| for a < b
//   z_size_monotone_direction    |Z_a^s| strictly monotone in s, direction given
//                                by the sign of 2 phi(rad/p_a) - rad/p_a
std::vector<InequalityCheck> run_inequality_suite(std::uint64_t lo, std::uint64_t hi);

}  // namespace powergraph
