#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "powergraph/candidates.hpp"
#include "powergraph/graph.hpp"

namespace powergraph {

enum class Regime { prime_power, r2_p1_odd, r2_p1_even, r3_p1_odd, r3_p1_even, r_ge_4 };

// Pure function of (r, p_1); total over valid factorizations.
Regime classify_regime(const Factorization& f);

// The candidate pool whose minimum realizes kappa:
//   r = 1            -> empty (complete graph)
//   r = 2, p_1 >= 3  -> { Z_2^1 }
//   r = 2, p_1 = 2   -> { Z_2^s : s in [n_2] }
//   r = 3, p_1 >= 3  -> { Z_3^1 }
//   r = 3, p_1 = 2   -> { Z_3^{n_3} }
//   r >= 4           -> { Z_r^1 } u { Z_a^{n_a} : n_a >= 2 }
//                       u { X_{a,b}^{s,t} : a != b, s in [n_a], t in [n_b] }
std::vector<CutCandidate> candidate_family(const Factorization& f,
                                           std::span<const DivisorClass> classes);

struct MinCutReport {
  std::uint64_t n = 0;
  int r = 0;
  Regime regime = Regime::prime_power;
  std::optional<std::uint64_t> kappa;  // empty for prime powers
  std::vector<CutCandidate> achieving;  // every family member of size kappa, ordered
  std::vector<CutCandidate> family;     // the full pool, construction order
  std::size_t family_size = 0;
};

MinCutReport minimum_cutset(const Factorization& f, std::size_t class_cap = kDefaultClassCap);

enum class OracleMode { none, maxflow, exhaustive, both };

struct VerificationRecord {
  std::uint64_t n = 0;
  std::optional<std::uint64_t> formula_kappa;
  std::optional<std::uint64_t> oracle_kappa;
  OracleMode oracle_used = OracleMode::none;  // what actually ran
  bool match = true;                          // vacuous when no oracle ran
  bool disconnection_ok = true;
  std::chrono::microseconds elapsed{0};
};

struct VerifyOutcome {
  MinCutReport report;
  VerificationRecord record;
  std::optional<ConnectivityResult> maxflow_result;
  std::optional<ConnectivityResult> exhaustive_result;
};

// Runs minimum_cutset plus the selected oracle(s). Oracles that cannot run
// (exhaustive beyond its class limit) are skipped and oracle_used reflects
// what ran. With any oracle selected, every achieving candidate is also
// checked to disconnect the graph.
VerifyOutcome verify_full(const Factorization& f, OracleMode mode,
                          std::size_t class_cap = kDefaultClassCap,
                          int exhaustive_limit = kDefaultExhaustiveLimit);

VerificationRecord verify(const Factorization& f, OracleMode mode,
                          std::size_t class_cap = kDefaultClassCap,
                          int exhaustive_limit = kDefaultExhaustiveLimit);

}  // namespace powergraph
