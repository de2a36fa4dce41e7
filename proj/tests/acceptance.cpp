// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are exact equality throughout.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "candidate_pool.hpp"
#include "enumerate.hpp"
#include "oracles.hpp"
#include "powergraph/selftest.hpp"
#include "powergraph/sweep.hpp"

using namespace powergraph;

namespace {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

// 1. minimum_cutset kappa equals the exhaustive subset oracle on every
//    n in [2, 500] with r >= 2 and at most 20 divisor classes.
CriterionResult criterion_exhaustive_equivalence() {
  CriterionResult result{1, "exhaustive-oracle equivalence on [2, 500]", true, ""};
  std::uint64_t checked = 0, mismatches = 0;
  for (std::uint64_t n = 2; n <= 500; ++n) {
    const Factorization f = factorize(n);
    if (f.prime_count() < 2) continue;
    const DivisorGraph g = build_divisor_graph(f);
    if (g.node_count() > kDefaultExhaustiveLimit) continue;
    const MinCutReport report = minimum_cutset(f);
    const ConnectivityResult oracle = exhaustive_min_cut(g);
    ++checked;
    if (oracle.status != CutStatus::ok || !report.kappa || oracle.kappa != *report.kappa)
      ++mismatches;
  }
  result.pass = mismatches == 0;
  result.detail = std::to_string(checked) + " orders checked, " + std::to_string(mismatches) +
                  " mismatches";
  return result;
}

// 2. minimum_cutset kappa equals the max-flow oracle for every n in
//    [2, 20000] with r >= 2 (prime powers verify vacuously).
CriterionResult criterion_maxflow_equivalence(SweepOutcome& sweep_out) {
  CriterionResult result{2, "max-flow-oracle equivalence on [2, 20000]", true, ""};
  SweepConfig config;
  config.lo = 2;
  config.hi = 20000;
  config.oracle = OracleMode::maxflow;
  config.workers = 4;
  config.abort_on_failure = false;
  sweep_out = run_sweep(config);
  result.pass = sweep_out.failure_count == 0 &&
                sweep_out.entries.size() == config.hi - config.lo + 1;
  result.detail = std::to_string(sweep_out.entries.size()) + " orders checked, " +
                  std::to_string(sweep_out.failure_count) + " failures";
  return result;
}

// 3. For every r >= 4 instance of the criterion-2 sweep the oracle value
//    equals the family minimum, some family member of weight kappa
//    disconnects, and the recovered oracle cut is itself a family class set.
CriterionResult criterion_theorem_form(const SweepOutcome& sweep) {
  CriterionResult result{3, "theorem-form check for r >= 4", true, ""};
  std::uint64_t checked = 0, failures = 0;
  for (const VerifyOutcome& entry : sweep.entries) {
    if (entry.report.r < 4) continue;
    ++checked;
    if (!entry.record.match || !entry.record.disconnection_ok || !entry.maxflow_result) {
      ++failures;
      continue;
    }
    const Factorization f = factorize(entry.report.n);
    const DivisorGraph g = build_divisor_graph(f);
    std::vector<std::uint64_t> cut_values;
    for (int idx : entry.maxflow_result->cut_classes)
      cut_values.push_back(g.nodes[static_cast<std::size_t>(idx)].value);
    std::sort(cut_values.begin(), cut_values.end());
    const bool in_family =
        std::any_of(entry.report.family.begin(), entry.report.family.end(),
                    [&](const CutCandidate& c) { return c.class_values == cut_values; });
    if (!in_family) ++failures;
  }
  result.pass = failures == 0 && checked > 0;
  result.detail =
      std::to_string(checked) + " instances checked, " + std::to_string(failures) + " failures";
  return result;
}

// 4. Frozen spot values, cross-checked by the oracles that can run.
CriterionResult criterion_spot_values() {
  CriterionResult result{4, "spot values for n = 6, 12, 30, 210, 2310", true, ""};
  std::vector<std::string> problems;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };

  const struct {
    std::uint64_t n;
    std::uint64_t kappa;
  } both_oracle_cases[] = {{6, 3}, {12, 6}, {30, 12}, {210, 70}};
  for (const auto& c : both_oracle_cases) {
    const VerifyOutcome outcome = verify_full(factorize(c.n), OracleMode::both);
    expect(outcome.record.oracle_used == OracleMode::both, "both oracles ran for n=" +
                                                               std::to_string(c.n));
    expect(outcome.report.kappa && *outcome.report.kappa == c.kappa,
           "kappa(" + std::to_string(c.n) + ") = " + std::to_string(c.kappa));
    expect(outcome.record.match && outcome.record.disconnection_ok,
           "oracles agree for n=" + std::to_string(c.n));
  }

  const VerifyOutcome v210 = verify_full(factorize(210), OracleMode::both);
  expect(!v210.report.achieving.empty() && v210.report.achieving.front().label() == "Z_4^1",
         "kappa(210) achieved by Z_4^1");

  const VerifyOutcome v2310 = verify_full(factorize(2310), OracleMode::maxflow);
  expect(v2310.report.kappa && *v2310.report.kappa == 630, "kappa(2310) = 630");
  expect(v2310.record.match && v2310.record.disconnection_ok, "oracle agrees for n=2310");
  expect(!v2310.report.achieving.empty() &&
             v2310.report.achieving.front().label() == "X_{4,5}^{1,1}",
         "kappa(2310) achieved by X_{4,5}^{1,1}");
  expect(z_size(factorize(2310), 5, 1) == 642, "|Z_5^1| = 642 for n=2310");

  result.pass = problems.empty();
  result.detail = problems.empty() ? "all frozen values confirmed" : problems.front();
  return result;
}

// 5. Every closed form equals its direct class enumeration for every valid
//    parameter tuple, n in [2, 5000].
CriterionResult criterion_formula_enumeration() {
  CriterionResult result{5, "formula/enumeration agreement on [2, 5000]", true, ""};
  std::uint64_t tuples = 0, mismatches = 0;
  for (std::uint64_t n = 2; n <= 5000; ++n) {
    const Factorization f = factorize(n);
    const int r = f.prime_count();
    const testenum::DivisorTable table = testenum::make_divisor_table(n);
    auto expect = [&](std::uint64_t formula, std::uint64_t enumeration) {
      ++tuples;
      if (formula != enumeration) ++mismatches;
    };

    // layer sums
    for (int a = 1; a <= r; ++a) {
      const int na = static_cast<int>(f.exponent(a));
      std::vector<std::uint64_t> layer_phi(static_cast<std::size_t>(na) + 1);
      std::uint64_t power = 1;
      for (int l = 0; l <= na; ++l) {
        layer_phi[static_cast<std::size_t>(l)] = testoracle::phi(n / power);
        power *= f.prime(a);
      }
      for (int k = 0; k <= na; ++k) {
        std::uint64_t partial = 0;
        for (int s = k; s <= na; ++s) {
          partial += layer_phi[static_cast<std::size_t>(s)];
          expect(partial_totient_sum(f, a, k, s), partial);
        }
      }
    }
    for (int a = 1; a <= r; ++a) {
      for (int b = 1; b <= r; ++b) {
        if (a == b) continue;
        const int na = static_cast<int>(f.exponent(a));
        const int nb = static_cast<int>(f.exponent(b));
        for (int s = 0; s <= na; ++s) {
          for (int t = 0; t <= nb; ++t) {
            std::uint64_t direct = 0;
            std::uint64_t pa = 1;
            for (int k = 0; k <= na; ++k) {
              std::uint64_t pb = 1;
              for (int l = 0; l <= nb; ++l) {
                if (k >= s && l >= t) direct += testoracle::phi(n / (pa * pb));
                pb *= f.prime(b);
              }
              pa *= f.prime(a);
            }
            expect(double_totient_sum(f, a, b, s, t), direct);
          }
        }
      }
    }

    // subgroup unions
    if (r >= 2) {
      for (int a = 1; a <= r; ++a) {
        for (int s = 1; s <= static_cast<int>(f.exponent(a)); ++s) {
          expect(q_size(f, a, s), testenum::subgroup_union(table, testenum::q_orders(f, a, s)));
          for (int b = 1; b <= r; ++b) {
            if (b == a) continue;
            expect(q_ab_size(f, a, b, s),
                   testenum::subgroup_union(table, testenum::q_orders(f, a, s, b)));
          }
        }
      }
      for (int a = 1; a <= r; ++a) {
        for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
          if (mask & (1u << (a - 1))) continue;
          std::vector<int> index_set;
          std::vector<std::uint64_t> orders;
          for (int i = 1; i <= r; ++i) {
            if (mask & (1u << (i - 1))) {
              index_set.push_back(i);
              orders.push_back(n / (f.prime(i) * f.prime(a)));
            }
          }
          expect(union_subgroup_size(f, index_set, a),
                 testenum::subgroup_union(table, orders));
        }
      }
    }

    // candidate sizes and boundary layers
    if (r >= 2) {
      for (int a = 1; a <= r; ++a) {
        for (int s = 1; s <= static_cast<int>(f.exponent(a)); ++s)
          expect(z_size(f, a, s), testenum::enumerate_z(f, table, a, s));
      }
      for (int a = 1; a <= r; ++a) {
        for (int b = 1; b <= r; ++b) {
          if (a == b) continue;
          const int na = static_cast<int>(f.exponent(a));
          const int nb = static_cast<int>(f.exponent(b));
          for (int s = 1; s <= na; ++s) {
            for (int t = 1; t <= nb; ++t) {
              if (r >= 3) expect(x_size(f, a, b, s, t), testenum::enumerate_x(f, table, a, b, s, t));
              const BoundaryLayers layers = boundary_layers(f, a, b, s, t);
              std::uint64_t l_direct = 0, m_direct = 0, n_direct = 0;
              std::uint64_t pa_k = 1;
              for (int k = 0; k <= na; ++k) {
                std::uint64_t pb_l = 1;
                for (int l = 0; l <= nb; ++l) {
                  if (k >= s && l >= t && !(k == s && l == t))
                    l_direct += testoracle::phi(n / (pa_k * pb_l));
                  if (k > s && l == t) m_direct += testoracle::phi(n / (pa_k * pb_l));
                  if (k == s && l > t) n_direct += testoracle::phi(n / (pa_k * pb_l));
                  pb_l *= f.prime(b);
                }
                pa_k *= f.prime(a);
              }
              expect(layers.l_size, l_direct);
              expect(layers.m_size, m_direct);
              expect(layers.n_size, n_direct);
            }
          }
        }
      }
    }
  }
  result.pass = mismatches == 0;
  result.detail =
      std::to_string(tuples) + " tuples checked, " + std::to_string(mismatches) + " mismatches";
  return result;
}

// 6. The coded inequality suite holds with zero violations on [2, 5000].
CriterionResult criterion_inequalities() {
  CriterionResult result{6, "inequality suite on [2, 5000]", true, ""};
  const auto checks = run_inequality_suite(2, 5000);
  std::uint64_t instances = 0, violations = 0;
  for (const InequalityCheck& check : checks) {
    instances += check.instances;
    violations += check.violation_count;
  }
  result.pass = violations == 0;
  result.detail = std::to_string(instances) + " instances across " +
                  std::to_string(checks.size()) + " inequalities, " +
                  std::to_string(violations) + " violations";
  return result;
}

// 7. Achiever counts: n_2 tying class sets for r = 2 with p_1 = 2, exactly
//    one otherwise (r = 2 with p_1 >= 3, and r = 3), against the pool of all
//    Z_a^s and X_{a,b}^{s,t} comparison candidates, for all such n <= 20000.
CriterionResult criterion_regime_counts() {
  CriterionResult result{7, "regime achiever counts on [2, 20000]", true, ""};
  std::uint64_t checked = 0, failures = 0;
  for (std::uint64_t n = 2; n <= 20000; ++n) {
    const Factorization f = factorize(n);
    const int r = f.prime_count();
    if (r != 2 && r != 3) continue;
    ++checked;
    const auto classes = divisor_classes(f);
    const MinCutReport report = minimum_cutset(f);
    const auto pool = testpool::comparison_pool(f, classes);
    const std::size_t distinct = testpool::distinct_achievers(pool, *report.kappa);
    const std::size_t expected = (r == 2 && f.prime(1) == 2) ? f.exponent(2) : 1;
    if (distinct != expected) ++failures;
  }
  result.pass = failures == 0;
  result.detail =
      std::to_string(checked) + " orders checked, " + std::to_string(failures) + " failures";
  return result;
}

void report(const CriterionResult& r, double seconds) {
  std::printf("[%s] criterion %d: %s (%s; %.1fs)\n", r.pass ? "PASS" : "FAIL", r.id,
              r.title.c_str(), r.detail.c_str(), seconds);
  std::fflush(stdout);
}

}  // namespace

int main() {
  int failures = 0;
  SweepOutcome sweep;
  const auto timed = [&](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    const CriterionResult r = fn();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(r, seconds);
    if (!r.pass) ++failures;
  };

  timed([] { return criterion_exhaustive_equivalence(); });
  timed([&] { return criterion_maxflow_equivalence(sweep); });
  timed([&] { return criterion_theorem_form(sweep); });
  timed([] { return criterion_spot_values(); });
  timed([] { return criterion_formula_enumeration(); });
  timed([] { return criterion_inequalities(); });
  timed([] { return criterion_regime_counts(); });

  if (failures == 0)
    std::printf("acceptance: all 7 criteria passed\n");
  else
    std::printf("acceptance: %d criteria failed\n", failures);
  return failures;
}
