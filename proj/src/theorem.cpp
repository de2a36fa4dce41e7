#include "powergraph/theorem.hpp"

#include <algorithm>

namespace powergraph {

Regime classify_regime(const Factorization& f) {
  const int r = f.prime_count();
  if (r == 1) return Regime::prime_power;
  const bool p1_even = f.prime(1) == 2;
  if (r == 2) return p1_even ? Regime::r2_p1_even : Regime::r2_p1_odd;
  if (r == 3) return p1_even ? Regime::r3_p1_even : Regime::r3_p1_odd;
  return Regime::r_ge_4;
}

std::vector<CutCandidate> candidate_family(const Factorization& f,
                                           std::span<const DivisorClass> classes) {
  const int r = f.prime_count();
  std::vector<CutCandidate> family;
  if (r == 1) return family;
  if (r == 2) {
    if (f.prime(1) >= 3) {
      family.push_back(z_candidate(f, classes, 2, 1));
    } else {
      for (int s = 1; s <= static_cast<int>(f.exponent(2)); ++s)
        family.push_back(z_candidate(f, classes, 2, s));
    }
    return family;
  }
  if (r == 3) {
    const int s = f.prime(1) >= 3 ? 1 : static_cast<int>(f.exponent(3));
    family.push_back(z_candidate(f, classes, 3, s));
    return family;
  }
  family.push_back(z_candidate(f, classes, r, 1));
  for (int a = 1; a <= r; ++a) {
    if (f.exponent(a) >= 2)
      family.push_back(z_candidate(f, classes, a, static_cast<int>(f.exponent(a))));
  }
  for (int a = 1; a <= r; ++a) {
    for (int b = 1; b <= r; ++b) {
      if (a == b) continue;
      for (int s = 1; s <= static_cast<int>(f.exponent(a)); ++s) {
        for (int t = 1; t <= static_cast<int>(f.exponent(b)); ++t)
          family.push_back(x_candidate(f, classes, a, b, s, t));
      }
    }
  }
  return family;
}

MinCutReport minimum_cutset(const Factorization& f, std::size_t class_cap) {
  MinCutReport report;
  report.n = f.n;
  report.r = f.prime_count();
  report.regime = classify_regime(f);
  const auto classes = divisor_classes(f, class_cap);
  report.family = candidate_family(f, classes);
  report.family_size = report.family.size();
  if (!report.family.empty()) {
    std::uint64_t best = report.family.front().size;
    for (const CutCandidate& c : report.family) best = std::min(best, c.size);
    report.kappa = best;
    for (const CutCandidate& c : report.family) {
      if (c.size == best) report.achieving.push_back(c);
    }
    std::sort(report.achieving.begin(), report.achieving.end(), candidate_order_less);
  }
  return report;
}

VerifyOutcome verify_full(const Factorization& f, OracleMode mode, std::size_t class_cap,
                          int exhaustive_limit) {
  const auto start = std::chrono::steady_clock::now();
  VerifyOutcome out;
  out.report = minimum_cutset(f, class_cap);

  VerificationRecord& rec = out.record;
  rec.n = f.n;
  rec.formula_kappa = out.report.kappa;

  if (mode != OracleMode::none) {
    const DivisorGraph g = build_divisor_graph(f, class_cap);
    const bool want_flow = mode == OracleMode::maxflow || mode == OracleMode::both;
    const bool want_exhaustive =
        (mode == OracleMode::exhaustive || mode == OracleMode::both) &&
        g.node_count() <= exhaustive_limit;
    if (want_flow) out.maxflow_result = weighted_vertex_connectivity(g);
    if (want_exhaustive) out.exhaustive_result = exhaustive_min_cut(g, exhaustive_limit);

    if (out.maxflow_result && out.exhaustive_result)
      rec.oracle_used = OracleMode::both;
    else if (out.maxflow_result)
      rec.oracle_used = OracleMode::maxflow;
    else if (out.exhaustive_result)
      rec.oracle_used = OracleMode::exhaustive;

    const auto agrees = [&](const ConnectivityResult& oracle) {
      if (out.report.kappa.has_value())
        return oracle.status == CutStatus::ok && oracle.kappa == *out.report.kappa;
      return oracle.status == CutStatus::complete_graph;
    };
    for (const auto& result : {out.maxflow_result, out.exhaustive_result}) {
      if (!result) continue;
      if (result->status == CutStatus::ok && !rec.oracle_kappa) rec.oracle_kappa = result->kappa;
      if (!agrees(*result)) rec.match = false;
    }

    for (const CutCandidate& c : out.report.achieving) {
      try {
        check_separation(g, c);
      } catch (const std::logic_error&) {
        rec.disconnection_ok = false;
      }
    }
  }

  rec.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return out;
}

VerificationRecord verify(const Factorization& f, OracleMode mode, std::size_t class_cap,
                          int exhaustive_limit) {
  return verify_full(f, mode, class_cap, exhaustive_limit).record;
}

}  // namespace powergraph
