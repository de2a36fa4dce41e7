#include "powergraph/report_io.hpp"

namespace powergraph {

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::prime_power: return "prime_power";
    case Regime::r2_p1_odd: return "r2_p1_odd";
    case Regime::r2_p1_even: return "r2_p1_even";
    case Regime::r3_p1_odd: return "r3_p1_odd";
    case Regime::r3_p1_even: return "r3_p1_even";
    case Regime::r_ge_4: return "r_ge_4";
  }
  return "unknown";
}

std::string_view oracle_name(OracleMode mode) {
  switch (mode) {
    case OracleMode::none: return "none";
    case OracleMode::maxflow: return "maxflow";
    case OracleMode::exhaustive: return "exhaustive";
    case OracleMode::both: return "both";
  }
  return "unknown";
}

std::string params_string(const CutCandidate& c) {
  if (c.kind == CandidateKind::Z) return "a=" + std::to_string(c.a) + ";s=" + std::to_string(c.s);
  return "a=" + std::to_string(c.a) + ";b=" + std::to_string(c.b) + ";s=" + std::to_string(c.s) +
         ";t=" + std::to_string(c.t);
}

nlohmann::ordered_json candidate_to_json(const CutCandidate& c) {
  nlohmann::ordered_json params;
  params["a"] = c.a;
  if (c.kind == CandidateKind::X) params["b"] = c.b;
  params["s"] = c.s;
  if (c.kind == CandidateKind::X) params["t"] = c.t;
  nlohmann::ordered_json j;
  j["kind"] = c.kind == CandidateKind::Z ? "Z" : "X";
  j["params"] = std::move(params);
  j["size"] = c.size;
  j["classes"] = c.class_values;
  return j;
}

nlohmann::ordered_json report_to_json(const VerifyOutcome& outcome, bool include_elapsed) {
  const MinCutReport& report = outcome.report;
  const VerificationRecord& record = outcome.record;
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["r"] = report.r;
  j["regime"] = regime_name(report.regime);
  if (report.kappa)
    j["kappa"] = *report.kappa;
  else
    j["kappa"] = nullptr;
  nlohmann::ordered_json achieving = nlohmann::ordered_json::array();
  for (const CutCandidate& c : report.achieving) achieving.push_back(candidate_to_json(c));
  j["achieving"] = std::move(achieving);
  nlohmann::ordered_json verification;
  if (record.oracle_kappa)
    verification["oracle_kappa"] = *record.oracle_kappa;
  else
    verification["oracle_kappa"] = nullptr;
  verification["oracle_used"] = oracle_name(record.oracle_used);
  verification["match"] = record.match;
  verification["disconnection_ok"] = record.disconnection_ok;
  if (include_elapsed)
    verification["elapsed_ms"] = record.elapsed.count() / 1000;
  else
    verification["elapsed_ms"] = nullptr;
  j["verification"] = std::move(verification);
  return j;
}

std::string csv_header() { return "n,r,regime,kappa,achieving_kind,achieving_params,match"; }

std::string csv_row(const VerifyOutcome& outcome) {
  const MinCutReport& report = outcome.report;
  std::string row = std::to_string(report.n) + "," + std::to_string(report.r) + "," +
                    std::string(regime_name(report.regime)) + ",";
  if (report.kappa) row += std::to_string(*report.kappa);
  row += ",";
  if (!report.achieving.empty()) {
    const CutCandidate& first = report.achieving.front();
    row += first.kind == CandidateKind::Z ? "Z" : "X";
    row += ",";
    row += params_string(first);
  } else {
    row += ",";
  }
  row += ",";
  row += outcome.record.match ? "true" : "false";
  return row;
}

}  // namespace powergraph
