#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "powergraph/theorem.hpp"

namespace powergraph {

std::string_view regime_name(Regime regime);
std::string_view oracle_name(OracleMode mode);

// "a=2;s=1" for Z, "a=3;b=4;s=1;t=1" for X.
std::string params_string(const CutCandidate& candidate);

// {"kind": "Z", "params": {"a": 2, "s": 1}, "size": 6, "classes": [1, 2, 12]}
nlohmann::ordered_json candidate_to_json(const CutCandidate& candidate);

// Full report object: n, r, regime, kappa, achieving, verification. Elapsed
// time is emitted as null unless include_elapsed is set, keeping the JSON
// byte-stable across runs.
nlohmann::ordered_json report_to_json(const VerifyOutcome& outcome, bool include_elapsed = false);

std::string csv_header();
std::string csv_row(const VerifyOutcome& outcome);

}  // namespace powergraph
