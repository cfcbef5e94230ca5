#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "bilat/nd.hpp"
#include "bilat/uniqueness.hpp"

namespace bilat {

struct JsonFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"sequent": "...", "rule": "<RuleId>", "principal": "<formula>"|null,
//  "premises": [...]} with rule names exactly as in the rule table. The
// principal may be null for rules whose principal is the succedent.
nlohmann::ordered_json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const nlohmann::json& j);

std::string derivation_to_string(const Derivation& d);  // pretty-printed JSON
Derivation derivation_from_string(const std::string& text);

// {"formula": "...", "line": "proof"|"dual", "rule": "...",
//  "discharges": [{"label": "u", "kind": "assumption"|"counter"}|null, ...],
//  "label": "u" (leaves), "premises": [...]}
nlohmann::ordered_json nd_to_json(const nd::NdNode& n);
nd::NdNode nd_from_json(const nlohmann::json& j);

std::string nd_to_string(const nd::NdNode& n);
nd::NdNode nd_from_string(const std::string& text);

nlohmann::ordered_json report_to_json(const UniquenessReport& rep, bool with_proofs);

}  // namespace bilat
