#include "bilat/json_io.hpp"

#include <nlohmann/json.hpp>

#include "bilat/parser.hpp"
#include "bilat/printer.hpp"

namespace bilat {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json derivation_to_json(const Derivation& d) {
  ordered_json j;
  j["sequent"] = print_sequent(d.conclusion);
  j["rule"] = rule_name(d.rule.rule);
  if (d.rule.side)
    j["principal"] = print_formula(d.rule.principal);
  else
    j["principal"] = nullptr;
  ordered_json prems = ordered_json::array();
  for (const auto& p : d.premises) prems.push_back(derivation_to_json(p));
  j["premises"] = std::move(prems);
  return j;
}

Derivation derivation_from_json(const json& j) {
  if (!j.is_object()) throw JsonFormatError("derivation node must be an object");
  for (const char* key : {"sequent", "rule", "premises"})
    if (!j.contains(key))
      throw JsonFormatError(std::string("derivation node is missing '") + key + "'");

  Derivation d;
  try {
    d.conclusion = parse_sequent(j.at("sequent").get<std::string>());
  } catch (const ParseError& e) {
    throw JsonFormatError(std::string("bad sequent: ") + e.what());
  }
  RuleId rule;
  try {
    rule = rule_from_name(j.at("rule").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(e.what());
  }
  d.rule.rule = rule;
  d.rule.side = principal_side(rule);
  if (!schema(rule).conclusion_mode) d.rule.mode_star = d.conclusion.mode;

  const json& p = j.contains("principal") ? j.at("principal") : json(nullptr);
  if (p.is_null()) {
    if (d.rule.side)
      throw JsonFormatError(std::string(rule_name(rule)) + " needs an explicit principal");
    d.rule.principal = d.conclusion.succedent;
  } else {
    try {
      d.rule.principal = parse_formula(p.get<std::string>());
    } catch (const ParseError& e) {
      throw JsonFormatError(std::string("bad principal: ") + e.what());
    }
  }
  for (const json& prem : j.at("premises")) d.premises.push_back(derivation_from_json(prem));
  return d;
}

std::string derivation_to_string(const Derivation& d) { return derivation_to_json(d).dump(2); }

Derivation derivation_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw JsonFormatError(std::string("invalid JSON: ") + e.what());
  }
  return derivation_from_json(j);
}

ordered_json nd_to_json(const nd::NdNode& n) {
  ordered_json j;
  j["formula"] = print_formula(n.formula);
  j["line"] = n.line == nd::LineKind::Proof ? "proof" : "dual";
  j["rule"] = nd::nd_rule_name(n.rule);
  if (!n.label.empty()) j["label"] = n.label;
  if (!n.discharges.empty()) {
    ordered_json ds = ordered_json::array();
    for (const auto& d : n.discharges) {
      if (!d) {
        ds.push_back(nullptr);
        continue;
      }
      ordered_json e;
      e["label"] = d->label;
      e["kind"] = d->counter ? "counter" : "assumption";
      ds.push_back(std::move(e));
    }
    j["discharges"] = std::move(ds);
  }
  ordered_json prems = ordered_json::array();
  for (const auto& p : n.premises) prems.push_back(nd_to_json(p));
  j["premises"] = std::move(prems);
  return j;
}

nd::NdNode nd_from_json(const json& j) {
  if (!j.is_object()) throw JsonFormatError("derivation node must be an object");
  for (const char* key : {"formula", "line", "rule"})
    if (!j.contains(key))
      throw JsonFormatError(std::string("node is missing '") + key + "'");

  nd::NdNode n;
  try {
    n.formula = parse_formula(j.at("formula").get<std::string>());
  } catch (const ParseError& e) {
    throw JsonFormatError(std::string("bad formula: ") + e.what());
  }
  std::string line = j.at("line").get<std::string>();
  if (line == "proof")
    n.line = nd::LineKind::Proof;
  else if (line == "dual")
    n.line = nd::LineKind::Dual;
  else
    throw JsonFormatError("line must be 'proof' or 'dual'");
  try {
    n.rule = nd::nd_rule_from_name(j.at("rule").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(e.what());
  }
  if (j.contains("label")) n.label = j.at("label").get<std::string>();
  if (j.contains("discharges")) {
    for (const json& d : j.at("discharges")) {
      if (d.is_null()) {
        n.discharges.push_back(std::nullopt);
        continue;
      }
      nd::Discharge dis;
      dis.label = d.at("label").get<std::string>();
      std::string kind = d.value("kind", "assumption");
      if (kind == "assumption")
        dis.counter = false;
      else if (kind == "counter")
        dis.counter = true;
      else
        throw JsonFormatError("discharge kind must be 'assumption' or 'counter'");
      n.discharges.push_back(std::move(dis));
    }
  }
  if (j.contains("premises"))
    for (const json& p : j.at("premises")) n.premises.push_back(nd_from_json(p));
  return n;
}

std::string nd_to_string(const nd::NdNode& n) { return nd_to_json(n).dump(2); }

nd::NdNode nd_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw JsonFormatError(std::string("invalid JSON: ") + e.what());
  }
  return nd_from_json(j);
}

namespace {
ordered_json verdict_to_json(const SequentVerdict& v, bool with_proofs) {
  ordered_json j;
  j["label"] = v.label;
  j["sequent"] = print_sequent(v.sequent);
  j["verdict"] = v.derivable ? "derivable" : "underivable";
  if (v.derivable && with_proofs && v.proof) {
    j["proof"] = derivation_to_json(*v.proof);
  } else if (!v.derivable) {
    ordered_json stats;
    stats["universe"] = v.stats.universe;
    stats["generated"] = v.stats.generated;
    stats["subsumptions"] = v.stats.subsumptions;
    j["stats"] = std::move(stats);
  }
  return j;
}
}  // namespace

ordered_json report_to_json(const UniquenessReport& rep, bool with_proofs) {
  ordered_json j;
  j["connective"] = kind_word(rep.connective);
  j["partial"] = rep.partial;
  j["components"] = {print_formula(rep.component_a), print_formula(rep.component_b)};
  auto block = [&](const std::vector<SequentVerdict>& vs) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : vs) arr.push_back(verdict_to_json(v, with_proofs));
    return arr;
  };
  j["definitional"] = block(rep.definitional);
  if (rep.partial) {
    j["same_relation"] = block(rep.same_relation);
    j["cross_relation"] = block(rep.cross_relation);
  }
  j["unique"] = rep.unique;
  return j;
}

}  // namespace bilat
