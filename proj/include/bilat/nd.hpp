#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bilat/engine.hpp"

namespace bilat::nd {

// Proof nodes carry a single inference line, dual proof nodes a double line.
enum class LineKind : std::uint8_t { Proof, Dual };

enum class NdRule : std::uint8_t {
  Assumption, Counterassumption,
  BotE, TopEd,
  AndI, AndE1, AndE2, AndId1, AndId2, AndEd,
  OrI1, OrI2, OrE, OrId, OrEd1, OrEd2,
  ImpI, ImpE, ImpId, ImpEd1, ImpEd2,
  CoimpI, CoimpE1, CoimpE2, CoimpId, CoimpEd,
};

const char* nd_rule_name(NdRule r);
NdRule nd_rule_from_name(const std::string& name);

struct Discharge {
  std::string label;
  bool counter = false;  // single brackets discharge assumptions, double ones
                         // counterassumptions
};

struct NdNode {
  Formula formula;
  LineKind line = LineKind::Proof;
  NdRule rule = NdRule::Assumption;
  std::string label;  // leaves only
  // Positional per the rule's discharge slots; nullopt leaves a slot unused.
  std::vector<std::optional<Discharge>> discharges;
  std::vector<NdNode> premises;
};

NdNode assume(Formula f, std::string label);
NdNode counter_assume(Formula f, std::string label);

struct OpenPair {
  FormulaMultiset gamma;  // open assumptions, one entry per label class
  FormulaMultiset delta;  // open counterassumptions
};

struct NdCheckResult {
  bool ok = false;
  OpenPair open;
  Formula conclusion;
  LineKind line = LineKind::Proof;
  std::vector<std::size_t> path;  // to the offending node when !ok
  std::string reason;
  std::vector<std::string> lints;  // vacuous discharges and the like
};

// Validates every node against the rule table: premise line types, active
// formulas, and discharge placement. Returns the multiset pair of open
// assumption/counterassumption label classes. Discharge is label-based and
// removes a whole class from the designated premise subtree; vacuous
// discharge is permitted and reported as a lint.
NdCheckResult nd_check(const NdNode& root);
NdCheckResult nd_check(const NdNode& root, const Signature& sig);

// Local soundness of the transcribed rule table: each rule is instantiated
// with fresh atoms, its premises stood up as identity leaves, and the
// conclusion sequent confirmed derivable. Throws std::logic_error naming the
// first rule that fails. Runs once per process before any checking.
void validate_nd_rules();

}  // namespace bilat::nd
