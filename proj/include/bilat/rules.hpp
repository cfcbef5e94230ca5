#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bilat/formula.hpp"
#include "bilat/signature.hpp"

namespace bilat {

enum class RuleId : std::uint8_t {
  RfPlus, RfMinus,
  BotRMinus, BotLa, TopRPlus, TopLc,
  AndRPlus, AndLa, AndRMinus1, AndRMinus2, AndLc,
  OrRPlus1, OrRPlus2, OrLa, OrRMinus, OrLc,
  ImpRPlus, ImpLa, ImpRMinus, ImpLc,
  CoimpRPlus, CoimpLa, CoimpRMinus, CoimpLc,
};
inline constexpr std::size_t kRuleCount = 24;

// Proof rules are the R+ and La groups, dual proof rules R- and Lc.
enum class RuleGroup : std::uint8_t { Axiom, RPlus, RMinus, La, Lc };

enum class Side : std::uint8_t { Gamma, Delta };

// What a premise slot refers to, relative to the rule's principal formula
// A # B and the conclusion's succedent C.
enum class ActiveRef : std::uint8_t { A, B, C };

struct PremiseSpec {
  std::optional<Mode> mode;  // nullopt: instantiated as the conclusion's *
  ActiveRef succedent = ActiveRef::C;
  bool keeps_principal = false;  // principal stays in this premise's context
  std::vector<ActiveRef> add_gamma;  // actives placed into the premise's Gamma
  std::vector<ActiveRef> add_delta;
};

struct RuleSchema {
  RuleId id;
  const char* name;  // ASCII name used verbatim in JSON and CLI output
  Kind head;         // principal's connective; Kind::Atom for Rf axioms
  RuleGroup group;
  std::optional<Mode> conclusion_mode;  // nullopt: the *-parameterized L rules
  std::vector<PremiseSpec> premises;
};

const std::vector<RuleSchema>& rule_table();
const RuleSchema& schema(RuleId id);
const char* rule_name(RuleId id);
RuleId rule_from_name(const std::string& name);  // throws std::invalid_argument

// Side the principal occupies in the conclusion context; nullopt for rules
// whose principal is the succedent (R rules and Rf axioms).
std::optional<Side> principal_side(RuleId id);

// The partner under the dualization of the calculus; an involution.
RuleId dual_rule_id(RuleId id);

// Whether a copy with the given subset flag answers this rule's schema.
bool rule_admitted(RuleId id, Subset subset);

struct RuleInstance {
  RuleId rule;
  std::optional<Mode> mode_star;  // set iff the schema is *-parameterized
  Formula principal;              // for R rules this equals the succedent
  std::optional<Side> side;       // set for L rules

  bool operator==(const RuleInstance& o) const {
    return rule == o.rule && mode_star == o.mode_star && principal == o.principal &&
           side == o.side;
  }
};

struct RuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The premises of applying `rule` with the given principal to `goal`, read
// bottom-up. Exact multiset semantics: one occurrence of the principal is
// consumed (unless the slot retains it). Returns nullopt when the rule does
// not match the goal's shape.
std::optional<std::vector<Sequent>> premises_for(const Sequent& goal, RuleId rule,
                                                 const Formula& principal,
                                                 const Signature& sig);

// Every rule instance whose conclusion matches the goal, each paired with its
// premise list. L rules are enumerated once per distinct context formula.
// Deterministic order: axioms and R rules first, then L rules by principal
// size. Throws UnknownTagError for unregistered connective copies.
std::vector<std::pair<RuleInstance, std::vector<Sequent>>> backward_expansions(
    const Sequent& goal, const Signature& sig);

// Builds the conclusion of `inst` over the ambient context (gamma; delta) and
// verifies that the given premises match the schema exactly. For L rules the
// ambient context excludes the principal occurrence being introduced; for R
// rules it is the conclusion's full context (Rf requires its atom present).
// Zero-premise L rules need `succedent` since no premise determines C.
// Throws RuleError on shape or mode mismatch.
Sequent apply_forward(const RuleInstance& inst, const std::vector<Sequent>& premises,
                      const FormulaMultiset& gamma, const FormulaMultiset& delta,
                      Mode target_mode, const Signature& sig,
                      const std::optional<Formula>& succedent = std::nullopt);

// Swap Gamma<->Delta, flip modes, dualize all formulas; maps each rule to its
// partner schema. An involution on instances.
RuleInstance dualize_rule(const RuleInstance& inst);

}  // namespace bilat
