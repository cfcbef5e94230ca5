#include "bilat/rules.hpp"

#include <algorithm>
#include <stdexcept>

#include "bilat/printer.hpp"

namespace bilat {

namespace {

constexpr auto kStar = std::nullopt;  // mode instantiated at application

PremiseSpec prem(std::optional<Mode> mode, ActiveRef succ,
                 std::vector<ActiveRef> add_gamma = {},
                 std::vector<ActiveRef> add_delta = {}, bool keeps = false) {
  PremiseSpec p;
  p.mode = mode;
  p.succedent = succ;
  p.add_gamma = std::move(add_gamma);
  p.add_delta = std::move(add_delta);
  p.keeps_principal = keeps;
  return p;
}

std::vector<RuleSchema> build_table() {
  using enum ActiveRef;
  const auto P = Mode::Plus;
  const auto M = Mode::Minus;
  std::vector<RuleSchema> t;
  t.reserve(kRuleCount);

  // Axioms, atomic succedent only:
  //   (G, p; D) |-+ p   Rf+        (G; D, p) |-- p   Rf-
  t.push_back({RuleId::RfPlus, "Rf+", Kind::Atom, RuleGroup::Axiom, P, {}});
  t.push_back({RuleId::RfMinus, "Rf-", Kind::Atom, RuleGroup::Axiom, M, {}});

  //   (G; D) |-- bot   BotR-       (G, bot; D) |-* C   BotLa
  //   (G; D) |-+ top   TopR+       (G; D, top) |-* C   TopLc
  t.push_back({RuleId::BotRMinus, "BotR-", Kind::Bot, RuleGroup::RMinus, M, {}});
  t.push_back({RuleId::BotLa, "BotLa", Kind::Bot, RuleGroup::La, kStar, {}});
  t.push_back({RuleId::TopRPlus, "TopR+", Kind::Top, RuleGroup::RPlus, P, {}});
  t.push_back({RuleId::TopLc, "TopLc", Kind::Top, RuleGroup::Lc, kStar, {}});

  //   (G; D) |-+ A   (G; D) |-+ B  /  (G; D) |-+ A & B              AndR+
  //   (G, A, B; D) |-* C  /  (G, A & B; D) |-* C                    AndLa
  //   (G; D) |-- A  /  (G; D) |-- A & B                             AndR-1
  //   (G; D) |-- B  /  (G; D) |-- A & B                             AndR-2
  //   (G; D, A) |-* C   (G; D, B) |-* C  /  (G; D, A & B) |-* C     AndLc
  t.push_back({RuleId::AndRPlus, "AndR+", Kind::And, RuleGroup::RPlus, P,
               {prem(P, A), prem(P, B)}});
  t.push_back({RuleId::AndLa, "AndLa", Kind::And, RuleGroup::La, kStar,
               {prem(kStar, C, {A, B}, {})}});
  t.push_back({RuleId::AndRMinus1, "AndR-1", Kind::And, RuleGroup::RMinus, M, {prem(M, A)}});
  t.push_back({RuleId::AndRMinus2, "AndR-2", Kind::And, RuleGroup::RMinus, M, {prem(M, B)}});
  t.push_back({RuleId::AndLc, "AndLc", Kind::And, RuleGroup::Lc, kStar,
               {prem(kStar, C, {}, {A}), prem(kStar, C, {}, {B})}});

  //   (G; D) |-+ A  /  (G; D) |-+ A | B                             OrR+1
  //   (G; D) |-+ B  /  (G; D) |-+ A | B                             OrR+2
  //   (G, A; D) |-* C   (G, B; D) |-* C  /  (G, A | B; D) |-* C     OrLa
  //   (G; D) |-- A   (G; D) |-- B  /  (G; D) |-- A | B              OrR-
  //   (G; D, A, B) |-* C  /  (G; D, A | B) |-* C                    OrLc
  t.push_back({RuleId::OrRPlus1, "OrR+1", Kind::Or, RuleGroup::RPlus, P, {prem(P, A)}});
  t.push_back({RuleId::OrRPlus2, "OrR+2", Kind::Or, RuleGroup::RPlus, P, {prem(P, B)}});
  t.push_back({RuleId::OrLa, "OrLa", Kind::Or, RuleGroup::La, kStar,
               {prem(kStar, C, {A}, {}), prem(kStar, C, {B}, {})}});
  t.push_back({RuleId::OrRMinus, "OrR-", Kind::Or, RuleGroup::RMinus, M,
               {prem(M, A), prem(M, B)}});
  t.push_back({RuleId::OrLc, "OrLc", Kind::Or, RuleGroup::Lc, kStar,
               {prem(kStar, C, {}, {A, B})}});

  //   (G, A; D) |-+ B  /  (G; D) |-+ A -> B                         ImpR+
  //   (G, A -> B; D) |-+ A   (G, B; D) |-* C  /  (G, A -> B; D) |-* C   ImpLa
  //   (G; D) |-+ A   (G; D) |-- B  /  (G; D) |-- A -> B             ImpR-
  //   (G, A; D, B) |-* C  /  (G; D, A -> B) |-* C                   ImpLc
  t.push_back({RuleId::ImpRPlus, "ImpR+", Kind::Imp, RuleGroup::RPlus, P,
               {prem(P, B, {A}, {})}});
  t.push_back({RuleId::ImpLa, "ImpLa", Kind::Imp, RuleGroup::La, kStar,
               {prem(P, A, {}, {}, true), prem(kStar, C, {B}, {})}});
  t.push_back({RuleId::ImpRMinus, "ImpR-", Kind::Imp, RuleGroup::RMinus, M,
               {prem(P, A), prem(M, B)}});
  t.push_back({RuleId::ImpLc, "ImpLc", Kind::Imp, RuleGroup::Lc, kStar,
               {prem(kStar, C, {A}, {B})}});

  //   (G; D) |-+ A   (G; D) |-- B  /  (G; D) |-+ A -< B             CoimpR+
  //   (G, A; D, B) |-* C  /  (G, A -< B; D) |-* C                   CoimpLa
  //   (G; D, B) |-- A  /  (G; D) |-- A -< B                         CoimpR-
  //   (G; D, A -< B) |-- B   (G; D, A) |-* C  /  (G; D, A -< B) |-* C   CoimpLc
  t.push_back({RuleId::CoimpRPlus, "CoimpR+", Kind::Coimp, RuleGroup::RPlus, P,
               {prem(P, A), prem(M, B)}});
  t.push_back({RuleId::CoimpLa, "CoimpLa", Kind::Coimp, RuleGroup::La, kStar,
               {prem(kStar, C, {A}, {B})}});
  t.push_back({RuleId::CoimpRMinus, "CoimpR-", Kind::Coimp, RuleGroup::RMinus, M,
               {prem(M, A, {}, {B})}});
  t.push_back({RuleId::CoimpLc, "CoimpLc", Kind::Coimp, RuleGroup::Lc, kStar,
               {prem(M, B, {}, {}, true), prem(kStar, C, {}, {A})}});

  for (std::size_t i = 0; i < t.size(); ++i)
    if (static_cast<std::size_t>(t[i].id) != i)
      throw std::logic_error("rule table out of order");
  return t;
}

}  // namespace

const std::vector<RuleSchema>& rule_table() {
  static const std::vector<RuleSchema> table = build_table();
  return table;
}

const RuleSchema& schema(RuleId id) { return rule_table()[static_cast<std::size_t>(id)]; }

const char* rule_name(RuleId id) { return schema(id).name; }

RuleId rule_from_name(const std::string& name) {
  for (const auto& s : rule_table())
    if (name == s.name) return s.id;
  throw std::invalid_argument("unknown rule name '" + name + "'");
}

std::optional<Side> principal_side(RuleId id) {
  switch (schema(id).group) {
    case RuleGroup::La: return Side::Gamma;
    case RuleGroup::Lc: return Side::Delta;
    default: return std::nullopt;
  }
}

RuleId dual_rule_id(RuleId id) {
  switch (id) {
    case RuleId::RfPlus: return RuleId::RfMinus;
    case RuleId::RfMinus: return RuleId::RfPlus;
    case RuleId::TopRPlus: return RuleId::BotRMinus;
    case RuleId::BotRMinus: return RuleId::TopRPlus;
    case RuleId::BotLa: return RuleId::TopLc;
    case RuleId::TopLc: return RuleId::BotLa;
    case RuleId::AndRPlus: return RuleId::OrRMinus;
    case RuleId::OrRMinus: return RuleId::AndRPlus;
    case RuleId::AndLa: return RuleId::OrLc;
    case RuleId::OrLc: return RuleId::AndLa;
    case RuleId::AndRMinus1: return RuleId::OrRPlus1;
    case RuleId::OrRPlus1: return RuleId::AndRMinus1;
    case RuleId::AndRMinus2: return RuleId::OrRPlus2;
    case RuleId::OrRPlus2: return RuleId::AndRMinus2;
    case RuleId::AndLc: return RuleId::OrLa;
    case RuleId::OrLa: return RuleId::AndLc;
    case RuleId::ImpRPlus: return RuleId::CoimpRMinus;
    case RuleId::CoimpRMinus: return RuleId::ImpRPlus;
    case RuleId::ImpLa: return RuleId::CoimpLc;
    case RuleId::CoimpLc: return RuleId::ImpLa;
    case RuleId::ImpRMinus: return RuleId::CoimpRPlus;
    case RuleId::CoimpRPlus: return RuleId::ImpRMinus;
    case RuleId::ImpLc: return RuleId::CoimpLa;
    case RuleId::CoimpLa: return RuleId::ImpLc;
  }
  throw std::logic_error("dual_rule_id: bad rule");
}

bool rule_admitted(RuleId id, Subset subset) {
  switch (schema(id).group) {
    case RuleGroup::Axiom: return true;
    case RuleGroup::RPlus:
    case RuleGroup::La: return subset != Subset::DualOnly;
    case RuleGroup::RMinus:
    case RuleGroup::Lc: return subset != Subset::ProofOnly;
  }
  return false;
}

namespace {

Formula resolve(ActiveRef r, const Formula& principal, const Formula& goal_succ) {
  switch (r) {
    case ActiveRef::A: return principal.left();
    case ActiveRef::B: return principal.right();
    case ActiveRef::C: return goal_succ;
  }
  throw std::logic_error("resolve: bad active ref");
}

bool tag_admits(RuleId id, const Formula& principal, const Signature& sig) {
  const RuleSchema& s = schema(id);
  if (s.head == Kind::Atom) return principal.kind() == Kind::Atom;
  if (principal.kind() != s.head) return false;
  return rule_admitted(id, sig.subset(principal.kind(), principal.copy()));
}

}  // namespace

std::optional<std::vector<Sequent>> premises_for(const Sequent& goal, RuleId rule,
                                                 const Formula& principal,
                                                 const Signature& sig) {
  const RuleSchema& s = schema(rule);
  if (!tag_admits(rule, principal, sig)) return std::nullopt;
  if (s.conclusion_mode && *s.conclusion_mode != goal.mode) return std::nullopt;

  auto side = principal_side(rule);
  if (!side) {
    // Principal is the succedent; Rf additionally demands its atom in context.
    if (principal != goal.succedent) return std::nullopt;
    if (rule == RuleId::RfPlus && !goal.gamma.contains(principal)) return std::nullopt;
    if (rule == RuleId::RfMinus && !goal.delta.contains(principal)) return std::nullopt;
  } else {
    const auto& ctx = *side == Side::Gamma ? goal.gamma : goal.delta;
    if (!ctx.contains(principal)) return std::nullopt;
  }

  std::vector<Sequent> out;
  out.reserve(s.premises.size());
  for (const PremiseSpec& p : s.premises) {
    Sequent prem;
    prem.mode = p.mode ? *p.mode : goal.mode;
    prem.gamma = goal.gamma;
    prem.delta = goal.delta;
    if (side && !p.keeps_principal) {
      auto& ctx = *side == Side::Gamma ? prem.gamma : prem.delta;
      ctx.erase_one(principal);
    }
    for (ActiveRef r : p.add_gamma) prem.gamma.insert(resolve(r, principal, goal.succedent));
    for (ActiveRef r : p.add_delta) prem.delta.insert(resolve(r, principal, goal.succedent));
    prem.succedent = resolve(p.succedent, principal, goal.succedent);
    out.push_back(std::move(prem));
  }
  return out;
}

std::vector<std::pair<RuleInstance, std::vector<Sequent>>> backward_expansions(
    const Sequent& goal, const Signature& sig) {
  sig.validate(goal);
  std::vector<std::pair<RuleInstance, std::vector<Sequent>>> out;

  auto push = [&](RuleId id, const Formula& principal) {
    auto prems = premises_for(goal, id, principal, sig);
    if (!prems) return;
    RuleInstance inst;
    inst.rule = id;
    inst.principal = principal;
    inst.side = principal_side(id);
    if (!schema(id).conclusion_mode) inst.mode_star = goal.mode;
    out.emplace_back(std::move(inst), std::move(*prems));
  };

  // Axioms and R rules on the succedent first.
  const Formula& succ = goal.succedent;
  switch (succ.kind()) {
    case Kind::Atom:
      push(RuleId::RfPlus, succ);
      push(RuleId::RfMinus, succ);
      break;
    case Kind::Top: push(RuleId::TopRPlus, succ); break;
    case Kind::Bot: push(RuleId::BotRMinus, succ); break;
    case Kind::And:
      push(RuleId::AndRPlus, succ);
      push(RuleId::AndRMinus1, succ);
      push(RuleId::AndRMinus2, succ);
      break;
    case Kind::Or:
      push(RuleId::OrRPlus1, succ);
      push(RuleId::OrRPlus2, succ);
      push(RuleId::OrRMinus, succ);
      break;
    case Kind::Imp:
      push(RuleId::ImpRPlus, succ);
      push(RuleId::ImpRMinus, succ);
      break;
    case Kind::Coimp:
      push(RuleId::CoimpRPlus, succ);
      push(RuleId::CoimpRMinus, succ);
      break;
  }

  // L rules, once per distinct context formula, smaller principals first.
  struct Cand {
    Formula principal;
    Side side;
    RuleId rule;
  };
  std::vector<Cand> cands;
  auto l_rule_for = [](Kind k, Side side) -> std::optional<RuleId> {
    switch (k) {
      case Kind::And: return side == Side::Gamma ? RuleId::AndLa : RuleId::AndLc;
      case Kind::Or: return side == Side::Gamma ? RuleId::OrLa : RuleId::OrLc;
      case Kind::Imp: return side == Side::Gamma ? RuleId::ImpLa : RuleId::ImpLc;
      case Kind::Coimp: return side == Side::Gamma ? RuleId::CoimpLa : RuleId::CoimpLc;
      case Kind::Bot: return side == Side::Gamma ? std::optional<RuleId>(RuleId::BotLa) : std::nullopt;
      case Kind::Top: return side == Side::Delta ? std::optional<RuleId>(RuleId::TopLc) : std::nullopt;
      default: return std::nullopt;
    }
  };
  for (Side side : {Side::Gamma, Side::Delta}) {
    const auto& ctx = side == Side::Gamma ? goal.gamma : goal.delta;
    for (const Formula& f : ctx.distinct())
      if (auto id = l_rule_for(f.kind(), side)) cands.push_back({f, side, *id});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (int c = formula_cmp(a.principal, b.principal); c != 0) return c < 0;
    return a.side < b.side;
  });
  for (const Cand& c : cands) push(c.rule, c.principal);
  return out;
}

Sequent apply_forward(const RuleInstance& inst, const std::vector<Sequent>& premises,
                      const FormulaMultiset& gamma, const FormulaMultiset& delta,
                      Mode target_mode, const Signature& sig,
                      const std::optional<Formula>& succedent) {
  const RuleSchema& s = schema(inst.rule);
  if (s.conclusion_mode) {
    if (*s.conclusion_mode != target_mode)
      throw RuleError(std::string("rule ") + s.name + " cannot conclude with this mode");
  } else if (inst.mode_star && *inst.mode_star != target_mode) {
    throw RuleError(std::string("rule ") + s.name + ": * instantiation disagrees with target mode");
  }

  Sequent concl;
  concl.mode = target_mode;
  concl.gamma = gamma;
  concl.delta = delta;

  auto side = principal_side(inst.rule);
  if (side) {
    auto& ctx = *side == Side::Gamma ? concl.gamma : concl.delta;
    ctx.insert(inst.principal);
    std::optional<Formula> from_prem;
    for (std::size_t i = 0; i < s.premises.size(); ++i)
      if (s.premises[i].succedent == ActiveRef::C && i < premises.size()) {
        from_prem = premises[i].succedent;
        break;
      }
    if (from_prem)
      concl.succedent = *from_prem;
    else if (succedent)
      concl.succedent = *succedent;
    else
      throw RuleError(std::string("rule ") + s.name + " needs an explicit conclusion succedent");
    if (succedent && from_prem && *succedent != *from_prem)
      throw RuleError(std::string("rule ") + s.name + ": succedent disagrees with premise");
  } else {
    concl.succedent = inst.principal;
    if (succedent && *succedent != inst.principal)
      throw RuleError(std::string("rule ") + s.name + ": succedent must be the principal");
  }

  auto expected = premises_for(concl, inst.rule, inst.principal, sig);
  if (!expected)
    throw RuleError(std::string("rule ") + s.name + " does not apply to conclusion '" +
                    print_sequent(concl) + "'");
  if (expected->size() != premises.size())
    throw RuleError(std::string("rule ") + s.name + ": wrong premise count");
  for (std::size_t i = 0; i < premises.size(); ++i)
    if (premises[i] != (*expected)[i])
      throw RuleError(std::string("rule ") + s.name + ": premise " + std::to_string(i + 1) +
                      " shape mismatch, expected '" + print_sequent((*expected)[i]) +
                      "' got '" + print_sequent(premises[i]) + "'");
  return concl;
}

RuleInstance dualize_rule(const RuleInstance& inst) {
  RuleInstance out;
  out.rule = dual_rule_id(inst.rule);
  out.principal = dualize_formula(inst.principal);
  if (inst.mode_star) out.mode_star = flip(*inst.mode_star);
  if (inst.side) out.side = *inst.side == Side::Gamma ? Side::Delta : Side::Gamma;
  return out;
}

}  // namespace bilat
