#include "selftest.hpp"

#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <vector>

#include "bilat/engine.hpp"
#include "bilat/json_io.hpp"
#include "bilat/latex.hpp"
#include "bilat/nd.hpp"
#include "bilat/parser.hpp"
#include "bilat/printer.hpp"
#include "bilat/structural.hpp"
#include "bilat/uniqueness.hpp"

namespace bilat::tools {

namespace {

struct Check {
  std::string name;
  std::function<bool()> run;
};

Derivation mk(Sequent concl, RuleId id, Formula principal, std::vector<Derivation> prems) {
  RuleInstance inst;
  inst.rule = id;
  inst.principal = std::move(principal);
  inst.side = principal_side(id);
  if (!schema(id).conclusion_mode) inst.mode_star = concl.mode;
  return Derivation{std::move(concl), inst, std::move(prems)};
}

// ( ; A & B) |-- A &'' B via AndLc over two And''R- branches over Rf-.
Derivation conj_dual_interderivability_tree(unsigned dual_copy) {
  Formula p = Formula::atom("p"), q = Formula::atom("q");
  Formula base = Formula::conj(p, q);
  Formula copy = Formula::conj(p, q, dual_copy);
  auto rf_p = mk(Sequent{{}, {p}, Mode::Minus, p}, RuleId::RfMinus, p, {});
  auto rf_q = mk(Sequent{{}, {q}, Mode::Minus, q}, RuleId::RfMinus, q, {});
  auto r1 = mk(Sequent{{}, {p}, Mode::Minus, copy}, RuleId::AndRMinus1, copy, {rf_p});
  auto r2 = mk(Sequent{{}, {q}, Mode::Minus, copy}, RuleId::AndRMinus2, copy, {rf_q});
  return mk(Sequent{{}, {base}, Mode::Minus, copy}, RuleId::AndLc, base, {r1, r2});
}

bool decides(const std::string& text, bool expected, const Signature& sig) {
  Decision d = decide(parse_sequent(text), sig, {.oracle = true, .limits = {}});
  if (d.derivable != expected) return false;
  if (d.derivable) {
    if (!d.proof) return false;
    if (!check(*d.proof, sig).ok) return false;
    if (d.proof->conclusion != parse_sequent(text)) return false;
  }
  return true;
}

std::vector<Check> build_checks() {
  std::vector<Check> checks;
  auto add = [&](std::string name, std::function<bool()> run) {
    checks.push_back({std::move(name), std::move(run)});
  };
  Formula p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");

  // --- syntax ---
  add("parse: p & q", [=] { return parse_formula("p & q") == Formula::conj(p, q); });
  add("parse: ~(p -> q) desugars", [=] {
    return parse_formula("~(p -> q)") == Formula::imp(Formula::imp(p, q), Formula::bot());
  });
  add("parse: -p desugars", [=] {
    return parse_formula("-p") == Formula::coimp(Formula::top(), p);
  });
  add("parse: p &'' q carries copy 2", [=] {
    return parse_formula("p &'' q") == Formula::conj(p, q, 2);
  });
  add("print: p & q", [=] { return print_formula(Formula::conj(p, q)) == "p & q"; });
  add("print: coimp copy 1", [=] {
    return print_formula(Formula::coimp(p, q, 1)) == "p -<' q";
  });
  add("print: nested imp right-associates", [=] {
    return print_formula(Formula::imp(p, Formula::imp(q, r))) == "p -> q -> r";
  });
  add("parse sequent: p & q ; =>+ p", [=] {
    Sequent s = parse_sequent("p & q ; =>+ p");
    return s.gamma == FormulaMultiset{Formula::conj(p, q)} && s.delta.empty() &&
           s.mode == Mode::Plus && s.succedent == p;
  });
  add("parse sequent: ; p & q =>- p &'' q", [=] {
    Sequent s = parse_sequent("; p & q =>- p &'' q");
    return s.gamma.empty() && s.delta == FormulaMultiset{Formula::conj(p, q)} &&
           s.mode == Mode::Minus && s.succedent == Formula::conj(p, q, 2);
  });
  add("parse sequent: duplicates preserved", [=] {
    return parse_sequent("p, p ; q =>+ p").gamma.count(p) == 2;
  });
  add("roundtrip: sampled formulas", [] {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      std::vector<Formula> pool{Formula::atom("p"), Formula::atom("q"), Formula::top(),
                                Formula::bot()};
      std::function<Formula(int)> gen = [&](int h) -> Formula {
        if (h <= 1 || rng() % 4 == 0) return pool[rng() % pool.size()];
        Kind ks[] = {Kind::And, Kind::Or, Kind::Imp, Kind::Coimp};
        return Formula::make(ks[rng() % 4], gen(h - 1), gen(h - 1), rng() % 3);
      };
      Formula f = gen(4);
      if (parse_formula(print_formula(f)) != f) return false;
    }
    return true;
  });
  add("dualize: atoms fixed, arrows swap", [=] {
    return dualize_formula(p) == p &&
           dualize_formula(Formula::imp(p, q)) == Formula::coimp(q, p) &&
           dualize_formula(Formula::top()) == Formula::bot();
  });
  add("dualize: involution", [=] {
    Formula f = parse_formula("(p -> q) & (top -<' r) | ~p");
    return dualize_formula(dualize_formula(f)) == f;
  });
  add("subformula closure", [=] {
    auto cl = subformula_closure({parse_formula("p -> (q -< r)")});
    return cl.size() == 5;
  });

  // --- calculus ---
  Signature base;
  add("expansions: axiom match", [=] {
    auto ex = backward_expansions(parse_sequent("p ; =>+ p"), base);
    for (const auto& [inst, prems] : ex)
      if (inst.rule == RuleId::RfPlus && prems.empty()) return true;
    return false;
  });
  add("expansions: dual interderivability goal", [] {
    Signature sig;
    sig.add_copy(Kind::And, Subset::ProofOnly);
    sig.add_copy(Kind::And, Subset::DualOnly);
    auto goal = parse_sequent("; p & q =>- p &'' q");
    bool saw_lc = false, saw_r1 = false;
    for (const auto& [inst, prems] : backward_expansions(goal, sig)) {
      if (inst.rule == RuleId::AndLc && prems.size() == 2 &&
          prems[0] == parse_sequent("; p =>- p &'' q") &&
          prems[1] == parse_sequent("; q =>- p &'' q"))
        saw_lc = true;
      if (inst.rule == RuleId::AndRMinus1 && prems.size() == 1 &&
          prems[0] == parse_sequent("; p & q =>- p"))
        saw_r1 = true;
    }
    return saw_lc && saw_r1;
  });
  add("expansions: CoimpR-", [=] {
    auto goal = parse_sequent("; =>- p -< q");
    for (const auto& [inst, prems] : backward_expansions(goal, base))
      if (inst.rule == RuleId::CoimpRMinus && prems.size() == 1 &&
          prems[0] == parse_sequent("; q =>- p"))
        return true;
    return false;
  });
  add("apply_forward: AndR+", [=] {
    RuleInstance inst{RuleId::AndRPlus, std::nullopt, Formula::conj(p, q), std::nullopt};
    Sequent out = apply_forward(inst, {parse_sequent("; =>+ p"), parse_sequent("; =>+ q")},
                                {}, {}, Mode::Plus, base);
    return out == parse_sequent("; =>+ p & q");
  });
  add("apply_forward: ImpLa retains principal", [=] {
    Formula pq = Formula::imp(p, q);
    RuleInstance inst{RuleId::ImpLa, Mode::Plus, pq, Side::Gamma};
    Sequent out = apply_forward(
        inst, {parse_sequent("p -> q ; =>+ p"), parse_sequent("q ; =>+ r")}, {}, {},
        Mode::Plus, base);
    return out == parse_sequent("p -> q ; =>+ r");
  });
  add("apply_forward: BotR- with context", [=] {
    RuleInstance inst{RuleId::BotRMinus, std::nullopt, Formula::bot(), std::nullopt};
    Sequent out = apply_forward(inst, {}, {p}, {q}, Mode::Minus, base);
    return out == parse_sequent("p ; q =>- bot");
  });
  add("dualize_rule: axiom", [=] {
    RuleInstance inst{RuleId::RfPlus, std::nullopt, p, std::nullopt};
    return dualize_rule(inst).rule == RuleId::RfMinus &&
           dualize_rule(dualize_rule(inst)) == inst;
  });
  add("dualize_rule: ImpR+ to CoimpR-", [=] {
    RuleInstance inst{RuleId::ImpRPlus, std::nullopt, Formula::imp(p, q), std::nullopt};
    RuleInstance d = dualize_rule(inst);
    return d.rule == RuleId::CoimpRMinus && d.principal == Formula::coimp(q, p);
  });
  add("dualize_rule: AndLa to OrLc", [=] {
    RuleInstance inst{RuleId::AndLa, Mode::Plus, Formula::conj(p, q), Side::Gamma};
    RuleInstance d = dualize_rule(inst);
    return d.rule == RuleId::OrLc && d.side == Side::Delta && d.mode_star == Mode::Minus;
  });

  // --- derivation checking ---
  add("check: axiom tree", [=] {
    auto d = mk(parse_sequent("p ; =>+ p"), RuleId::RfPlus, p, {});
    return check(d, base).ok;
  });
  add("check: conjunction dual interderivability tree", [] {
    Signature sig;
    sig.add_copy(Kind::And, Subset::ProofOnly);
    sig.add_copy(Kind::And, Subset::DualOnly);
    return check(conj_dual_interderivability_tree(2), sig).ok;
  });
  add("check: axiom mismatch rejected", [=] {
    auto d = mk(parse_sequent("p ; =>+ q"), RuleId::RfPlus, q, {});
    CheckResult res = check(d, base);
    return !res.ok && res.path.empty();
  });
  add("json: derivation roundtrip + check", [] {
    Signature sig;
    sig.add_copy(Kind::And, Subset::ProofOnly);
    sig.add_copy(Kind::And, Subset::DualOnly);
    Derivation d = conj_dual_interderivability_tree(2);
    Derivation back = derivation_from_string(derivation_to_string(d));
    return check(back, sig).ok && back.conclusion == d.conclusion;
  });

  // --- decision procedures ---
  add("decide: interderivable with full copy", [] {
    Signature sig;
    sig.add_copy(Kind::And, Subset::Full);
    return decides("p & q ; =>+ p &' q", true, sig);
  });
  add("decide: cross sequent underivable (dual-only copy)", [] {
    Signature sig;
    sig.add_copy(Kind::And, Subset::ProofOnly);
    sig.add_copy(Kind::And, Subset::DualOnly);
    return decides("p & q ; =>+ p &'' q", false, sig);
  });
  add("decide: Peirce rejected", [=] {
    return decides("; =>+ ((p -> q) -> p) -> p", false, base);
  });
  add("decide: coimplication from split context", [=] {
    return decides("p ; q =>+ p -< q", true, base);
  });
  add("decide: empty bot", [=] { return decides("; =>+ bot", false, base); });
  add("decide: negation toggle instance", [=] {
    return decides("p ; =>- ~p", true, base);
  });
  add("saturate: proof-only copy blocks dual relation", [] {
    Signature sig;
    sig.add_copy(Kind::And, Subset::ProofOnly);
    return !saturate_forward(parse_sequent("; p & q =>- p &' q"), sig).derivable;
  });
  add("saturate: smallest two-premise case", [=] {
    return saturate_forward(parse_sequent("p ; =>+ p & p"), base).derivable;
  });
  add("saturate: no rule refutes top", [=] {
    return !saturate_forward(parse_sequent("; =>- top"), base).derivable;
  });

  // --- structural ---
  add("weaken: axiom absorbs context", [=] {
    auto d = mk(parse_sequent("p ; =>+ p"), RuleId::RfPlus, p, {});
    auto w = weaken(d, q, Side::Gamma, base);
    return check(w, base).ok && w.conclusion == parse_sequent("p, q ; =>+ p");
  });
  add("weaken: interderivability tree", [=] {
    Signature sig;
    sig.add_copy(Kind::And, Subset::ProofOnly);
    sig.add_copy(Kind::And, Subset::DualOnly);
    auto w = weaken(conj_dual_interderivability_tree(2), r, Side::Delta, sig);
    return check(w, sig).ok && w.conclusion == parse_sequent("; p & q, r =>- p &'' q");
  });
  add("weaken: orders commute", [=] {
    auto d = mk(parse_sequent("p ; =>+ p"), RuleId::RfPlus, p, {});
    auto a = weaken(weaken(d, q, Side::Gamma, base), r, Side::Delta, base);
    auto b = weaken(weaken(d, r, Side::Delta, base), q, Side::Gamma, base);
    return a.conclusion == b.conclusion;
  });
  add("contract: duplicated axiom", [=] {
    return contract_check(parse_sequent("p, p ; =>+ p"), p, Side::Gamma, base).derivable;
  });
  add("cut: top identity", [=] {
    return cut_check(parse_sequent("; =>+ top"), parse_sequent("top ; =>+ top"),
                     CutKind::CutA, base)
        .derivable;
  });
  add("cut: composing interderivability halves", [] {
    Signature sig;
    sig.add_copy(Kind::And, Subset::Full);
    Decision d = cut_check(parse_sequent("p & q ; =>+ p &' q"),
                           parse_sequent("p &' q ; =>+ p & q"), CutKind::CutA, sig);
    return d.derivable;
  });
  add("identity: atom", [=] {
    auto d = general_identity(p, Mode::Plus, base);
    return d.rule.rule == RuleId::RfPlus && d.premises.empty() && check(d, base).ok;
  });
  add("identity: coimplication", [=] {
    auto d = general_identity(Formula::coimp(p, q), Mode::Plus, base);
    return check(d, base).ok && d.node_count() == 4 &&
           d.rule.rule == RuleId::CoimpLa &&
           d.premises[0].rule.rule == RuleId::CoimpRPlus &&
           decide(d.conclusion, base, {}).derivable;
  });
  add("identity: compound minus", [=] {
    auto d = general_identity(parse_formula("(p -> q) & (q -< p)"), Mode::Minus, base);
    return check(d, base).ok &&
           d.conclusion == parse_sequent("; (p -> q) & (q -< p) =>- (p -> q) & (q -< p)");
  });

  // --- uniqueness ---
  for (Kind k : {Kind::And, Kind::Or, Kind::Imp, Kind::Coimp, Kind::Top, Kind::Bot}) {
    add(std::string("uniqueness: full copy of ") + kind_word(k), [=] {
      auto rep = uniqueness_report(k, false, Formula::atom("p"), Formula::atom("q"), {});
      return rep.unique;
    });
  }
  add("uniqueness: partial duplication pattern", [] {
    auto rep = uniqueness_report(Kind::And, true, Formula::atom("p"), Formula::atom("q"), {});
    if (!rep.unique || rep.same_relation.size() != 4 || rep.cross_relation.size() != 4)
      return false;
    for (const auto& v : rep.same_relation)
      if (!v.derivable) return false;
    for (const auto& v : rep.cross_relation)
      if (v.derivable) return false;
    return true;
  });
  add("congruentiality: co-negation pair splits the relations", [] {
    auto rep = congruentiality_witness({});
    return rep.conegation.plus_interderivable && !rep.conegation.minus_interderivable;
  });
  add("congruentiality: negation pair verdicts are stable", [] {
    auto rep = congruentiality_witness({});
    return !rep.negation.plus_fg.derivable && rep.negation.plus_gf.derivable &&
           !rep.negation.minus_fg.derivable && !rep.negation.minus_gf.derivable;
  });
  add("synonymy: commuted conjunction", [=] {
    std::vector<ContextTemplate> ctxs{
        ContextTemplate(Formula::imp(r, ContextTemplate::hole())),
        ContextTemplate(Formula::coimp(ContextTemplate::hole(), r)),
        ContextTemplate(neg(ContextTemplate::hole()))};
    auto rep = synonymy_spotcheck(Formula::conj(p, q), Formula::conj(q, p), ctxs, base, {});
    return rep.synonymy_confirmed && rep.templates.size() == 3;
  });
  add("synonymy: failing pair makes no claim", [=] {
    std::vector<ContextTemplate> ctxs{ContextTemplate(neg(ContextTemplate::hole()))};
    auto rep = synonymy_spotcheck(neg(Formula::imp(p, q)), Formula::conj(p, neg(q)), ctxs,
                                  base, {});
    return !rep.bilaterally_equivalent && rep.templates.empty();
  });

  // --- natural deduction ---
  add("nd: rule table locally sound", [] {
    nd::validate_nd_rules();
    return true;
  });
  add("nd: conjunction interderivability tree", [=] {
    Signature sig;
    sig.add_copy(Kind::And, Subset::Full);
    Formula prime = Formula::conj(p, q, 1), conj = Formula::conj(p, q);
    nd::NdNode e1{p, nd::LineKind::Proof, nd::NdRule::AndE1, "", {}, {nd::assume(prime, "u")}};
    nd::NdNode e2{q, nd::LineKind::Proof, nd::NdRule::AndE2, "", {}, {nd::assume(prime, "u")}};
    nd::NdNode i{conj, nd::LineKind::Proof, nd::NdRule::AndI, "", {}, {e1, e2}};
    auto res = nd_check(i, sig);
    if (!res.ok || res.conclusion != conj || res.line != nd::LineKind::Proof) return false;
    if (res.open.gamma != FormulaMultiset{prime} || !res.open.delta.empty()) return false;
    Sequent goal{res.open.gamma, res.open.delta, Mode::Plus, res.conclusion};
    return decide(goal, sig, {}).derivable;
  });
  add("nd: single assumption leaf", [=] {
    auto res = nd_check(nd::assume(p, "u"));
    return res.ok && res.open.gamma == FormulaMultiset{p} && res.open.delta.empty() &&
           res.conclusion == p && res.line == nd::LineKind::Proof;
  });
  add("nd: wrong premise line type rejected", [=] {
    nd::NdNode bad{Formula::conj(p, q), nd::LineKind::Proof, nd::NdRule::AndI, "", {},
                   {nd::assume(p, "u"), nd::counter_assume(q, "v")}};
    auto res = nd_check(bad);
    return !res.ok;
  });

  return checks;
}

}  // namespace

int run_selftest(std::ostream& os) {
  auto checks = build_checks();
  int failures = 0;
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    bool ok = false;
    std::string note;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      note = e.what();
    }
    os << (ok ? "  pass  " : "  FAIL  ") << std::left << std::setw(static_cast<int>(width))
       << c.name;
    if (!ok && !note.empty()) os << "  (" << note << ")";
    os << "\n";
    if (!ok) ++failures;
  }
  os << (failures == 0 ? "all " : "") << checks.size() - failures << "/" << checks.size()
     << " checks passed\n";
  return failures;
}

}  // namespace bilat::tools
