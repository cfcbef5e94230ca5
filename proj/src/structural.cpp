#include "bilat/structural.hpp"

#include <stdexcept>

#include "bilat/printer.hpp"

namespace bilat {

Derivation weaken(const Derivation& d, const Formula& f, Side side, const Signature& sig) {
  sig.validate(f);
  return insert_context_everywhere(d, f, side);
}

Decision contract_check(const Sequent& goal, const Formula& formula, Side side,
                        const Signature& sig, const Limits& limits) {
  const auto& ctx = side == Side::Gamma ? goal.gamma : goal.delta;
  if (ctx.count(formula) < 2)
    throw std::invalid_argument("contract_check: '" + print_formula(formula) +
                                "' does not occur twice on the chosen side");
  Sequent contracted = goal;
  (side == Side::Gamma ? contracted.gamma : contracted.delta).erase_one(formula);
  return decide(contracted, sig, {.oracle = false, .limits = limits});
}

Decision cut_check(const Sequent& left, const Sequent& right, CutKind kind,
                   const Signature& sig, const Limits& limits) {
  Mode want = kind == CutKind::CutA ? Mode::Plus : Mode::Minus;
  if (left.mode != want)
    throw std::invalid_argument("cut_check: left premise has the wrong mode");
  const Formula& cut_formula = left.succedent;
  Sequent stripped = right;
  auto& ctx = kind == CutKind::CutA ? stripped.gamma : stripped.delta;
  if (!ctx.erase_one(cut_formula))
    throw std::invalid_argument("cut_check: right premise does not carry the cut formula");

  DecideOptions opts{.oracle = false, .limits = limits};
  if (!decide(left, sig, opts).derivable)
    throw std::invalid_argument("cut_check: left premise is not derivable");
  if (!decide(right, sig, opts).derivable)
    throw std::invalid_argument("cut_check: right premise is not derivable");

  Sequent conclusion;
  conclusion.gamma = left.gamma.united(stripped.gamma);
  conclusion.delta = left.delta.united(stripped.delta);
  conclusion.mode = right.mode;
  conclusion.succedent = right.succedent;
  return decide(conclusion, sig, opts);
}

namespace {

RuleInstance inst_of(RuleId id, Formula principal, std::optional<Mode> star) {
  RuleInstance i;
  i.rule = id;
  i.principal = std::move(principal);
  i.side = principal_side(id);
  i.mode_star = star;
  return i;
}

Derivation node(Sequent concl, RuleId id, Formula principal, std::vector<Derivation> prems) {
  std::optional<Mode> star;
  if (!schema(id).conclusion_mode) star = concl.mode;
  return Derivation{std::move(concl), inst_of(id, std::move(principal), star), std::move(prems)};
}

Sequent seq(FormulaMultiset g, FormulaMultiset d, Mode m, Formula c) {
  return Sequent{std::move(g), std::move(d), m, std::move(c)};
}

Derivation id_plus(const Formula& f);
Derivation id_minus(const Formula& f);

Derivation id_plus(const Formula& f) {
  const Formula& x = f;
  switch (f.kind()) {
    case Kind::Atom:
      return node(seq({x}, {}, Mode::Plus, x), RuleId::RfPlus, x, {});
    case Kind::Top:
      return node(seq({x}, {}, Mode::Plus, x), RuleId::TopRPlus, x, {});
    case Kind::Bot:
      return node(seq({x}, {}, Mode::Plus, x), RuleId::BotLa, x, {});
    case Kind::And: {
      const Formula &a = f.left(), &b = f.right();
      auto pa = insert_context_everywhere(id_plus(a), b, Side::Gamma);
      auto pb = insert_context_everywhere(id_plus(b), a, Side::Gamma);
      auto r = node(seq({a, b}, {}, Mode::Plus, x), RuleId::AndRPlus, x, {pa, pb});
      return node(seq({x}, {}, Mode::Plus, x), RuleId::AndLa, x, {r});
    }
    case Kind::Or: {
      const Formula &a = f.left(), &b = f.right();
      auto ra = node(seq({a}, {}, Mode::Plus, x), RuleId::OrRPlus1, x, {id_plus(a)});
      auto rb = node(seq({b}, {}, Mode::Plus, x), RuleId::OrRPlus2, x, {id_plus(b)});
      return node(seq({x}, {}, Mode::Plus, x), RuleId::OrLa, x, {ra, rb});
    }
    case Kind::Imp: {
      const Formula &a = f.left(), &b = f.right();
      auto p1 = insert_context_everywhere(id_plus(a), x, Side::Gamma);
      auto p2 = insert_context_everywhere(id_plus(b), a, Side::Gamma);
      auto la = node(seq({x, a}, {}, Mode::Plus, b), RuleId::ImpLa, x, {p1, p2});
      return node(seq({x}, {}, Mode::Plus, x), RuleId::ImpRPlus, x, {la});
    }
    case Kind::Coimp: {
      const Formula &a = f.left(), &b = f.right();
      auto p1 = insert_context_everywhere(id_plus(a), b, Side::Delta);
      auto p2 = insert_context_everywhere(id_minus(b), a, Side::Gamma);
      auto rp = node(seq({a}, {b}, Mode::Plus, x), RuleId::CoimpRPlus, x, {p1, p2});
      return node(seq({x}, {}, Mode::Plus, x), RuleId::CoimpLa, x, {rp});
    }
  }
  throw std::logic_error("id_plus: bad kind");
}

Derivation id_minus(const Formula& f) {
  const Formula& x = f;
  switch (f.kind()) {
    case Kind::Atom:
      return node(seq({}, {x}, Mode::Minus, x), RuleId::RfMinus, x, {});
    case Kind::Top:
      return node(seq({}, {x}, Mode::Minus, x), RuleId::TopLc, x, {});
    case Kind::Bot:
      return node(seq({}, {x}, Mode::Minus, x), RuleId::BotRMinus, x, {});
    case Kind::And: {
      const Formula &a = f.left(), &b = f.right();
      auto ra = node(seq({}, {a}, Mode::Minus, x), RuleId::AndRMinus1, x, {id_minus(a)});
      auto rb = node(seq({}, {b}, Mode::Minus, x), RuleId::AndRMinus2, x, {id_minus(b)});
      return node(seq({}, {x}, Mode::Minus, x), RuleId::AndLc, x, {ra, rb});
    }
    case Kind::Or: {
      const Formula &a = f.left(), &b = f.right();
      auto pa = insert_context_everywhere(id_minus(a), b, Side::Delta);
      auto pb = insert_context_everywhere(id_minus(b), a, Side::Delta);
      auto r = node(seq({}, {a, b}, Mode::Minus, x), RuleId::OrRMinus, x, {pa, pb});
      return node(seq({}, {x}, Mode::Minus, x), RuleId::OrLc, x, {r});
    }
    case Kind::Imp: {
      const Formula &a = f.left(), &b = f.right();
      auto p1 = insert_context_everywhere(id_plus(a), b, Side::Delta);
      auto p2 = insert_context_everywhere(id_minus(b), a, Side::Gamma);
      auto rm = node(seq({a}, {b}, Mode::Minus, x), RuleId::ImpRMinus, x, {p1, p2});
      return node(seq({}, {x}, Mode::Minus, x), RuleId::ImpLc, x, {rm});
    }
    case Kind::Coimp: {
      const Formula &a = f.left(), &b = f.right();
      auto p1 = insert_context_everywhere(id_minus(b), x, Side::Delta);
      auto p2 = insert_context_everywhere(id_minus(a), b, Side::Delta);
      auto lc = node(seq({}, {x, b}, Mode::Minus, a), RuleId::CoimpLc, x, {p1, p2});
      return node(seq({}, {x}, Mode::Minus, x), RuleId::CoimpRMinus, x, {lc});
    }
  }
  throw std::logic_error("id_minus: bad kind");
}

}  // namespace

namespace {
void require_full_rules(const Formula& f, const Signature& sig) {
  if (f.kind() != Kind::Atom && sig.subset(f.kind(), f.copy()) != Subset::Full)
    throw std::invalid_argument("general_identity: '" + print_formula(f) +
                                "' uses a rule-restricted copy of " + kind_word(f.kind()));
  if (is_binary(f.kind())) {
    require_full_rules(f.left(), sig);
    require_full_rules(f.right(), sig);
  }
}
}  // namespace

Derivation general_identity(const Formula& f, Mode mode, const Signature& sig) {
  sig.validate(f);
  require_full_rules(f, sig);
  return mode == Mode::Plus ? id_plus(f) : id_minus(f);
}

}  // namespace bilat
