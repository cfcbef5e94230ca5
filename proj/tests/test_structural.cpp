#include <doctest.h>

#include "bilat/parser.hpp"
#include "bilat/printer.hpp"
#include "bilat/structural.hpp"
#include "support/gen.hpp"

using namespace bilat;

namespace {
const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");
const Formula r = Formula::atom("r");
const Signature base;
}  // namespace

TEST_CASE("weaken keeps derivations valid and only grows the context") {
  Decision d = decide(parse_sequent("p & q ; =>+ q & p"), base, {});
  REQUIRE(d.derivable);
  Derivation w = weaken(*d.proof, r, Side::Gamma, base);
  CHECK(check(w, base).ok);
  CHECK(w.conclusion == parse_sequent("p & q, r ; =>+ q & p"));
  Derivation w2 = weaken(w, Formula::imp(p, q), Side::Delta, base);
  CHECK(check(w2, base).ok);
  CHECK(w2.conclusion.mode == Mode::Plus);
  CHECK(w2.conclusion.succedent == Formula::conj(q, p));

  SUBCASE("orders commute on the conclusion") {
    Derivation a = weaken(weaken(*d.proof, r, Side::Gamma, base), p, Side::Delta, base);
    Derivation b = weaken(weaken(*d.proof, p, Side::Delta, base), r, Side::Gamma, base);
    CHECK(a.conclusion == b.conclusion);
  }
}

TEST_CASE("weaken on sampled decide output") {
  testsupport::Rng rng(61);
  testsupport::SequentGenOptions opts;
  int found = 0;
  for (int i = 0; i < 400 && found < 60; ++i) {
    Sequent s = testsupport::random_sequent(rng, opts);
    Decision d = decide(s, base, {});
    if (!d.derivable) continue;
    ++found;
    Formula extra = testsupport::random_formula(rng, opts.formulas);
    Side side = i % 2 == 0 ? Side::Gamma : Side::Delta;
    Derivation w = weaken(*d.proof, extra, side, base);
    REQUIRE(check(w, base).ok);
    CHECK(w.conclusion.succedent == s.succedent);
    CHECK(w.conclusion.mode == s.mode);
  }
  CHECK(found >= 30);
}

TEST_CASE("contract_check") {
  CHECK(contract_check(parse_sequent("p, p ; =>+ p"), p, Side::Gamma, base).derivable);
  CHECK_THROWS_AS(contract_check(parse_sequent("p ; =>+ p"), p, Side::Gamma, base),
                  std::invalid_argument);
  CHECK_THROWS_AS(contract_check(parse_sequent("p, p ; =>+ p"), p, Side::Delta, base),
                  std::invalid_argument);

  SUBCASE("contracted verdict equals the duplicated verdict on samples") {
    testsupport::Rng rng(67);
    testsupport::SequentGenOptions opts;
    for (int i = 0; i < 120; ++i) {
      Sequent s = testsupport::random_sequent(rng, opts);
      Formula dup = testsupport::random_formula(rng, opts.formulas);
      Side side = i % 2 == 0 ? Side::Gamma : Side::Delta;
      Sequent doubled = s;
      auto& ctx = side == Side::Gamma ? doubled.gamma : doubled.delta;
      ctx.insert(dup);
      ctx.insert(dup);
      bool original = decide(doubled, base, {}).derivable;
      CHECK(contract_check(doubled, dup, side, base).derivable == original);
    }
  }
}

TEST_CASE("cut_check") {
  CHECK(cut_check(parse_sequent("; =>+ top"), parse_sequent("top ; =>+ top"), CutKind::CutA,
                  base)
            .derivable);

  Signature sig;
  sig.add_copy(Kind::And, Subset::Full);
  CHECK(cut_check(parse_sequent("p & q ; =>+ p &' q"), parse_sequent("p &' q ; =>+ p & q"),
                  CutKind::CutA, sig)
            .derivable);

  CHECK(cut_check(parse_sequent("; p =>- p & q"), parse_sequent("; p & q =>- p & q"),
                  CutKind::CutC, base)
            .derivable);

  SUBCASE("shape violations") {
    CHECK_THROWS_AS(cut_check(parse_sequent("; =>- bot"), parse_sequent("p ; =>+ p"),
                              CutKind::CutA, base),
                    std::invalid_argument);
    CHECK_THROWS_AS(cut_check(parse_sequent("; =>+ top"), parse_sequent("p ; =>+ p"),
                              CutKind::CutA, base),
                    std::invalid_argument);
    // Underivable premise.
    CHECK_THROWS_AS(cut_check(parse_sequent("; =>+ p"), parse_sequent("p ; =>+ p"),
                              CutKind::CutA, base),
                    std::invalid_argument);
  }

  SUBCASE("sampled admissibility") {
    testsupport::Rng rng(71);
    testsupport::SequentGenOptions opts;
    opts.formulas.max_height = 2;
    int hits = 0;
    for (int i = 0; i < 800 && hits < 50; ++i) {
      Formula cut_formula = testsupport::random_formula(rng, opts.formulas);
      Sequent left = testsupport::random_sequent(rng, opts);
      left.mode = Mode::Plus;
      left.succedent = cut_formula;
      if (!decide(left, base, {}).derivable) continue;
      Sequent right = testsupport::random_sequent(rng, opts);
      right.gamma.insert(cut_formula);
      if (!decide(right, base, {}).derivable) continue;
      ++hits;
      CHECK(cut_check(left, right, CutKind::CutA, base).derivable);
    }
    CHECK(hits >= 20);
  }
}

TEST_CASE("general_identity on the canonical examples") {
  Derivation d1 = general_identity(p, Mode::Plus, base);
  CHECK(d1.rule.rule == RuleId::RfPlus);
  CHECK(d1.premises.empty());
  CHECK(check(d1, base).ok);

  Derivation d2 = general_identity(Formula::coimp(p, q), Mode::Plus, base);
  CHECK(check(d2, base).ok);
  CHECK(d2.node_count() == 4);  // CoimpLa, CoimpR+ and the two axioms
  CHECK(d2.rule.rule == RuleId::CoimpLa);
  CHECK(d2.premises[0].rule.rule == RuleId::CoimpRPlus);
  CHECK(d2.premises[0].premises[0].rule.rule == RuleId::RfPlus);
  CHECK(d2.premises[0].premises[1].rule.rule == RuleId::RfMinus);

  Derivation d3 = general_identity(parse_formula("(p -> q) & (q -< p)"), Mode::Minus, base);
  CHECK(check(d3, base).ok);
  CHECK(d3.conclusion == parse_sequent("; (p -> q) & (q -< p) =>- (p -> q) & (q -< p)"));
}

TEST_CASE("general_identity exhaustively at small depth") {
  auto leaves = std::vector<Formula>{p, q, Formula::top(), Formula::bot()};
  auto pool = testsupport::enumerate_formulas(
      leaves, {Kind::And, Kind::Or, Kind::Imp, Kind::Coimp}, 2);
  CHECK(pool.size() == 4 + 4 * 16);
  for (const Formula& f : pool)
    for (Mode m : {Mode::Plus, Mode::Minus}) {
      Derivation d = general_identity(f, m, base);
      CAPTURE(print_formula(f));
      REQUIRE(check(d, base).ok);
      Sequent expect = m == Mode::Plus ? Sequent{{f}, {}, Mode::Plus, f}
                                       : Sequent{{}, {f}, Mode::Minus, f};
      REQUIRE(d.conclusion == expect);
      REQUIRE(decide(d.conclusion, base, {}).derivable);
    }
}

TEST_CASE("general_identity respects signature validation") {
  CHECK_THROWS_AS(general_identity(Formula::conj(p, q, 1), Mode::Plus, base),
                  UnknownTagError);
  Signature sig;
  sig.add_copy(Kind::And, Subset::Full);
  CHECK(check(general_identity(Formula::conj(p, q, 1), Mode::Plus, sig), sig).ok);
  // Rule-restricted copies have no identity derivation in general.
  Signature restricted;
  restricted.add_copy(Kind::And, Subset::ProofOnly);
  CHECK_THROWS_AS(general_identity(Formula::conj(p, q, 1), Mode::Plus, restricted),
                  std::invalid_argument);
}
