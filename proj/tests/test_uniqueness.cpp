#include <doctest.h>

#include "bilat/parser.hpp"
#include "bilat/printer.hpp"
#include "bilat/uniqueness.hpp"
#include "support/gen.hpp"

using namespace bilat;

namespace {
const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");
}  // namespace

TEST_CASE("extend_signature appends copies in order") {
  Signature sig;
  CHECK(sig.copies(Kind::And) == 1);
  Signature sig2 = extend_signature(sig, Kind::And, Subset::ProofOnly);
  Signature sig3 = extend_signature(sig2, Kind::And, Subset::DualOnly);
  CHECK(sig3.copies(Kind::And) == 3);
  CHECK(sig3.subset(Kind::And, 0) == Subset::Full);
  CHECK(sig3.subset(Kind::And, 1) == Subset::ProofOnly);
  CHECK(sig3.subset(Kind::And, 2) == Subset::DualOnly);
  CHECK(sig.copies(Kind::And) == 1);  // value semantics
  CHECK_THROWS_AS(sig.subset(Kind::And, 1), UnknownTagError);
}

TEST_CASE("every connective is bilaterally unique under a full copy") {
  for (Kind k : {Kind::And, Kind::Or, Kind::Imp, Kind::Coimp, Kind::Top, Kind::Bot}) {
    CAPTURE(kind_word(k));
    UniquenessReport rep = uniqueness_report(k, false, p, q, {});
    CHECK(rep.unique);
    REQUIRE(rep.definitional.size() == 4);
    for (const auto& v : rep.definitional) {
      CAPTURE(print_sequent(v.sequent));
      CHECK(v.derivable);
      REQUIRE(v.proof.has_value());
      CHECK(check(*v.proof, rep.signature).ok);
    }
    CHECK(rep.same_relation.empty());
    CHECK(rep.cross_relation.empty());
  }
}

TEST_CASE("uniqueness holds for sampled compound components") {
  testsupport::Rng rng(73);
  testsupport::GenOptions opts;
  opts.max_height = 3;
  for (int i = 0; i < 6; ++i) {
    Formula a = testsupport::random_formula(rng, opts);
    Formula b = testsupport::random_formula(rng, opts);
    UniquenessReport rep = uniqueness_report(Kind::Imp, false, a, b, {});
    CAPTURE(print_formula(a));
    CAPTURE(print_formula(b));
    CHECK(rep.unique);
  }
}

TEST_CASE("partial duplication reproduces the overdetermination pattern") {
  UniquenessReport rep = uniqueness_report(Kind::And, true, p, q, {});
  CHECK(rep.partial);
  CHECK(rep.proof_only_copy == 1);
  CHECK(rep.dual_only_copy == 2);
  CHECK(rep.full_copy == 3);
  CHECK(rep.unique);  // the genuinely full copy still passes the definition

  REQUIRE(rep.same_relation.size() == 4);
  REQUIRE(rep.cross_relation.size() == 4);
  for (const auto& v : rep.same_relation) {
    CAPTURE(print_sequent(v.sequent));
    CHECK(v.derivable);
  }
  for (const auto& v : rep.cross_relation) {
    CAPTURE(print_sequent(v.sequent));
    CHECK_FALSE(v.derivable);
    CHECK(v.stats.universe > 0);  // saturation statistics attached
  }

  SUBCASE("the displayed sequents are the expected ones") {
    CHECK(rep.same_relation[0].sequent == parse_sequent("p & q ; =>+ p &' q"));
    CHECK(rep.same_relation[1].sequent == parse_sequent("p &' q ; =>+ p & q"));
    CHECK(rep.same_relation[2].sequent == parse_sequent("; p & q =>- p &'' q"));
    CHECK(rep.same_relation[3].sequent == parse_sequent("; p &'' q =>- p & q"));
    CHECK(rep.cross_relation[0].sequent == parse_sequent("p & q ; =>+ p &'' q"));
    CHECK(rep.cross_relation[1].sequent == parse_sequent("p &'' q ; =>+ p & q"));
    CHECK(rep.cross_relation[2].sequent == parse_sequent("; p & q =>- p &' q"));
    CHECK(rep.cross_relation[3].sequent == parse_sequent("; p &' q =>- p & q"));
  }
}

TEST_CASE("partial duplication of the constants") {
  // The zero-premise rules ignore their context, so only the directions that
  // need the restricted copy's own rule fail crosswise.
  UniquenessReport top = uniqueness_report(Kind::Top, true, p, q, {});
  CHECK(top.unique);
  for (const auto& v : top.same_relation) CHECK(v.derivable);
  CHECK_FALSE(top.cross_relation[0].derivable);  // (top; ) |-+ top''
  CHECK(top.cross_relation[1].derivable);        // (top''; ) |-+ top, by TopR+
  CHECK(top.cross_relation[2].derivable);        // ( ; top) |-- top', by TopLc
  CHECK_FALSE(top.cross_relation[3].derivable);  // ( ; top') |-- top

  UniquenessReport bot = uniqueness_report(Kind::Bot, true, p, q, {});
  CHECK(bot.unique);
  for (const auto& v : bot.same_relation) CHECK(v.derivable);
  CHECK(bot.cross_relation[0].derivable);        // (bot; ) |-+ bot'', by BotLa
  CHECK_FALSE(bot.cross_relation[1].derivable);  // (bot''; ) |-+ bot
  CHECK_FALSE(bot.cross_relation[2].derivable);  // ( ; bot) |-- bot'
  CHECK(bot.cross_relation[3].derivable);        // ( ; bot') |-- bot, by BotR-
}

TEST_CASE("congruentiality witness") {
  CongruentialityReport rep = congruentiality_witness({});

  // The co-negation pair splits the relations: interderivable under |-+ in
  // both directions, underivable under |-- in both.
  CHECK(rep.conegation.plus_fg.derivable);
  CHECK(rep.conegation.plus_gf.derivable);
  CHECK_FALSE(rep.conegation.minus_fg.derivable);
  CHECK_FALSE(rep.conegation.minus_gf.derivable);
  CHECK(rep.conegation.plus_interderivable);
  CHECK_FALSE(rep.conegation.minus_interderivable);

  // The intuitionistic-negation pair: right-to-left holds under |-+, the
  // converse already fails intuitionistically, and |-- fails both ways.
  CHECK(rep.negation.plus_gf.derivable);
  CHECK_FALSE(rep.negation.plus_fg.derivable);
  CHECK_FALSE(rep.negation.minus_fg.derivable);
  CHECK_FALSE(rep.negation.minus_gf.derivable);
  CHECK_FALSE(rep.negation.minus_interderivable);
}

TEST_CASE("context templates") {
  CHECK_THROWS_AS(ContextTemplate{p}, std::invalid_argument);
  CHECK_THROWS_AS(
      ContextTemplate{Formula::conj(ContextTemplate::hole(), ContextTemplate::hole())},
      std::invalid_argument);
  ContextTemplate t(Formula::imp(Formula::atom("r"), ContextTemplate::hole()));
  CHECK(t.apply(p) == parse_formula("r -> p"));
}

TEST_CASE("synonymy spot-check") {
  Signature base;
  Formula r = Formula::atom("r");
  std::vector<ContextTemplate> ctxs{
      ContextTemplate(Formula::imp(r, ContextTemplate::hole())),
      ContextTemplate(Formula::coimp(ContextTemplate::hole(), r)),
      ContextTemplate(neg(ContextTemplate::hole()))};

  SUBCASE("commuted conjunction is synonymous") {
    SynonymyReport rep =
        synonymy_spotcheck(Formula::conj(p, q), Formula::conj(q, p), ctxs, base, {});
    CHECK(rep.bilaterally_equivalent);
    CHECK(rep.synonymy_confirmed);
    CHECK(rep.templates.size() == 3);
    for (const auto& t : rep.templates) CHECK(t.bilaterally_equivalent);
  }
  SUBCASE("non-bilateral pairs make no claim") {
    SynonymyReport rep = synonymy_spotcheck(neg(Formula::imp(p, q)),
                                            Formula::conj(p, neg(q)), ctxs, base, {});
    CHECK_FALSE(rep.bilaterally_equivalent);
    CHECK_FALSE(rep.synonymy_confirmed);
    CHECK(rep.templates.empty());
  }
  SUBCASE("a formula is synonymous with itself") {
    SynonymyReport rep = synonymy_spotcheck(p, p, ctxs, base, {});
    CHECK(rep.synonymy_confirmed);
  }
}
