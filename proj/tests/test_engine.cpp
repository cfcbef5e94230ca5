#include <doctest.h>

#include <algorithm>

#include "bilat/engine.hpp"
#include "bilat/latex.hpp"
#include "bilat/parser.hpp"
#include "bilat/printer.hpp"
#include "support/g4ip.hpp"
#include "support/gen.hpp"

using namespace bilat;

namespace {
const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");
const Signature base;

Derivation mk(const char* concl, RuleId id, Formula principal,
              std::vector<Derivation> prems) {
  Sequent s = parse_sequent(concl);
  RuleInstance inst;
  inst.rule = id;
  inst.principal = std::move(principal);
  inst.side = principal_side(id);
  if (!schema(id).conclusion_mode) inst.mode_star = s.mode;
  return Derivation{s, inst, std::move(prems)};
}

Decision decide_checked(const Sequent& goal, const Signature& sig, bool oracle = true) {
  Decision d = decide(goal, sig, {.oracle = oracle, .limits = {}});
  if (d.derivable) {
    REQUIRE(d.proof.has_value());
    auto res = check(*d.proof, sig);
    REQUIRE_MESSAGE(res.ok, "proof of '" << print_sequent(goal) << "' fails: " << res.reason);
    REQUIRE(d.proof->conclusion == goal);
  }
  return d;
}
}  // namespace

TEST_CASE("check accepts the axiom tree and the interderivability trees") {
  CHECK(check(mk("p ; =>+ p", RuleId::RfPlus, p, {}), base).ok);

  Signature sig;
  sig.add_copy(Kind::And, Subset::ProofOnly);
  sig.add_copy(Kind::And, Subset::DualOnly);
  Formula conj = Formula::conj(p, q), conj2 = Formula::conj(p, q, 2);
  auto tree = mk("; p & q =>- p &'' q", RuleId::AndLc, conj,
                 {mk("; p =>- p &'' q", RuleId::AndRMinus1, conj2,
                     {mk("; p =>- p", RuleId::RfMinus, p, {})}),
                  mk("; q =>- p &'' q", RuleId::AndRMinus2, conj2,
                     {mk("; q =>- q", RuleId::RfMinus, q, {})})});
  CHECK(check(tree, sig).ok);

  SUBCASE("altered axiom is rejected at the right node") {
    auto bad = tree;
    bad.premises[1].premises[0].conclusion = parse_sequent("; q =>- p");
    CheckResult res = check(bad, sig);
    CHECK_FALSE(res.ok);
    // The parent notices its premise no longer matches.
    CHECK(res.path == std::vector<std::size_t>{1});
  }
  SUBCASE("subset violation is rejected") {
    Signature strict;
    strict.add_copy(Kind::And, Subset::ProofOnly);
    strict.add_copy(Kind::And, Subset::ProofOnly);  // copy 2 now proof-only
    CHECK_FALSE(check(tree, strict).ok);
  }
  SUBCASE("unknown tag is rejected") { CHECK_FALSE(check(tree, base).ok); }
}

TEST_CASE("check rejects the negative cases") {
  CHECK_FALSE(check(mk("p ; =>+ q", RuleId::RfPlus, q, {}), base).ok);
  CHECK_FALSE(check(mk("; =>+ bot", RuleId::BotRMinus, Formula::bot(), {}), base).ok);
  // Wrong premise count.
  CHECK_FALSE(check(mk("; =>+ p & q", RuleId::AndRPlus, Formula::conj(p, q),
                       {mk("; =>+ p", RuleId::RfPlus, p, {})}),
                    base)
                  .ok);
  // Mode star not uniform: AndLc premises must share the conclusion's mode.
  auto bad = mk("; p & q =>- p", RuleId::AndLc, Formula::conj(p, q),
                {mk("; p =>- p", RuleId::RfMinus, p, {}),
                 mk("; q =>+ q", RuleId::RfPlus, q, {})});
  bad.premises[1].conclusion = parse_sequent("; q =>+ q");
  CHECK_FALSE(check(bad, base).ok);
}

TEST_CASE("decide: canonical verdicts") {
  Signature one_full;
  one_full.add_copy(Kind::And, Subset::Full);
  CHECK(decide_checked(parse_sequent("p & q ; =>+ p &' q"), one_full).derivable);

  Signature partial;
  partial.add_copy(Kind::And, Subset::ProofOnly);
  partial.add_copy(Kind::And, Subset::DualOnly);
  CHECK_FALSE(decide_checked(parse_sequent("p & q ; =>+ p &'' q"), partial).derivable);

  CHECK_FALSE(decide_checked(parse_sequent("; =>+ ((p -> q) -> p) -> p"), base).derivable);
  CHECK(decide_checked(parse_sequent("p ; q =>+ p -< q"), base).derivable);
  CHECK_FALSE(decide_checked(parse_sequent("; =>+ bot"), base).derivable);
  CHECK(decide_checked(parse_sequent("p ; =>- ~p"), base).derivable);
  CHECK(decide_checked(parse_sequent("p ; =>+ p & p"), base).derivable);
  CHECK_FALSE(decide_checked(parse_sequent("; =>- top"), base).derivable);
  CHECK_FALSE(decide_checked(parse_sequent("; p & q =>- p &' q"), partial).derivable);
}

TEST_CASE("decide returns proofs that conclude the queried multiset") {
  Sequent goal = parse_sequent("p, p ; q =>+ p & p");
  Decision d = decide_checked(goal, base);
  CHECK(d.derivable);
  CHECK(d.proof->conclusion == goal);
}

TEST_CASE("underivable decisions carry statistics") {
  Decision d = decide(parse_sequent("; =>+ bot"), base, {.oracle = true, .limits = {}});
  CHECK_FALSE(d.derivable);
  CHECK(d.stats.visited > 0);
  CHECK(d.stats.universe == 1);
}

TEST_CASE("resource limits are errors, not verdicts") {
  Limits tiny;
  tiny.max_visited = 2;
  CHECK_THROWS_AS(
      decide(parse_sequent("; =>+ ((p -> q) -> p) -> p"), base, {.oracle = false, .limits = tiny}),
      ResourceLimitError);
  Limits small_universe;
  small_universe.max_universe = 2;
  CHECK_THROWS_AS(saturate_forward(parse_sequent("p & q ; =>+ p & q"), base, small_universe),
                  ResourceLimitError);
}

TEST_CASE("multiset/set robustness") {
  testsupport::Rng rng(5);
  testsupport::SequentGenOptions opts;
  for (int i = 0; i < 120; ++i) {
    Sequent s = testsupport::random_sequent(rng, opts);
    bool verdict = decide(s, base, {}).derivable;
    CHECK(decide(s.normalized(), base, {}).derivable == verdict);
    if (!s.gamma.empty()) {
      Sequent dup = s;
      dup.gamma.insert(dup.gamma.items().front());
      CHECK(decide(dup, base, {}).derivable == verdict);
    }
  }
}

TEST_CASE("backward and forward agree on random sequents") {
  testsupport::Rng rng(97);
  testsupport::SequentGenOptions opts;
  opts.formulas.max_height = 3;
  for (int i = 0; i < 250; ++i) {
    Sequent s = testsupport::random_sequent(rng, opts);
    CAPTURE(print_sequent(s));
    Decision b = decide_backward(s, base);
    Decision f = saturate_forward(s, base);
    REQUIRE(b.derivable == f.derivable);
    if (f.derivable) {
      REQUIRE(f.proof.has_value());
      auto res = check(*f.proof, base);
      REQUIRE_MESSAGE(res.ok, res.reason);
      REQUIRE(f.proof->conclusion.normalized() == s.normalized());
    }
  }
}

TEST_CASE("backward and forward agree on an exhaustive small universe") {
  // All set-context sequents over the subformulas of one seed.
  Formula seed = parse_formula("(p & q) -< (p -> q)");
  auto universe = subformula_closure({seed});
  REQUIRE(universe.size() == 5);
  ForwardSpace space(universe, base, {});
  BackwardProver prover(base, {});
  std::size_t n = universe.size();
  std::size_t count = 0;
  for (std::size_t gm = 0; gm < (1u << n); ++gm)
    for (std::size_t dm = 0; dm < (1u << n); ++dm)
      for (std::size_t si = 0; si < n; ++si)
        for (Mode m : {Mode::Plus, Mode::Minus}) {
          Sequent s;
          for (std::size_t i = 0; i < n; ++i) {
            if (gm & (1u << i)) s.gamma.insert(universe[i]);
            if (dm & (1u << i)) s.delta.insert(universe[i]);
          }
          s.mode = m;
          s.succedent = universe[si];
          bool fwd = space.holds(s);
          bool bwd = prover.decide(s).derivable;
          if (fwd != bwd) {
            CAPTURE(print_sequent(s));
            REQUIRE(fwd == bwd);
          }
          ++count;
        }
  CHECK(count == (1u << n) * (1u << n) * n * 2);
}

TEST_CASE("sequent-level duality") {
  testsupport::Rng rng(41);
  testsupport::SequentGenOptions opts;
  for (int i = 0; i < 150; ++i) {
    Sequent s = testsupport::random_sequent(rng, opts);
    CAPTURE(print_sequent(s));
    CHECK(decide(s, base, {}).derivable == decide(dualize_sequent(s), base, {}).derivable);
  }
  SUBCASE("with subset-restricted copies the signature dualizes too") {
    Signature sig;
    sig.add_copy(Kind::And, Subset::ProofOnly);
    Sequent s = parse_sequent("p & q ; =>+ p &' q");
    CHECK(decide(s, sig, {}).derivable);
    CHECK(decide(dualize_sequent(s), sig.dualized(), {}).derivable);
  }
}

TEST_CASE("internalization of the consequence relations") {
  testsupport::Rng rng(43);
  testsupport::GenOptions opts;
  opts.max_height = 3;
  for (int i = 0; i < 80; ++i) {
    Formula a = testsupport::random_formula(rng, opts);
    Formula b = testsupport::random_formula(rng, opts);
    Sequent hyp{{a}, {}, Mode::Plus, b};
    Sequent internal{{}, {}, Mode::Plus, Formula::imp(a, b)};
    CHECK(decide(hyp, base, {}).derivable == decide(internal, base, {}).derivable);
    Sequent co_hyp{{}, {a}, Mode::Minus, b};
    Sequent co_internal{{}, {}, Mode::Minus, Formula::coimp(b, a)};
    CHECK(decide(co_hyp, base, {}).derivable == decide(co_internal, base, {}).derivable);
  }
}

TEST_CASE("negation toggles") {
  testsupport::Rng rng(47);
  testsupport::SequentGenOptions opts;
  for (int i = 0; i < 80; ++i) {
    Sequent s = testsupport::random_sequent(rng, opts);
    Sequent toggled = s;
    toggled.mode = flip(s.mode);
    toggled.succedent = s.mode == Mode::Plus ? neg(s.succedent) : coneg(s.succedent);
    CAPTURE(print_sequent(s));
    CHECK(decide(s, base, {}).derivable == decide(toggled, base, {}).derivable);
  }
}

TEST_CASE("conservativity over the intuitionistic fragment") {
  testsupport::Rng rng(53);
  testsupport::GenOptions opts;
  opts.with_coimp = false;
  opts.with_top = false;
  opts.atoms = {"p", "q"};
  opts.max_height = 4;
  for (int i = 0; i < 150; ++i) {
    Formula f = testsupport::random_formula(rng, opts);
    CAPTURE(print_formula(f));
    Sequent s{{}, {}, Mode::Plus, f};
    CHECK(decide(s, base, {}).derivable == testsupport::g4ip_provable(f));
  }
}

TEST_CASE("prover instances can be reused across goals") {
  BackwardProver prover(base, {});
  CHECK(prover.decide(parse_sequent("p ; =>+ p")).derivable);
  CHECK_FALSE(prover.decide(parse_sequent("q ; =>+ p")).derivable);
  CHECK(prover.decide(parse_sequent("p & q ; =>+ q & p")).derivable);
  CHECK(prover.decide(parse_sequent("p & q ; =>+ q & p")).derivable);
}

TEST_CASE("proof output is deterministic: axioms and R rules first, smaller principals first") {
  Decision d = decide(parse_sequent("p & q ; =>+ q & p"), base, {});
  REQUIRE(d.derivable);
  const char* golden =
      "[AndR+] p & q ; =>+ q & p\n"
      "  [AndLa] p & q ; =>+ q\n"
      "    [Rf+] p, q ; =>+ q\n"
      "  [AndLa] p & q ; =>+ p\n"
      "    [Rf+] p, q ; =>+ p\n";
  CHECK(derivation_to_tree(*d.proof) == golden);
  Decision again = decide(parse_sequent("p & q ; =>+ q & p"), base, {});
  CHECK(derivation_to_tree(*again.proof) == golden);
}

TEST_CASE("oracle disagreement raises, never answers") {
  // No disagreement exists; probe that the cross-check path runs clean on a
  // mixed bag of verdicts.
  testsupport::Rng rng(59);
  testsupport::SequentGenOptions opts;
  for (int i = 0; i < 40; ++i) {
    Sequent s = testsupport::random_sequent(rng, opts);
    CHECK_NOTHROW(decide(s, base, {.oracle = true, .limits = {}}));
  }
}
