#include <doctest.h>

#include <functional>
#include <random>

#include "bilat/parser.hpp"
#include "bilat/printer.hpp"
#include "support/gen.hpp"

using namespace bilat;

namespace {
const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");
const Formula r = Formula::atom("r");
}  // namespace

TEST_CASE("parser handles the grammar cases") {
  CHECK(parse_formula("p & q") == Formula::conj(p, q));
  CHECK(parse_formula("p | q") == Formula::disj(p, q));
  CHECK(parse_formula("p -> q") == Formula::imp(p, q));
  CHECK(parse_formula("p -< q") == Formula::coimp(p, q));
  CHECK(parse_formula("top") == Formula::top());
  CHECK(parse_formula("bot") == Formula::bot());
  CHECK(parse_formula("topples") == Formula::atom("topples"));
  CHECK(parse_formula("(p)") == p);
}

TEST_CASE("negation macros desugar at parse time") {
  CHECK(parse_formula("~p") == Formula::imp(p, Formula::bot()));
  CHECK(parse_formula("~(p -> q)") ==
        Formula::imp(Formula::imp(p, q), Formula::bot()));
  CHECK(parse_formula("-p") == Formula::coimp(Formula::top(), p));
  CHECK(parse_formula("~~p") == neg(neg(p)));
  CHECK(parse_formula("- -p") == coneg(coneg(p)));
  CHECK(parse_formula("~-p") == neg(coneg(p)));
}

TEST_CASE("copy tags lex as apostrophes") {
  CHECK(parse_formula("p &'' q") == Formula::conj(p, q, 2));
  CHECK(parse_formula("p ->' q") == Formula::imp(p, q, 1));
  CHECK(parse_formula("top'") == Formula::top(1));
  CHECK(parse_formula("p -<''' q") == Formula::coimp(p, q, 3));
  CHECK(parse_formula("p &' q") != parse_formula("p & q"));
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_formula("p & q | r") == Formula::disj(Formula::conj(p, q), r));
  CHECK(parse_formula("p | q & r") == Formula::disj(p, Formula::conj(q, r)));
  CHECK(parse_formula("~p & q") == Formula::conj(neg(p), q));
  CHECK(parse_formula("p -> q -> r") == Formula::imp(p, Formula::imp(q, r)));
  CHECK(parse_formula("p -< q -< r") == Formula::coimp(Formula::coimp(p, q), r));
  CHECK(parse_formula("p & q -> r") == Formula::imp(Formula::conj(p, q), r));
}

TEST_CASE("mixing the two arrows without parentheses is rejected") {
  CHECK_THROWS_AS(parse_formula("p -> q -< r"), ParseError);
  CHECK_THROWS_AS(parse_formula("p -< q -> r"), ParseError);
  CHECK_NOTHROW(parse_formula("p -> (q -< r)"));
  CHECK_NOTHROW(parse_formula("(p -< q) -> r"));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("p &"), ParseError);
  CHECK_THROWS_AS(parse_formula("(p & q"), ParseError);
  CHECK_THROWS_AS(parse_formula("p ? q"), ParseError);
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  CHECK_THROWS_AS(parse_formula("Top"), ParseError);
  try {
    parse_formula("p & !");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("sequent parsing") {
  Sequent s = parse_sequent("p & q ; =>+ p");
  CHECK(s.gamma == FormulaMultiset{Formula::conj(p, q)});
  CHECK(s.delta.empty());
  CHECK(s.mode == Mode::Plus);
  CHECK(s.succedent == p);

  Sequent t = parse_sequent("; p & q =>- p &'' q");
  CHECK(t.gamma.empty());
  CHECK(t.delta == FormulaMultiset{Formula::conj(p, q)});
  CHECK(t.mode == Mode::Minus);
  CHECK(t.succedent == Formula::conj(p, q, 2));

  Sequent u = parse_sequent("p, p ; q =>+ p");
  CHECK(u.gamma.count(p) == 2);
  CHECK(u.delta.count(q) == 1);

  CHECK(parse_sequent("; =>+ bot").gamma.empty());
  CHECK_THROWS_AS(parse_sequent("p ; q"), ParseError);
  CHECK_THROWS_AS(parse_sequent("p =>+ q"), ParseError);
  CHECK_THROWS_AS(parse_sequent("p ; =>* q"), ParseError);
}

TEST_CASE("multisets are order-insensitive and multiplicity-sensitive") {
  CHECK(parse_sequent("p, q ; =>+ r") == parse_sequent("q, p ; =>+ r"));
  CHECK(parse_sequent("p, p ; =>+ r") != parse_sequent("p ; =>+ r"));
  CHECK(parse_sequent("p, p ; =>+ r").normalized() == parse_sequent("p ; =>+ r"));
}

TEST_CASE("printing uses minimal parentheses and round-trips") {
  CHECK(print_formula(Formula::conj(p, q)) == "p & q");
  CHECK(print_formula(Formula::coimp(p, q, 1)) == "p -<' q");
  CHECK(print_formula(Formula::imp(p, Formula::imp(q, r))) == "p -> q -> r");
  CHECK(print_formula(Formula::imp(Formula::imp(p, q), r)) == "(p -> q) -> r");
  CHECK(print_formula(Formula::imp(p, Formula::coimp(q, r))) == "p -> (q -< r)");
  CHECK(print_formula(Formula::coimp(Formula::imp(p, q), r)) == "(p -> q) -< r");
  CHECK(print_formula(Formula::disj(Formula::conj(p, q), r)) == "p & q | r");
  CHECK(print_formula(Formula::conj(p, Formula::conj(q, r))) == "p & (q & r)");
}

TEST_CASE("round-trip on random formulas and sequents") {
  testsupport::Rng rng(42);
  testsupport::GenOptions opts;
  opts.max_height = 5;
  for (int i = 0; i < 500; ++i) {
    Formula f = testsupport::random_formula(rng, opts);
    CAPTURE(print_formula(f));
    REQUIRE(parse_formula(print_formula(f)) == f);
  }
  testsupport::SequentGenOptions sopts;
  for (int i = 0; i < 200; ++i) {
    Sequent s = testsupport::random_sequent(rng, sopts);
    CAPTURE(print_sequent(s));
    REQUIRE(parse_sequent(print_sequent(s)) == s);
  }
}

TEST_CASE("resugared printing is opt-in and still round-trips") {
  PrintOptions sugar;
  sugar.resugar_negations = true;
  Formula f = neg(Formula::imp(p, q));
  CHECK(print_formula(f) == "(p -> q) -> bot");
  CHECK(print_formula(f, sugar) == "~(p -> q)");
  CHECK(parse_formula(print_formula(f, sugar)) == f);
  Formula g = coneg(p);
  CHECK(print_formula(g, sugar) == "-p");
  CHECK(parse_formula(print_formula(g, sugar)) == g);
  // Copies of -> are not negation sugar.
  Formula h = Formula::imp(p, Formula::bot(), 1);
  CHECK(print_formula(h, sugar) == "p ->' bot");
}

TEST_CASE("unicode and latex styles") {
  PrintOptions uni{PrintStyle::Unicode, false};
  CHECK(print_formula(Formula::conj(p, q), uni) == "p ∧ q");
  PrintOptions tex{PrintStyle::Latex, false};
  CHECK(print_formula(Formula::imp(p, q), tex) == "p \\to q");
  CHECK(print_sequent(parse_sequent("; =>- top"), tex) == "; \\vdash^{-} \\top");
}

TEST_CASE("dualize_formula swaps the duals and fixes atoms") {
  CHECK(dualize_formula(p) == p);
  CHECK(dualize_formula(Formula::top()) == Formula::bot());
  CHECK(dualize_formula(Formula::imp(p, q)) == Formula::coimp(q, p));
  CHECK(dualize_formula(Formula::conj(p, q)) == Formula::disj(p, q));
  CHECK(dualize_formula(Formula::conj(p, q, 2)) == Formula::disj(p, q, 2));
}

TEST_CASE("dualize_formula is an involution preserving atoms") {
  testsupport::Rng rng(11);
  testsupport::GenOptions opts;
  opts.max_height = 5;
  for (int i = 0; i < 300; ++i) {
    Formula f = testsupport::random_formula(rng, opts);
    CHECK(dualize_formula(dualize_formula(f)) == f);
    auto atoms_of = [](const Formula& g) {
      std::vector<std::string> out;
      std::function<void(const Formula&)> walk = [&](const Formula& h) {
        if (h.kind() == Kind::Atom) out.push_back(h.atom_name());
        if (is_binary(h.kind())) {
          walk(h.left());
          walk(h.right());
        }
      };
      walk(g);
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK(atoms_of(f) == atoms_of(dualize_formula(f)));
  }
}

TEST_CASE("subformula closure") {
  Formula pq = Formula::conj(p, q);
  auto cl = subformula_closure({pq});
  CHECK(cl.size() == 3);
  auto cl2 = subformula_closure({Formula::imp(p, Formula::coimp(q, r))});
  CHECK(cl2.size() == 5);
  CHECK(subformula_closure({}).empty());

  SUBCASE("idempotent and monotone") {
    testsupport::Rng rng(3);
    testsupport::GenOptions opts;
    for (int i = 0; i < 100; ++i) {
      Formula f = testsupport::random_formula(rng, opts);
      Formula g = testsupport::random_formula(rng, opts);
      auto once = subformula_closure({f});
      CHECK(subformula_closure(once) == once);
      auto bigger = subformula_closure({f, g});
      for (const auto& x : once)
        CHECK(std::binary_search(bigger.begin(), bigger.end(), x, formula_less));
    }
  }
}

TEST_CASE("parser never crashes on junk") {
  testsupport::Rng rng(1234);
  const std::string alphabet = "pq&|-<>~();,=' \ttopbot_X";
  for (int i = 0; i < 3000; ++i) {
    std::size_t len = rng() % 24;
    std::string s;
    for (std::size_t j = 0; j < len; ++j) s += alphabet[rng() % alphabet.size()];
    try {
      Formula f = parse_formula(s);
      CHECK(parse_formula(print_formula(f)) == f);
    } catch (const ParseError&) {
    }
    try {
      (void)parse_sequent(s);
    } catch (const ParseError&) {
    }
  }
}

TEST_CASE("sequent dualization") {
  Sequent s = parse_sequent("p, p -> q ; r =>+ p & q");
  Sequent d = dualize_sequent(s);
  CHECK(d == parse_sequent("r ; p, q -< p =>- p | q"));
  CHECK(dualize_sequent(d) == s);
}
