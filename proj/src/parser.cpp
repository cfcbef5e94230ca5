#include "bilat/parser.hpp"

#include <cctype>
#include <vector>

namespace bilat {

namespace {

enum class Tok : std::uint8_t {
  Atom, Const,   // Const: top/bot with copy
  BinOp,         // & | -> -< with copy
  Tilde, Minus,
  LParen, RParen,
  Comma, Semicolon,
  SeqArrow,      // =>+ or =>-
  End
};

struct Token {
  Tok tok;
  std::size_t pos = 0;
  Kind kind = Kind::Atom;  // Const/BinOp
  unsigned copy = 0;
  std::string text;        // atom name
  Mode mode = Mode::Plus;  // SeqArrow
};

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return cur_; }
  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    cur_ = Token{};
    cur_.pos = i_;
    if (i_ >= s_.size()) {
      cur_.tok = Tok::End;
      return;
    }
    char c = s_[i_];
    if (c == '(') { cur_.tok = Tok::LParen; ++i_; return; }
    if (c == ')') { cur_.tok = Tok::RParen; ++i_; return; }
    if (c == ',') { cur_.tok = Tok::Comma; ++i_; return; }
    if (c == ';') { cur_.tok = Tok::Semicolon; ++i_; return; }
    if (c == '~') { cur_.tok = Tok::Tilde; ++i_; return; }
    if (c == '&') { ++i_; binop(Kind::And); return; }
    if (c == '|') { ++i_; binop(Kind::Or); return; }
    if (c == '-') {
      if (i_ + 1 < s_.size() && s_[i_ + 1] == '>') { i_ += 2; binop(Kind::Imp); return; }
      if (i_ + 1 < s_.size() && s_[i_ + 1] == '<') { i_ += 2; binop(Kind::Coimp); return; }
      cur_.tok = Tok::Minus;
      ++i_;
      return;
    }
    if (c == '=') {
      if (i_ + 2 < s_.size() && s_[i_ + 1] == '>' && (s_[i_ + 2] == '+' || s_[i_ + 2] == '-')) {
        cur_.tok = Tok::SeqArrow;
        cur_.mode = s_[i_ + 2] == '+' ? Mode::Plus : Mode::Minus;
        i_ += 3;
        return;
      }
      throw ParseError("malformed sequent arrow, expected =>+ or =>-", i_);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      std::string word = s_.substr(start, i_ - start);
      if (word == "top") { binop_const(Kind::Top); return; }
      if (word == "bot") { binop_const(Kind::Bot); return; }
      cur_.tok = Tok::Atom;
      cur_.text = std::move(word);
      return;
    }
    throw ParseError(std::string("unknown token '") + c + "'", i_);
  }

  void binop(Kind k) {
    cur_.tok = Tok::BinOp;
    cur_.kind = k;
    cur_.copy = take_primes();
  }

  void binop_const(Kind k) {
    cur_.tok = Tok::Const;
    cur_.kind = k;
    cur_.copy = take_primes();
  }

  unsigned take_primes() {
    unsigned n = 0;
    while (i_ < s_.size() && s_[i_] == '\'') { ++n; ++i_; }
    return n;
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token cur_;
};

class Parser {
public:
  explicit Parser(const std::string& s) : lex_(s) {}

  Formula formula() {
    Formula f = arrows();
    expect_end();
    return f;
  }

  Sequent sequent() {
    Sequent s;
    s.gamma = list_until(Tok::Semicolon);
    if (lex_.peek().tok != Tok::Semicolon)
      throw ParseError("expected ';' between assumptions and counterassumptions", lex_.peek().pos);
    lex_.next();
    s.delta = list_until(Tok::SeqArrow);
    if (lex_.peek().tok != Tok::SeqArrow)
      throw ParseError("expected sequent arrow =>+ or =>-", lex_.peek().pos);
    s.mode = lex_.next().mode;
    s.succedent = arrows();
    expect_end();
    return s;
  }

private:
  FormulaMultiset list_until(Tok stop) {
    FormulaMultiset out;
    if (lex_.peek().tok == stop) return out;
    out.insert(arrows());
    while (lex_.peek().tok == Tok::Comma) {
      lex_.next();
      out.insert(arrows());
    }
    return out;
  }

  // -> and -< share the lowest precedence level; a chain must be homogeneous.
  Formula arrows() {
    std::vector<Formula> operands{or_level()};
    std::vector<std::pair<Kind, unsigned>> ops;
    while (lex_.peek().tok == Tok::BinOp &&
           (lex_.peek().kind == Kind::Imp || lex_.peek().kind == Kind::Coimp)) {
      Token t = lex_.next();
      if (!ops.empty() && ops.front().first != t.kind)
        throw ParseError("mixing -> and -< without parentheses", t.pos);
      ops.emplace_back(t.kind, t.copy);
      operands.push_back(or_level());
    }
    if (ops.empty()) return operands[0];
    if (ops.front().first == Kind::Imp) {
      Formula acc = operands.back();
      for (std::size_t i = ops.size(); i-- > 0;)
        acc = Formula::imp(operands[i], acc, ops[i].second);
      return acc;
    }
    Formula acc = operands[0];
    for (std::size_t i = 0; i < ops.size(); ++i)
      acc = Formula::coimp(acc, operands[i + 1], ops[i].second);
    return acc;
  }

  Formula or_level() {
    Formula acc = and_level();
    while (lex_.peek().tok == Tok::BinOp && lex_.peek().kind == Kind::Or) {
      Token t = lex_.next();
      acc = Formula::disj(acc, and_level(), t.copy);
    }
    return acc;
  }

  Formula and_level() {
    Formula acc = unary();
    while (lex_.peek().tok == Tok::BinOp && lex_.peek().kind == Kind::And) {
      Token t = lex_.next();
      acc = Formula::conj(acc, unary(), t.copy);
    }
    return acc;
  }

  Formula unary() {
    if (lex_.peek().tok == Tok::Tilde) {
      lex_.next();
      return neg(unary());
    }
    if (lex_.peek().tok == Tok::Minus) {
      lex_.next();
      return coneg(unary());
    }
    return primary();
  }

  Formula primary() {
    Token t = lex_.next();
    switch (t.tok) {
      case Tok::Atom: return Formula::atom(t.text);
      case Tok::Const: return Formula::make_const(t.kind, t.copy);
      case Tok::LParen: {
        Formula f = arrows();
        if (lex_.peek().tok != Tok::RParen)
          throw ParseError("unbalanced parentheses, expected ')'", lex_.peek().pos);
        lex_.next();
        return f;
      }
      case Tok::End: throw ParseError("unexpected end of input", t.pos);
      default: throw ParseError("expected a formula", t.pos);
    }
  }

  void expect_end() {
    if (lex_.peek().tok != Tok::End)
      throw ParseError("trailing input after formula", lex_.peek().pos);
  }

  Lexer lex_;
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).formula(); }

Sequent parse_sequent(const std::string& text) { return Parser(text).sequent(); }

}  // namespace bilat
