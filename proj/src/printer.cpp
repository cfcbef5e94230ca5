#include "bilat/printer.hpp"

#include <stdexcept>

namespace bilat {

namespace {

// Binding strength: arrows 0, | 1, & 2, prefix/leaf 3.
int level_of(Kind k) {
  switch (k) {
    case Kind::Imp:
    case Kind::Coimp: return 0;
    case Kind::Or: return 1;
    case Kind::And: return 2;
    default: return 3;
  }
}

std::string primes(unsigned copy) { return std::string(copy, '\''); }

std::string token(Kind k, unsigned copy, PrintStyle style) {
  const char* t = nullptr;
  switch (style) {
    case PrintStyle::Ascii:
      switch (k) {
        case Kind::And: t = "&"; break;
        case Kind::Or: t = "|"; break;
        case Kind::Imp: t = "->"; break;
        case Kind::Coimp: t = "-<"; break;
        case Kind::Top: t = "top"; break;
        case Kind::Bot: t = "bot"; break;
        default: break;
      }
      break;
    case PrintStyle::Unicode:
      switch (k) {
        case Kind::And: t = "∧"; break;
        case Kind::Or: t = "∨"; break;
        case Kind::Imp: t = "→"; break;
        case Kind::Coimp: t = "≺"; break;
        case Kind::Top: t = "⊤"; break;
        case Kind::Bot: t = "⊥"; break;
        default: break;
      }
      break;
    case PrintStyle::Latex:
      switch (k) {
        case Kind::And: t = "\\land"; break;
        case Kind::Or: t = "\\lor"; break;
        case Kind::Imp: t = "\\to"; break;
        case Kind::Coimp: t = "\\prec"; break;
        case Kind::Top: t = "\\top"; break;
        case Kind::Bot: t = "\\bot"; break;
        default: break;
      }
      break;
  }
  if (t == nullptr) throw std::logic_error("token: bad kind");
  return t + primes(copy);
}

bool is_neg_sugar(const Formula& f) {
  return f.kind() == Kind::Imp && f.copy() == 0 && f.right().kind() == Kind::Bot &&
         f.right().copy() == 0;
}

bool is_coneg_sugar(const Formula& f) {
  return f.kind() == Kind::Coimp && f.copy() == 0 && f.left().kind() == Kind::Top &&
         f.left().copy() == 0;
}

// min_level: weakest connective printable here without parentheses.
void print_rec(std::string& out, const Formula& f, int min_level, const PrintOptions& o) {
  if (f.kind() == Kind::Atom) {
    out += f.atom_name();
    return;
  }
  if (is_nullary(f.kind())) {
    out += token(f.kind(), f.copy(), o.style);
    return;
  }
  if (o.resugar_negations && is_neg_sugar(f)) {
    out += o.style == PrintStyle::Latex ? "\\lnot " : (o.style == PrintStyle::Unicode ? "¬" : "~");
    print_rec(out, f.left(), 3, o);
    return;
  }
  if (o.resugar_negations && is_coneg_sugar(f)) {
    out += o.style == PrintStyle::Latex ? "-" : "-";
    print_rec(out, f.right(), 3, o);
    return;
  }
  int lvl = level_of(f.kind());
  bool parens = lvl < min_level;
  if (parens) out += '(';
  // -> is right-associative, -< left-associative; a child that is the other
  // arrow kind at the same level must be parenthesized, since mixing them
  // unparenthesized is a parse error.
  int left_min, right_min;
  if (f.kind() == Kind::Imp) {
    left_min = lvl + 1;
    right_min = f.right().kind() == Kind::Coimp ? lvl + 1 : lvl;
  } else if (f.kind() == Kind::Coimp) {
    left_min = f.left().kind() == Kind::Imp ? lvl + 1 : lvl;
    right_min = lvl + 1;
  } else {
    // & and | associate to the left.
    left_min = lvl;
    right_min = lvl + 1;
  }
  print_rec(out, f.left(), left_min, o);
  out += ' ';
  out += token(f.kind(), f.copy(), o.style);
  out += ' ';
  print_rec(out, f.right(), right_min, o);
  if (parens) out += ')';
}

}  // namespace

std::string print_formula(const Formula& f, const PrintOptions& opts) {
  if (!f.valid()) return "<invalid>";
  std::string out;
  print_rec(out, f, 0, opts);
  return out;
}

std::string print_sequent(const Sequent& s, const PrintOptions& opts) {
  std::string out;
  bool first = true;
  for (const auto& f : s.gamma.items()) {
    if (!first) out += ", ";
    first = false;
    out += print_formula(f, opts);
  }
  if (!s.gamma.empty()) out += ' ';
  out += ';';
  first = true;
  for (const auto& f : s.delta.items()) {
    out += first ? " " : ", ";
    first = false;
    out += print_formula(f, opts);
  }
  switch (opts.style) {
    case PrintStyle::Ascii:
      out += s.mode == Mode::Plus ? " =>+ " : " =>- ";
      break;
    case PrintStyle::Unicode:
      out += s.mode == Mode::Plus ? " ⊢⁺ " : " ⊢⁻ ";
      break;
    case PrintStyle::Latex:
      out += s.mode == Mode::Plus ? " \\vdash^{+} " : " \\vdash^{-} ";
      break;
  }
  out += print_formula(s.succedent, opts);
  return out;
}

}  // namespace bilat
