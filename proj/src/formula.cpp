#include "bilat/formula.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

#include "bilat/printer.hpp"

namespace bilat {

bool is_binary(Kind k) {
  switch (k) {
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
    case Kind::Coimp: return true;
    default: return false;
  }
}

bool is_nullary(Kind k) { return k == Kind::Top || k == Kind::Bot; }

Kind dual_kind(Kind k) {
  switch (k) {
    case Kind::Atom: return Kind::Atom;
    case Kind::Top: return Kind::Bot;
    case Kind::Bot: return Kind::Top;
    case Kind::And: return Kind::Or;
    case Kind::Or: return Kind::And;
    case Kind::Imp: return Kind::Coimp;
    case Kind::Coimp: return Kind::Imp;
  }
  throw std::logic_error("dual_kind: bad kind");
}

const char* kind_word(Kind k) {
  switch (k) {
    case Kind::Atom: return "atom";
    case Kind::Top: return "top";
    case Kind::Bot: return "bot";
    case Kind::And: return "and";
    case Kind::Or: return "or";
    case Kind::Imp: return "imp";
    case Kind::Coimp: return "coimp";
  }
  throw std::logic_error("kind_word: bad kind");
}

Mode flip(Mode m) { return m == Mode::Plus ? Mode::Minus : Mode::Plus; }

namespace {
std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
}  // namespace

struct Formula::Node {
  Kind kind;
  unsigned copy = 0;
  std::string name;  // atoms only
  Formula left, right;
  std::size_t size = 1;
  std::size_t hash = 0;
};

Formula Formula::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  n->hash = mix(std::hash<std::string>{}(n->name), 0x41);
  return Formula(std::move(n));
}

Formula Formula::make_const(Kind k, unsigned copy) {
  if (!is_nullary(k)) throw std::logic_error("make_const: not a constant kind");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->copy = copy;
  n->hash = mix(static_cast<std::size_t>(k) * 0x1000193, copy);
  return Formula(std::move(n));
}

Formula Formula::make(Kind k, Formula l, Formula r, unsigned copy) {
  if (!is_binary(k)) throw std::logic_error("make: not a binary kind");
  if (!l.valid() || !r.valid()) throw std::logic_error("make: invalid child");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->copy = copy;
  n->size = 1 + l.size() + r.size();
  n->hash = mix(mix(mix(static_cast<std::size_t>(k) * 0x01000193, copy), l.hash()), r.hash());
  n->left = std::move(l);
  n->right = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::top(unsigned copy) { return make_const(Kind::Top, copy); }
Formula Formula::bot(unsigned copy) { return make_const(Kind::Bot, copy); }
Formula Formula::conj(Formula l, Formula r, unsigned copy) { return make(Kind::And, std::move(l), std::move(r), copy); }
Formula Formula::disj(Formula l, Formula r, unsigned copy) { return make(Kind::Or, std::move(l), std::move(r), copy); }
Formula Formula::imp(Formula l, Formula r, unsigned copy) { return make(Kind::Imp, std::move(l), std::move(r), copy); }
Formula Formula::coimp(Formula l, Formula r, unsigned copy) { return make(Kind::Coimp, std::move(l), std::move(r), copy); }

Kind Formula::kind() const { return node_->kind; }
unsigned Formula::copy() const { return node_->copy; }
const std::string& Formula::atom_name() const { return node_->name; }
const Formula& Formula::left() const { return node_->left; }
const Formula& Formula::right() const { return node_->right; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  return formula_cmp(*this, o) == 0;
}

Formula neg(Formula a) { return Formula::imp(std::move(a), Formula::bot()); }
Formula coneg(Formula a) { return Formula::coimp(Formula::top(), std::move(a)); }

int formula_cmp(const Formula& a, const Formula& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (a.kind() == Kind::Atom) {
    int c = a.atom_name().compare(b.atom_name());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (a.copy() != b.copy()) return a.copy() < b.copy() ? -1 : 1;
  if (is_binary(a.kind())) {
    if (int c = formula_cmp(a.left(), b.left()); c != 0) return c;
    return formula_cmp(a.right(), b.right());
  }
  return 0;
}

bool formula_less(const Formula& a, const Formula& b) { return formula_cmp(a, b) < 0; }

Formula dualize_formula(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom: return f;
    case Kind::Top: return Formula::bot(f.copy());
    case Kind::Bot: return Formula::top(f.copy());
    case Kind::And:
      return Formula::disj(dualize_formula(f.left()), dualize_formula(f.right()), f.copy());
    case Kind::Or:
      return Formula::conj(dualize_formula(f.left()), dualize_formula(f.right()), f.copy());
    case Kind::Imp:
      return Formula::coimp(dualize_formula(f.right()), dualize_formula(f.left()), f.copy());
    case Kind::Coimp:
      return Formula::imp(dualize_formula(f.right()), dualize_formula(f.left()), f.copy());
  }
  throw std::logic_error("dualize_formula: bad kind");
}

std::vector<Formula> subformula_closure(const std::vector<Formula>& fs) {
  std::set<Formula, decltype(&formula_less)> out(&formula_less);
  std::vector<Formula> work = fs;
  while (!work.empty()) {
    Formula f = work.back();
    work.pop_back();
    if (!f.valid() || !out.insert(f).second) continue;
    if (is_binary(f.kind())) {
      work.push_back(f.left());
      work.push_back(f.right());
    }
  }
  return {out.begin(), out.end()};
}

FormulaMultiset::FormulaMultiset(std::initializer_list<Formula> fs) : items_(fs) {
  std::sort(items_.begin(), items_.end(), formula_less);
}

FormulaMultiset::FormulaMultiset(std::vector<Formula> fs) : items_(std::move(fs)) {
  std::sort(items_.begin(), items_.end(), formula_less);
}

void FormulaMultiset::insert(const Formula& f) {
  items_.insert(std::lower_bound(items_.begin(), items_.end(), f, formula_less), f);
}

bool FormulaMultiset::erase_one(const Formula& f) {
  auto it = std::lower_bound(items_.begin(), items_.end(), f, formula_less);
  if (it == items_.end() || *it != f) return false;
  items_.erase(it);
  return true;
}

bool FormulaMultiset::contains(const Formula& f) const { return count(f) > 0; }

std::size_t FormulaMultiset::count(const Formula& f) const {
  auto lo = std::lower_bound(items_.begin(), items_.end(), f, formula_less);
  std::size_t n = 0;
  for (auto it = lo; it != items_.end() && *it == f; ++it) ++n;
  return n;
}

std::vector<Formula> FormulaMultiset::distinct() const {
  std::vector<Formula> out;
  for (const auto& f : items_)
    if (out.empty() || out.back() != f) out.push_back(f);
  return out;
}

FormulaMultiset FormulaMultiset::united(const FormulaMultiset& o) const {
  std::vector<Formula> merged;
  merged.reserve(items_.size() + o.items_.size());
  std::merge(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(),
             std::back_inserter(merged), formula_less);
  FormulaMultiset out;
  out.items_ = std::move(merged);
  return out;
}

FormulaMultiset FormulaMultiset::deduped() const {
  FormulaMultiset out;
  out.items_ = distinct();
  return out;
}

bool FormulaMultiset::operator==(const FormulaMultiset& o) const {
  return items_ == o.items_;
}

std::size_t FormulaMultiset::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& f : items_) h = mix(h, f.hash());
  return h;
}

bool Sequent::operator==(const Sequent& o) const {
  return mode == o.mode && succedent == o.succedent && gamma == o.gamma && delta == o.delta;
}

std::size_t Sequent::hash() const {
  std::size_t h = mode == Mode::Plus ? 0x2b : 0x2d;
  h = mix(h, succedent.hash());
  h = mix(h, gamma.hash());
  h = mix(h, delta.hash());
  return h;
}

Sequent Sequent::normalized() const {
  return Sequent{gamma.deduped(), delta.deduped(), mode, succedent};
}

std::vector<Formula> Sequent::all_formulas() const {
  std::vector<Formula> out = gamma.items();
  out.insert(out.end(), delta.items().begin(), delta.items().end());
  out.push_back(succedent);
  return out;
}

Sequent dualize_sequent(const Sequent& s) {
  Sequent out;
  for (const auto& f : s.delta.items()) out.gamma.insert(dualize_formula(f));
  for (const auto& f : s.gamma.items()) out.delta.insert(dualize_formula(f));
  out.mode = flip(s.mode);
  out.succedent = dualize_formula(s.succedent);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  return os << print_formula(f);
}

std::ostream& operator<<(std::ostream& os, const Sequent& s) {
  return os << print_sequent(s);
}

}  // namespace bilat
