#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace bilat {

enum class Kind : std::uint8_t { Atom, Top, Bot, And, Or, Imp, Coimp };

bool is_binary(Kind k);
bool is_nullary(Kind k);  // Top, Bot

// Syntactic duality on connectives: And<->Or, Imp<->Coimp, Top<->Bot.
Kind dual_kind(Kind k);

const char* kind_word(Kind k);  // "atom", "and", "or", "imp", "coimp", "top", "bot"

enum class Mode : std::uint8_t { Plus, Minus };
Mode flip(Mode m);

// Immutable formula tree. Connective nodes carry a copy index: copy 0 is the
// base connective, copy k >= 1 is the k-th duplicate of it (rendered with k
// apostrophes, e.g. &''). Atoms carry no copy index. Structural equality
// includes copy indices. Handles are cheap to copy and share subtrees.
class Formula {
public:
  Formula() = default;  // empty handle, only useful as a container placeholder

  static Formula atom(std::string name);
  static Formula top(unsigned copy = 0);
  static Formula bot(unsigned copy = 0);
  static Formula conj(Formula l, Formula r, unsigned copy = 0);
  static Formula disj(Formula l, Formula r, unsigned copy = 0);
  static Formula imp(Formula l, Formula r, unsigned copy = 0);
  static Formula coimp(Formula l, Formula r, unsigned copy = 0);
  static Formula make(Kind k, Formula l, Formula r, unsigned copy = 0);
  static Formula make_const(Kind k, unsigned copy = 0);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  unsigned copy() const;
  const std::string& atom_name() const;
  const Formula& left() const;
  const Formula& right() const;
  std::size_t size() const;  // node count
  std::size_t hash() const;

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Negation macros: ~A stands for A -> bot, co-negation -A for top -< A.
// These exist only as sugar; no primitive negation node is ever built.
Formula neg(Formula a);
Formula coneg(Formula a);

// Total order on formulas: by size first, then kind/copy/name, then children.
// Size-first makes sorted containers enumerate smaller formulas first.
int formula_cmp(const Formula& a, const Formula& b);
bool formula_less(const Formula& a, const Formula& b);

// Atom -> itself, top <-> bot (same copy), dual(A & B) = dual(A) | dual(B)
// and conversely, dual(A -> B) = dual(B) -< dual(A) and conversely.
// An involution.
Formula dualize_formula(const Formula& f);

// Smallest superset of fs closed under immediate subformulas; sorted, deduped.
std::vector<Formula> subformula_closure(const std::vector<Formula>& fs);

// Finite multiset of formulas kept canonically sorted: order-insensitive,
// multiplicity-sensitive.
class FormulaMultiset {
public:
  FormulaMultiset() = default;
  FormulaMultiset(std::initializer_list<Formula> fs);
  explicit FormulaMultiset(std::vector<Formula> fs);

  void insert(const Formula& f);
  bool erase_one(const Formula& f);  // false if absent
  bool contains(const Formula& f) const;
  std::size_t count(const Formula& f) const;
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<Formula>& items() const { return items_; }
  std::vector<Formula> distinct() const;  // one representative per value

  FormulaMultiset united(const FormulaMultiset& o) const;  // multiset sum
  FormulaMultiset deduped() const;                         // set projection

  bool operator==(const FormulaMultiset& o) const;
  bool operator!=(const FormulaMultiset& o) const { return !(*this == o); }
  std::size_t hash() const;

private:
  std::vector<Formula> items_;  // sorted by formula_less
};

// (Gamma; Delta) |-* C with Gamma assumptions and Delta counterassumptions.
struct Sequent {
  FormulaMultiset gamma;
  FormulaMultiset delta;
  Mode mode = Mode::Plus;
  Formula succedent;

  bool operator==(const Sequent& o) const;
  bool operator!=(const Sequent& o) const { return !(*this == o); }
  std::size_t hash() const;
  Sequent normalized() const;  // contexts collapsed to sets
  std::vector<Formula> all_formulas() const;
};

// (Gamma; Delta) |-* C  maps to  (dual Delta; dual Gamma) |-*op dual C.
Sequent dualize_sequent(const Sequent& s);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};
struct SequentHash {
  std::size_t operator()(const Sequent& s) const { return s.hash(); }
};

// Streaming uses the default ASCII printer; handy in tests and diagnostics.
std::ostream& operator<<(std::ostream& os, const Formula& f);
std::ostream& operator<<(std::ostream& os, const Sequent& s);

}  // namespace bilat
