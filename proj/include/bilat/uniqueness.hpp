#pragma once

#include "bilat/engine.hpp"

namespace bilat {

struct SequentVerdict {
  std::string label;
  Sequent sequent;
  bool derivable = false;
  std::optional<Derivation> proof;  // kept for derivable entries
  SearchStats stats;                // kept for underivable entries
};

// Bilateral uniqueness check for one connective. The definitional block
// always compares the base connective against a full copy:
//   (i)   (A # B; ) |-+ A #' B   and   (A #' B; ) |-+ A # B
//   (ii)  ( ; A # B) |-- A #' B  and   ( ; A #' B) |-- A # B
// and the connective counts as unique iff all four are derivable. In the
// partial configuration a proof-only copy #' and a dual-only copy #'' are
// enabled as well; the same-relation block pairs each partial copy with the
// relation its rules live in (all derivable) and the cross-relation block
// pairs them the other way round (all underivable).
struct UniquenessReport {
  Kind connective;
  bool partial = false;
  unsigned full_copy = 1;
  std::optional<unsigned> proof_only_copy;
  std::optional<unsigned> dual_only_copy;
  Formula component_a, component_b;
  Signature signature;

  std::vector<SequentVerdict> definitional;   // 4 entries
  std::vector<SequentVerdict> same_relation;  // 4 entries when partial
  std::vector<SequentVerdict> cross_relation; // 4 entries when partial
  bool unique = false;

  std::vector<const SequentVerdict*> all() const;
};

UniquenessReport uniqueness_report(Kind connective, bool partial, const Formula& a,
                                   const Formula& b, const Limits& limits = {});

// The two formulas the non-congruentiality discussion pairs: F and G are
// probed for interderivability under |-+ and under |--, for the negation
// macro pair ~(p -> q) / p & ~q and for the co-negation pair
// -(p -> q) / p & -q (which exhibits the split: |-+ holds, |-- fails).
struct CongruentialityReport {
  struct Block {
    Formula f, g;
    SequentVerdict plus_fg, plus_gf, minus_fg, minus_gf;
    bool plus_interderivable = false;
    bool minus_interderivable = false;
  };
  Block negation;     // ~(p->q) vs p & ~q
  Block conegation;   // -(p->q) vs p & -q
};

CongruentialityReport congruentiality_witness(const Limits& limits = {});

// One-hole formula template; the hole is a reserved placeholder leaf.
class ContextTemplate {
public:
  // skeleton must contain the placeholder hole() exactly once.
  explicit ContextTemplate(Formula skeleton);
  static Formula hole();
  Formula apply(const Formula& f) const;
  const Formula& skeleton() const { return skeleton_; }

private:
  Formula skeleton_;
};

// Probes the synonymy consequence of bilateral equivalence: if A and B are
// interderivable under both relations, every template instance T[A], T[B]
// must be as well.
struct SynonymyReport {
  Formula a, b;
  std::vector<SequentVerdict> base;  // 4 entries
  bool bilaterally_equivalent = false;
  struct TemplateResult {
    Formula skeleton;
    std::vector<SequentVerdict> verdicts;  // 4 entries
    bool bilaterally_equivalent = false;
  };
  std::vector<TemplateResult> templates;  // filled only when the base holds
  bool synonymy_confirmed = false;        // base && all templates
};

SynonymyReport synonymy_spotcheck(const Formula& a, const Formula& b,
                                  const std::vector<ContextTemplate>& contexts,
                                  const Signature& sig, const Limits& limits = {});

}  // namespace bilat
