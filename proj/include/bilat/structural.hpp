#pragma once

#include "bilat/engine.hpp"

namespace bilat {

// Weakening as a proof transformation: f is inserted into the chosen context
// of every sequent in the tree. Requires check(d) to hold; the result passes
// check with the same succedent and mode.
Derivation weaken(const Derivation& d, const Formula& f, Side side, const Signature& sig);

// Contraction admissibility probe: goal must carry `formula` with
// multiplicity >= 2 on `side`; decides the sequent with one occurrence
// removed. Throws std::invalid_argument on a bad precondition.
Decision contract_check(const Sequent& goal, const Formula& formula, Side side,
                        const Signature& sig, const Limits& limits = {});

enum class CutKind : std::uint8_t { CutA, CutC };

// Cut admissibility probe. For cut-a: left is (G; D) |-+ F and right carries
// F in its assumptions; for cut-c: left is (G; D) |-- F and right carries F in
// its counterassumptions. Both sides must decide derivable; returns the
// decision for (G, G'; D, D') |-* C with the cut formula removed from the
// right context. Throws std::invalid_argument on shape violations or
// underivable inputs.
Decision cut_check(const Sequent& left, const Sequent& right, CutKind kind,
                   const Signature& sig, const Limits& limits = {});

// Deducibility of identicals: a checkable derivation of (f; ) |-+ f for
// Plus and ( ; f) |-- f for Minus, built by structural recursion. Requires
// every connective copy in f to answer its full rule set under sig.
Derivation general_identity(const Formula& f, Mode mode, const Signature& sig);

}  // namespace bilat
