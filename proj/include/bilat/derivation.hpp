#pragma once

#include <string>
#include <vector>

#include "bilat/rules.hpp"

namespace bilat {

// A finite tree of sequents labelled with rule instances. Leaves are
// zero-premise rule instances.
struct Derivation {
  Sequent conclusion;
  RuleInstance rule;
  std::vector<Derivation> premises;

  std::size_t node_count() const;
};

struct CheckResult {
  bool ok = true;
  std::vector<std::size_t> path;  // child indices from the root to the offender
  std::string reason;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::vector<std::size_t> p, std::string r) {
    return {false, std::move(p), std::move(r)};
  }
};

// Ok iff every node is an exact instance of its rule schema: multisets are
// compared with multiplicity, retention of principal formulas and mode
// uniformity included. Reports the first offending node in pre-order.
CheckResult check(const Derivation& d, const Signature& sig);

// Inserts f into the chosen context of every sequent in the tree. Every
// schema is closed under uniform context extension, so validity is preserved.
Derivation insert_context_everywhere(const Derivation& d, const Formula& f, Side side);

}  // namespace bilat
