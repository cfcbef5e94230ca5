#pragma once

#include <string>

#include "bilat/derivation.hpp"

namespace bilat {

// Rule label in math mode, e.g. AndR-1 as \land\mathrm{R}^{-}_{1}.
std::string latex_rule_label(RuleId id);

// A bussproofs prooftree environment for the derivation.
std::string derivation_to_latex(const Derivation& d);

// A plain-text proof tree, one node per line, premises indented under their
// conclusion.
std::string derivation_to_tree(const Derivation& d);

}  // namespace bilat
