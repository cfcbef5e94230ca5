#pragma once

#include <string>

#include "bilat/formula.hpp"

namespace bilat {

enum class PrintStyle : std::uint8_t { Ascii, Unicode, Latex };

struct PrintOptions {
  PrintStyle style = PrintStyle::Ascii;
  // Re-sugar A -> bot as ~A and top -< A as -A (base copies only).
  bool resugar_negations = false;
};

// ASCII output reparses to an identical formula/sequent; parenthesization is
// minimal for the declared precedence (~/- bind tightest, then &, then |,
// then -> and -< together at the bottom).
std::string print_formula(const Formula& f, const PrintOptions& opts = {});
std::string print_sequent(const Sequent& s, const PrintOptions& opts = {});

}  // namespace bilat
