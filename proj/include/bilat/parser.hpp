#pragma once

#include <stdexcept>
#include <string>

#include "bilat/formula.hpp"

namespace bilat {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// Grammar (ASCII): atoms [a-z][a-zA-Z0-9_]* except the keywords top/bot;
// connectives & | -> -< with copy apostrophes attached (&'', top'); prefix ~
// for A -> bot and prefix - for top -< A; -< lexes by longest match.
// Precedence, tightest first: prefix ~/-, &, |, then -> and -< together;
// -> is right-associative, -< left-associative, and mixing the two at the
// same level without parentheses is an error.
Formula parse_formula(const std::string& text);

// "G1, G2 ; D1, D2 =>+ C" or "... =>- C"; either list may be empty.
Sequent parse_sequent(const std::string& text);

}  // namespace bilat
