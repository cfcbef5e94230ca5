#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "bilat/formula.hpp"

namespace bilat {

// Which of a connective's rule schemas a given copy answers to.
// proof-only exposes the R+ and La schemas, dual-only the R- and Lc schemas.
enum class Subset : std::uint8_t { Full, ProofOnly, DualOnly };

const char* subset_name(Subset s);
Subset subset_from_name(const std::string& name);  // "full", "proof-only", "dual-only"

struct ConnTag {
  unsigned copy = 0;
  Subset subset = Subset::Full;
};

struct UnknownTagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enabled copies per base connective. Copy 0 of every connective is always
// enabled with the full rule set; restrictions live here, not in formulas.
class Signature {
public:
  Signature();  // base signature: copy 0 of each connective, full

  // Adds the next copy of the connective; returns its copy index.
  unsigned add_copy(Kind conn, Subset subset);

  unsigned copies(Kind conn) const;  // number of enabled copies
  Subset subset(Kind conn, unsigned copy) const;  // throws UnknownTagError
  bool known(Kind conn, unsigned copy) const;

  // Every connective occurring in f (or s) is enabled; throws otherwise.
  void validate(const Formula& f) const;
  void validate(const Sequent& s) const;

  // Swaps each connective with its dual and flips proof-only/dual-only flags.
  Signature dualized() const;

private:
  static std::size_t slot(Kind conn);
  std::array<std::vector<Subset>, 6> copies_;  // And, Or, Imp, Coimp, Top, Bot
};

Signature extend_signature(const Signature& base, Kind conn, Subset subset);

}  // namespace bilat
