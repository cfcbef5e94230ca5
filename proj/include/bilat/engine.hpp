#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "bilat/derivation.hpp"

namespace bilat {

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Disagreement between the two decision procedures: a bug signal, never a
// logic answer.
struct OracleDisagreementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::size_t max_visited = 1'000'000;    // backward search node visits
  std::size_t max_generated = 1'000'000;  // forward saturation candidates
  std::size_t max_universe = 24;          // subformula universe size
};

struct SearchStats {
  std::size_t visited = 0;       // backward search
  std::size_t universe = 0;      // forward saturation
  std::size_t generated = 0;
  std::size_t subsumptions = 0;
};

struct Decision {
  bool derivable = false;
  std::optional<Derivation> proof;  // present iff derivable
  SearchStats stats;
};

// Memoized backward proof search. Search states are set-normalized sequents;
// a branch fails when its state repeats among its ancestors. Successes are
// cached unconditionally; a failure is cached only when its exploration never
// cut off on a strict ancestor (such failures are context-dependent).
// A prover instance may be reused for many goals from one thread; the memo
// carries over.
class BackwardProver {
public:
  explicit BackwardProver(Signature sig, Limits limits = {});
  ~BackwardProver();
  BackwardProver(BackwardProver&&) noexcept;
  BackwardProver& operator=(BackwardProver&&) noexcept;

  Decision decide(const Sequent& goal);

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Inverse-method saturation over the subformula universe of a fixed seed set.
// Facts are set-context sequents; s1 subsumes s2 iff same mode and succedent,
// Gamma1 within Gamma2 and Delta1 within Delta2. Saturation runs once at
// construction; queries are lookups plus proof reconstruction.
class ForwardSpace {
public:
  ForwardSpace(const std::vector<Formula>& seeds, Signature sig, Limits limits = {});
  ~ForwardSpace();
  ForwardSpace(ForwardSpace&&) noexcept;
  ForwardSpace& operator=(ForwardSpace&&) noexcept;

  // The goal's formulas must lie in the universe.
  bool holds(const Sequent& goal) const;
  // Reconstructed proof; conclusion set-normalizes to the goal (duplicated
  // context occurrences may appear where reconstruction weaves facts together).
  std::optional<Derivation> prove(const Sequent& goal) const;
  const SearchStats& stats() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Decision decide_backward(const Sequent& goal, const Signature& sig, const Limits& limits = {});
Decision saturate_forward(const Sequent& goal, const Signature& sig, const Limits& limits = {});

struct DecideOptions {
  bool oracle = false;  // cross-check backward search against forward saturation
  Limits limits;
};

// The public entry point: backward search, optionally cross-checked. Throws
// OracleDisagreementError if the procedures disagree.
Decision decide(const Sequent& goal, const Signature& sig, const DecideOptions& options = {});

}  // namespace bilat
