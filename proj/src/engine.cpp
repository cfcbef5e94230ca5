#include "bilat/engine.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "bilat/printer.hpp"

namespace bilat {

namespace {

// target must contain d's conclusion contexts; inserts the missing
// occurrences uniformly through the tree.
Derivation pad_to(Derivation d, const Sequent& target) {
  for (Side side : {Side::Gamma, Side::Delta}) {
    const auto& want = side == Side::Gamma ? target.gamma : target.delta;
    for (const Formula& f : want.distinct()) {
      const auto& have =
          side == Side::Gamma ? d.conclusion.gamma : d.conclusion.delta;
      std::size_t missing = want.count(f) - std::min(want.count(f), have.count(f));
      for (std::size_t i = 0; i < missing; ++i) d = insert_context_everywhere(d, f, side);
    }
  }
  return d;
}

// Saturating multiset difference.
FormulaMultiset msub(const FormulaMultiset& a, const FormulaMultiset& b) {
  FormulaMultiset out = a;
  for (const Formula& f : b.items()) out.erase_one(f);
  return out;
}

// Pointwise maximum of multiplicities.
FormulaMultiset mmax(const FormulaMultiset& a, const FormulaMultiset& b) {
  FormulaMultiset out = a;
  for (const Formula& f : b.distinct()) {
    std::size_t extra = b.count(f) - std::min(b.count(f), a.count(f));
    for (std::size_t i = 0; i < extra; ++i) out.insert(f);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Backward search

struct BackwardProver::Impl {
  Signature sig;
  Limits limits;
  std::unordered_map<Sequent, Derivation, SequentHash> proofs;
  std::unordered_set<Sequent, SequentHash> failures;
  std::unordered_map<Sequent, std::size_t, SequentHash> on_path;
  std::size_t visited = 0;

  static constexpr std::size_t kNoCut = static_cast<std::size_t>(-1);
  struct Outcome {
    bool ok;
    std::size_t min_cut;  // shallowest ancestor a failed exploration cut on
  };

  Outcome search(const Sequent& s, std::size_t depth) {
    if (proofs.contains(s)) return {true, kNoCut};
    if (failures.contains(s)) return {false, kNoCut};
    if (auto it = on_path.find(s); it != on_path.end()) return {false, it->second};
    if (++visited > limits.max_visited)
      throw ResourceLimitError("backward search exceeded its visit limit");

    on_path.emplace(s, depth);
    std::size_t min_cut = kNoCut;
    bool found = false;
    Derivation result;
    for (auto& [inst, prems] : backward_expansions(s, sig)) {
      bool all_ok = true;
      std::vector<Derivation> children;
      children.reserve(prems.size());
      for (const Sequent& p : prems) {
        Sequent pn = p.normalized();
        Outcome o = search(pn, depth + 1);
        if (!o.ok) {
          min_cut = std::min(min_cut, o.min_cut);
          all_ok = false;
          break;
        }
        children.push_back(pad_to(proofs.at(pn), p));
      }
      if (!all_ok) continue;
      result.conclusion = s;
      result.rule = inst;
      result.premises = std::move(children);
      found = true;
      break;
    }
    on_path.erase(s);
    if (found) {
      proofs.emplace(s, std::move(result));
      return {true, kNoCut};
    }
    // A failure that only cut off on this very sequent (or not at all) is
    // absolute; one that leaned on a strict ancestor is context-dependent.
    if (min_cut >= depth) {
      failures.insert(s);
      return {false, kNoCut};
    }
    return {false, min_cut};
  }
};

BackwardProver::BackwardProver(Signature sig, Limits limits)
    : impl_(std::make_unique<Impl>()) {
  impl_->sig = std::move(sig);
  impl_->limits = limits;
}

BackwardProver::~BackwardProver() = default;
BackwardProver::BackwardProver(BackwardProver&&) noexcept = default;
BackwardProver& BackwardProver::operator=(BackwardProver&&) noexcept = default;

Decision BackwardProver::decide(const Sequent& goal) {
  impl_->sig.validate(goal);
  impl_->visited = 0;
  Sequent norm = goal.normalized();
  auto outcome = impl_->search(norm, 0);
  Decision dec;
  dec.stats.visited = impl_->visited;
  dec.derivable = outcome.ok;
  if (outcome.ok) dec.proof = pad_to(impl_->proofs.at(norm), goal);
  return dec;
}

Decision decide_backward(const Sequent& goal, const Signature& sig, const Limits& limits) {
  BackwardProver prover(sig, limits);
  return prover.decide(goal);
}

// ---------------------------------------------------------------------------
// Forward saturation (inverse method)

struct ForwardSpace::Impl {
  Signature sig;
  Limits limits;
  std::vector<Formula> universe;  // sorted by formula_less
  SearchStats stats;

  struct FPrem {
    std::optional<Mode> mode;  // nullopt = *
    int succ = -1;             // -1 = free conclusion formula C
    std::uint64_t need_g = 0, need_d = 0;  // consumed actives
  };
  struct App {
    RuleId rule;
    int principal;
    std::optional<Mode> concl_mode;  // nullopt = *
    int concl_succ;                  // -1: taken from the C premise
    std::uint64_t add_g = 0, add_d = 0;
    std::vector<FPrem> prems;
  };
  std::vector<App> apps;

  struct Fact {
    std::uint64_t g = 0, d = 0;
    Mode mode = Mode::Plus;
    int succ = 0;
    RuleId rule = RuleId::RfPlus;
    int principal = 0;
    int prem0 = -1, prem1 = -1;
    bool active = true;
  };
  std::vector<Fact> facts;
  std::vector<std::vector<int>> buckets;  // (mode, succ) -> fact indices
  std::vector<int> by_mode[2];
  std::deque<int> worklist;

  int index_of(const Formula& f) const {
    auto it = std::lower_bound(universe.begin(), universe.end(), f, formula_less);
    if (it == universe.end() || *it != f) return -1;
    return static_cast<int>(it - universe.begin());
  }

  std::size_t bucket_key(Mode m, int succ) const {
    return (m == Mode::Plus ? 0 : universe.size()) + static_cast<std::size_t>(succ);
  }

  bool subsumes(const Fact& a, std::uint64_t g, std::uint64_t d, Mode m, int succ) const {
    return a.mode == m && a.succ == succ && (a.g & ~g) == 0 && (a.d & ~d) == 0;
  }

  bool insert(Fact f) {
    if (++stats.generated > limits.max_generated)
      throw ResourceLimitError("forward saturation exceeded its generation limit");
    auto& bucket = buckets[bucket_key(f.mode, f.succ)];
    for (int i : bucket) {
      const Fact& e = facts[i];
      if (e.active && (e.g & ~f.g) == 0 && (e.d & ~f.d) == 0) {
        ++stats.subsumptions;
        return false;
      }
    }
    for (int i : bucket) {
      Fact& e = facts[i];
      if (e.active && (f.g & ~e.g) == 0 && (f.d & ~e.d) == 0) {
        e.active = false;
        ++stats.subsumptions;
      }
    }
    int idx = static_cast<int>(facts.size());
    facts.push_back(f);
    bucket.push_back(idx);
    by_mode[f.mode == Mode::Plus ? 0 : 1].push_back(idx);
    worklist.push_back(idx);
    return true;
  }

  void seed(RuleId rule, int principal, std::uint64_t g, std::uint64_t d, Mode m, int succ) {
    Fact f;
    f.g = g;
    f.d = d;
    f.mode = m;
    f.succ = succ;
    f.rule = rule;
    f.principal = principal;
    insert(f);
  }

  void build_apps_and_seeds() {
    const int n = static_cast<int>(universe.size());
    for (int ip = 0; ip < n; ++ip) {
      const Formula& p = universe[ip];
      if (p.kind() == Kind::Atom) {
        seed(RuleId::RfPlus, ip, std::uint64_t(1) << ip, 0, Mode::Plus, ip);
        seed(RuleId::RfMinus, ip, 0, std::uint64_t(1) << ip, Mode::Minus, ip);
        continue;
      }
      Subset sub = sig.subset(p.kind(), p.copy());
      auto admitted = [&](RuleId id) { return rule_admitted(id, sub); };
      if (p.kind() == Kind::Top) {
        if (admitted(RuleId::TopRPlus)) seed(RuleId::TopRPlus, ip, 0, 0, Mode::Plus, ip);
        if (admitted(RuleId::TopLc))
          for (int ic = 0; ic < n; ++ic)
            for (Mode m : {Mode::Plus, Mode::Minus})
              seed(RuleId::TopLc, ip, 0, std::uint64_t(1) << ip, m, ic);
        continue;
      }
      if (p.kind() == Kind::Bot) {
        if (admitted(RuleId::BotRMinus)) seed(RuleId::BotRMinus, ip, 0, 0, Mode::Minus, ip);
        if (admitted(RuleId::BotLa))
          for (int ic = 0; ic < n; ++ic)
            for (Mode m : {Mode::Plus, Mode::Minus})
              seed(RuleId::BotLa, ip, std::uint64_t(1) << ip, 0, m, ic);
        continue;
      }
      int ia = index_of(p.left());
      int ib = index_of(p.right());
      for (const RuleSchema& s : rule_table()) {
        if (s.head != p.kind() || !admitted(s.id) || s.premises.empty()) continue;
        App app;
        app.rule = s.id;
        app.principal = ip;
        app.concl_mode = s.conclusion_mode;
        auto side = principal_side(s.id);
        if (side) {
          app.concl_succ = -1;
          (*side == Side::Gamma ? app.add_g : app.add_d) |= std::uint64_t(1) << ip;
        } else {
          app.concl_succ = ip;
        }
        for (const PremiseSpec& ps : s.premises) {
          FPrem fp;
          fp.mode = ps.mode;
          switch (ps.succedent) {
            case ActiveRef::A: fp.succ = ia; break;
            case ActiveRef::B: fp.succ = ib; break;
            case ActiveRef::C: fp.succ = -1; break;
          }
          for (ActiveRef r : ps.add_gamma)
            fp.need_g |= std::uint64_t(1) << (r == ActiveRef::A ? ia : ib);
          for (ActiveRef r : ps.add_delta)
            fp.need_d |= std::uint64_t(1) << (r == ActiveRef::A ? ia : ib);
          app.prems.push_back(fp);
        }
        apps.push_back(std::move(app));
      }
    }
  }

  // Mode and succedent must match; active formulas a premise slot mentions
  // need not be present in the fact (facts are weakening-closed, so an absent
  // active is weakened in and the consumption masks no-op on it).
  bool fits(const FPrem& p, const Fact& f) const {
    if (p.mode && *p.mode != f.mode) return false;
    return p.succ < 0 || f.succ == p.succ;
  }

  void combine(const App& app, const Fact& f0, int i0, const Fact& f1, int i1, int app_idx) {
    // Premises are star-uniform: any *-marked premise shares the conclusion's
    // mode, so two *-premises must agree.
    Mode concl_mode;
    if (app.concl_mode) {
      concl_mode = *app.concl_mode;
    } else {
      std::optional<Mode> star;
      const Fact* fs[2] = {&f0, &f1};
      for (std::size_t i = 0; i < app.prems.size(); ++i)
        if (!app.prems[i].mode) {
          if (star && *star != fs[i]->mode) return;
          star = fs[i]->mode;
        }
      concl_mode = *star;  // L rules always have a *-premise
    }
    int concl_succ = app.concl_succ;
    if (concl_succ < 0) {
      std::optional<int> c;
      const Fact* fs[2] = {&f0, &f1};
      for (std::size_t i = 0; i < app.prems.size(); ++i)
        if (app.prems[i].succ < 0) {
          if (c && *c != fs[i]->succ) return;
          c = fs[i]->succ;
        }
      concl_succ = *c;
    }
    Fact out;
    out.g = (f0.g & ~app.prems[0].need_g) | app.add_g;
    out.d = (f0.d & ~app.prems[0].need_d) | app.add_d;
    if (app.prems.size() == 2) {
      out.g |= f1.g & ~app.prems[1].need_g;
      out.d |= f1.d & ~app.prems[1].need_d;
    }
    out.mode = concl_mode;
    out.succ = concl_succ;
    out.rule = app.rule;
    out.principal = app.principal;
    out.prem0 = i0;
    out.prem1 = i1;
    (void)app_idx;
    insert(out);
  }

  void saturate() {
    build_apps_and_seeds();
    while (!worklist.empty()) {
      int fi = worklist.front();
      worklist.pop_front();
      if (!facts[fi].active) continue;
      for (const App& app : apps) {
        for (std::size_t pos = 0; pos < app.prems.size(); ++pos) {
          Fact f = facts[fi];  // copy: facts may reallocate during insert
          if (!fits(app.prems[pos], f)) continue;
          if (app.prems.size() == 1) {
            combine(app, f, fi, f, -1, 0);
            continue;
          }
          std::size_t other = 1 - pos;
          const FPrem& op = app.prems[other];
          // Partner candidates narrowed by the partner slot's constraints.
          std::vector<int> candidates;
          if (op.succ >= 0) {
            if (op.mode) {
              candidates = buckets[bucket_key(*op.mode, op.succ)];
            } else {
              candidates = buckets[bucket_key(Mode::Plus, op.succ)];
              const auto& minus = buckets[bucket_key(Mode::Minus, op.succ)];
              candidates.insert(candidates.end(), minus.begin(), minus.end());
            }
          } else if (op.mode) {
            candidates = by_mode[*op.mode == Mode::Plus ? 0 : 1];
          } else {
            candidates = by_mode[0];
            candidates.insert(candidates.end(), by_mode[1].begin(), by_mode[1].end());
          }
          for (int gi : candidates) {
            Fact g = facts[gi];
            if (!g.active || !fits(op, g)) continue;
            if (pos == 0)
              combine(app, f, fi, g, gi, 0);
            else
              combine(app, g, gi, f, fi, 0);
          }
        }
      }
    }
  }

  Sequent sequent_of(const Fact& f) const {
    Sequent s;
    for (int i = 0; i < static_cast<int>(universe.size()); ++i) {
      if (f.g & (std::uint64_t(1) << i)) s.gamma.insert(universe[i]);
      if (f.d & (std::uint64_t(1) << i)) s.delta.insert(universe[i]);
    }
    s.mode = f.mode;
    s.succedent = universe[f.succ];
    return s;
  }

  // Rebuilds a kernel derivation for a fact. The conclusion set-normalizes to
  // the fact; multiplicities above one appear only where a premise fact
  // already carries the principal it is about to introduce.
  Derivation reconstruct(int fi) const {
    const Fact& f = facts[fi];
    const RuleSchema& s = schema(f.rule);
    RuleInstance inst;
    inst.rule = f.rule;
    inst.principal = universe[f.principal];
    inst.side = principal_side(f.rule);
    if (!s.conclusion_mode) inst.mode_star = f.mode;

    if (f.prem0 < 0) return Derivation{sequent_of(f), inst, {}};

    std::vector<Derivation> children;
    children.push_back(reconstruct(f.prem0));
    if (f.prem1 >= 0) children.push_back(reconstruct(f.prem1));

    // Smallest conclusion contexts that let every child weaken into its slot:
    // premise_i = transform_i(conclusion) must contain child_i's conclusion.
    Sequent target = sequent_of(f);
    FormulaMultiset need_g = target.gamma.deduped();
    FormulaMultiset need_d = target.delta.deduped();
    for (std::size_t i = 0; i < children.size(); ++i) {
      const PremiseSpec& ps = s.premises[i];
      FormulaMultiset added_g, added_d;
      for (ActiveRef r : ps.add_gamma)
        added_g.insert(r == ActiveRef::A ? inst.principal.left() : inst.principal.right());
      for (ActiveRef r : ps.add_delta)
        added_d.insert(r == ActiveRef::A ? inst.principal.left() : inst.principal.right());
      FormulaMultiset g_req = msub(children[i].conclusion.gamma, added_g);
      FormulaMultiset d_req = msub(children[i].conclusion.delta, added_d);
      if (inst.side && !ps.keeps_principal) {
        (*inst.side == Side::Gamma ? g_req : d_req).insert(inst.principal);
      }
      need_g = mmax(need_g, g_req);
      need_d = mmax(need_d, d_req);
    }
    target.gamma = need_g;
    target.delta = need_d;

    auto prems = premises_for(target, f.rule, inst.principal, sig);
    if (!prems || prems->size() != children.size())
      throw std::logic_error("saturation reconstruction lost a premise");
    for (std::size_t i = 0; i < children.size(); ++i)
      children[i] = pad_to(std::move(children[i]), (*prems)[i]);
    return Derivation{std::move(target), inst, std::move(children)};
  }

  int find_subsuming(const Sequent& goal) const {
    Sequent norm = goal.normalized();
    std::uint64_t g = 0, d = 0;
    for (const Formula& f : norm.gamma.items()) {
      int i = index_of(f);
      if (i < 0) throw std::invalid_argument("goal formula outside the saturated universe");
      g |= std::uint64_t(1) << i;
    }
    for (const Formula& f : norm.delta.items()) {
      int i = index_of(f);
      if (i < 0) throw std::invalid_argument("goal formula outside the saturated universe");
      d |= std::uint64_t(1) << i;
    }
    int is = index_of(norm.succedent);
    if (is < 0) throw std::invalid_argument("goal succedent outside the saturated universe");

    int best = -1;
    int best_weight = 0;
    for (int i : buckets[bucket_key(norm.mode, is)]) {
      const Fact& f = facts[i];
      if (!f.active || !subsumes(f, g, d, norm.mode, is)) continue;
      int w = std::popcount(f.g) + std::popcount(f.d);
      if (best < 0 || w < best_weight || (w == best_weight && i < best)) {
        best = i;
        best_weight = w;
      }
    }
    return best;
  }
};

ForwardSpace::ForwardSpace(const std::vector<Formula>& seeds, Signature sig, Limits limits)
    : impl_(std::make_unique<Impl>()) {
  impl_->sig = std::move(sig);
  impl_->limits = limits;
  for (const Formula& f : seeds) impl_->sig.validate(f);
  impl_->universe = subformula_closure(seeds);
  impl_->stats.universe = impl_->universe.size();
  if (impl_->universe.size() > std::min<std::size_t>(limits.max_universe, 63))
    throw ResourceLimitError("subformula universe exceeds the saturation limit (" +
                             std::to_string(impl_->universe.size()) + " formulas)");
  impl_->buckets.assign(2 * impl_->universe.size(), {});
  impl_->saturate();
}

ForwardSpace::~ForwardSpace() = default;
ForwardSpace::ForwardSpace(ForwardSpace&&) noexcept = default;
ForwardSpace& ForwardSpace::operator=(ForwardSpace&&) noexcept = default;

bool ForwardSpace::holds(const Sequent& goal) const { return impl_->find_subsuming(goal) >= 0; }

std::optional<Derivation> ForwardSpace::prove(const Sequent& goal) const {
  int fi = impl_->find_subsuming(goal);
  if (fi < 0) return std::nullopt;
  Derivation d = impl_->reconstruct(fi);
  // Weaken the reconstructed fact up to the goal's occurrences.
  for (Side side : {Side::Gamma, Side::Delta}) {
    const auto& want = side == Side::Gamma ? goal.gamma : goal.delta;
    const auto& have = side == Side::Gamma ? d.conclusion.gamma : d.conclusion.delta;
    FormulaMultiset missing = msub(want, have);
    for (const Formula& f : missing.items()) d = insert_context_everywhere(d, f, side);
  }
  return d;
}

const SearchStats& ForwardSpace::stats() const { return impl_->stats; }

Decision saturate_forward(const Sequent& goal, const Signature& sig, const Limits& limits) {
  sig.validate(goal);
  ForwardSpace space(goal.all_formulas(), sig, limits);
  Decision dec;
  dec.stats = space.stats();
  auto proof = space.prove(goal);
  dec.derivable = proof.has_value();
  if (proof) dec.proof = std::move(*proof);
  return dec;
}

Decision decide(const Sequent& goal, const Signature& sig, const DecideOptions& options) {
  Decision dec = decide_backward(goal, sig, options.limits);
  if (options.oracle) {
    Decision fwd = saturate_forward(goal, sig, options.limits);
    if (fwd.derivable != dec.derivable)
      throw OracleDisagreementError("decision procedures disagree on '" +
                                    print_sequent(goal) + "': backward says " +
                                    (dec.derivable ? "derivable" : "underivable") +
                                    ", saturation says the opposite");
    dec.stats.universe = fwd.stats.universe;
    dec.stats.generated = fwd.stats.generated;
    dec.stats.subsumptions = fwd.stats.subsumptions;
  }
  return dec;
}

}  // namespace bilat
