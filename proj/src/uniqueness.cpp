#include "bilat/uniqueness.hpp"

#include <stdexcept>

#include "bilat/parser.hpp"
#include "bilat/printer.hpp"

namespace bilat {

namespace {

Formula tagged(Kind conn, unsigned copy, const Formula& a, const Formula& b) {
  if (is_nullary(conn)) return Formula::make_const(conn, copy);
  return Formula::make(conn, a, b, copy);
}

SequentVerdict probe(std::string label, Sequent s, const Signature& sig, const Limits& limits) {
  SequentVerdict v;
  v.label = std::move(label);
  v.sequent = s;
  Decision dec = decide(s, sig, {.oracle = true, .limits = limits});
  v.derivable = dec.derivable;
  v.stats = dec.stats;
  if (dec.derivable) v.proof = std::move(dec.proof);
  return v;
}

// The interderivability pair for one relation: mode Plus puts the formulas in
// the assumptions, mode Minus in the counterassumptions.
std::pair<Sequent, Sequent> relation_pair(const Formula& f, const Formula& g, Mode mode) {
  Sequent fg, gf;
  fg.mode = gf.mode = mode;
  if (mode == Mode::Plus) {
    fg.gamma.insert(f);
    gf.gamma.insert(g);
  } else {
    fg.delta.insert(f);
    gf.delta.insert(g);
  }
  fg.succedent = g;
  gf.succedent = f;
  return {fg, gf};
}

}  // namespace

std::vector<const SequentVerdict*> UniquenessReport::all() const {
  std::vector<const SequentVerdict*> out;
  for (const auto& v : definitional) out.push_back(&v);
  for (const auto& v : same_relation) out.push_back(&v);
  for (const auto& v : cross_relation) out.push_back(&v);
  return out;
}

UniquenessReport uniqueness_report(Kind connective, bool partial, const Formula& a,
                                   const Formula& b, const Limits& limits) {
  if (connective == Kind::Atom)
    throw std::invalid_argument("uniqueness_report: atoms are not connectives");

  UniquenessReport rep;
  rep.connective = connective;
  rep.partial = partial;
  rep.component_a = a;
  rep.component_b = b;

  Signature sig;
  if (partial) {
    rep.proof_only_copy = sig.add_copy(connective, Subset::ProofOnly);
    rep.dual_only_copy = sig.add_copy(connective, Subset::DualOnly);
  }
  rep.full_copy = sig.add_copy(connective, Subset::Full);
  rep.signature = sig;

  Formula base = tagged(connective, 0, a, b);
  Formula full = tagged(connective, rep.full_copy, a, b);

  auto [p_fg, p_gf] = relation_pair(base, full, Mode::Plus);
  auto [m_fg, m_gf] = relation_pair(base, full, Mode::Minus);
  rep.definitional.push_back(probe("(i)  base |-+ copy", p_fg, sig, limits));
  rep.definitional.push_back(probe("(i)  copy |-+ base", p_gf, sig, limits));
  rep.definitional.push_back(probe("(ii) base |-- copy", m_fg, sig, limits));
  rep.definitional.push_back(probe("(ii) copy |-- base", m_gf, sig, limits));
  rep.unique = true;
  for (const auto& v : rep.definitional) rep.unique = rep.unique && v.derivable;

  if (partial) {
    Formula po = tagged(connective, *rep.proof_only_copy, a, b);
    Formula du = tagged(connective, *rep.dual_only_copy, a, b);
    auto [sp_fg, sp_gf] = relation_pair(base, po, Mode::Plus);
    auto [sm_fg, sm_gf] = relation_pair(base, du, Mode::Minus);
    rep.same_relation.push_back(probe("base |-+ proof-only copy", sp_fg, sig, limits));
    rep.same_relation.push_back(probe("proof-only copy |-+ base", sp_gf, sig, limits));
    rep.same_relation.push_back(probe("base |-- dual-only copy", sm_fg, sig, limits));
    rep.same_relation.push_back(probe("dual-only copy |-- base", sm_gf, sig, limits));

    auto [cp_fg, cp_gf] = relation_pair(base, du, Mode::Plus);
    auto [cm_fg, cm_gf] = relation_pair(base, po, Mode::Minus);
    rep.cross_relation.push_back(probe("base |-+ dual-only copy", cp_fg, sig, limits));
    rep.cross_relation.push_back(probe("dual-only copy |-+ base", cp_gf, sig, limits));
    rep.cross_relation.push_back(probe("base |-- proof-only copy", cm_fg, sig, limits));
    rep.cross_relation.push_back(probe("proof-only copy |-- base", cm_gf, sig, limits));
  }
  return rep;
}

namespace {

CongruentialityReport::Block probe_block(const Formula& f, const Formula& g,
                                         const Signature& sig, const Limits& limits) {
  CongruentialityReport::Block blk;
  blk.f = f;
  blk.g = g;
  auto [p_fg, p_gf] = relation_pair(f, g, Mode::Plus);
  auto [m_fg, m_gf] = relation_pair(f, g, Mode::Minus);
  blk.plus_fg = probe("left |-+ right", p_fg, sig, limits);
  blk.plus_gf = probe("right |-+ left", p_gf, sig, limits);
  blk.minus_fg = probe("left |-- right", m_fg, sig, limits);
  blk.minus_gf = probe("right |-- left", m_gf, sig, limits);
  blk.plus_interderivable = blk.plus_fg.derivable && blk.plus_gf.derivable;
  blk.minus_interderivable = blk.minus_fg.derivable && blk.minus_gf.derivable;
  return blk;
}

}  // namespace

CongruentialityReport congruentiality_witness(const Limits& limits) {
  Signature sig;
  Formula p = Formula::atom("p"), q = Formula::atom("q");
  CongruentialityReport rep;
  rep.negation = probe_block(neg(Formula::imp(p, q)), Formula::conj(p, neg(q)), sig, limits);
  rep.conegation = probe_block(coneg(Formula::imp(p, q)), Formula::conj(p, coneg(q)), sig, limits);
  return rep;
}

ContextTemplate::ContextTemplate(Formula skeleton) : skeleton_(std::move(skeleton)) {
  std::size_t holes = 0;
  std::vector<Formula> work{skeleton_};
  while (!work.empty()) {
    Formula f = work.back();
    work.pop_back();
    if (f == hole()) ++holes;
    if (is_binary(f.kind())) {
      work.push_back(f.left());
      work.push_back(f.right());
    }
  }
  if (holes != 1)
    throw std::invalid_argument("context template must contain exactly one hole");
}

Formula ContextTemplate::hole() { return Formula::atom("__hole"); }

namespace {
Formula subst_hole(const Formula& t, const Formula& f) {
  if (t == ContextTemplate::hole()) return f;
  if (!is_binary(t.kind())) return t;
  return Formula::make(t.kind(), subst_hole(t.left(), f), subst_hole(t.right(), f), t.copy());
}
}  // namespace

Formula ContextTemplate::apply(const Formula& f) const { return subst_hole(skeleton_, f); }

SynonymyReport synonymy_spotcheck(const Formula& a, const Formula& b,
                                  const std::vector<ContextTemplate>& contexts,
                                  const Signature& sig, const Limits& limits) {
  SynonymyReport rep;
  rep.a = a;
  rep.b = b;

  auto probe_four = [&](const Formula& f, const Formula& g, std::vector<SequentVerdict>& out) {
    auto [p_fg, p_gf] = relation_pair(f, g, Mode::Plus);
    auto [m_fg, m_gf] = relation_pair(f, g, Mode::Minus);
    out.push_back(probe("A |-+ B", p_fg, sig, limits));
    out.push_back(probe("B |-+ A", p_gf, sig, limits));
    out.push_back(probe("A |-- B", m_fg, sig, limits));
    out.push_back(probe("B |-- A", m_gf, sig, limits));
    bool all = true;
    for (const auto& v : out) all = all && v.derivable;
    return all;
  };

  rep.bilaterally_equivalent = probe_four(a, b, rep.base);
  rep.synonymy_confirmed = rep.bilaterally_equivalent;
  if (!rep.bilaterally_equivalent) return rep;

  for (const auto& tmpl : contexts) {
    SynonymyReport::TemplateResult tr;
    tr.skeleton = tmpl.skeleton();
    tr.bilaterally_equivalent = probe_four(tmpl.apply(a), tmpl.apply(b), tr.verdicts);
    rep.synonymy_confirmed = rep.synonymy_confirmed && tr.bilaterally_equivalent;
    rep.templates.push_back(std::move(tr));
  }
  return rep;
}

}  // namespace bilat
