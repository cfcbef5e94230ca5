#include "bilat/nd.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "bilat/printer.hpp"

namespace bilat::nd {

namespace {

enum class Ref : std::uint8_t { Principal, A, B, C };  // C: free formula
enum class Line : std::uint8_t { P, D, Free };          // Free: uniform with conclusion

struct Slot {
  std::size_t premise;  // which premise subtree the discharge targets
  bool counter;
  Ref active;  // A or B
};

struct PremShape {
  Line line;
  Ref formula;
};

struct NdSchema {
  NdRule rule;
  const char* name;
  Kind head;            // principal's connective
  bool principal_in_conclusion;  // else: principal is premise 0's formula
  Line concl_line;
  Ref concl_formula;
  std::vector<PremShape> premises;
  std::vector<Slot> slots;
};

std::vector<NdSchema> build_nd_table() {
  using enum Ref;
  std::vector<NdSchema> t;
  auto add = [&](NdRule r, const char* n, Kind k, bool pic, Line cl, Ref cf,
                 std::vector<PremShape> ps, std::vector<Slot> sl = {}) {
    t.push_back({r, n, k, pic, cl, cf, std::move(ps), std::move(sl)});
  };

  // from a proof of bot, any formula as a proof or dual proof
  add(NdRule::BotE, "BotE", Kind::Bot, false, Line::Free, C, {{Line::P, Principal}});
  add(NdRule::TopEd, "TopEd", Kind::Top, false, Line::Free, C, {{Line::D, Principal}});

  add(NdRule::AndI, "AndI", Kind::And, true, Line::P, Principal,
      {{Line::P, A}, {Line::P, B}});
  add(NdRule::AndE1, "AndE1", Kind::And, false, Line::P, A, {{Line::P, Principal}});
  add(NdRule::AndE2, "AndE2", Kind::And, false, Line::P, B, {{Line::P, Principal}});
  add(NdRule::AndId1, "AndId1", Kind::And, true, Line::D, Principal, {{Line::D, A}});
  add(NdRule::AndId2, "AndId2", Kind::And, true, Line::D, Principal, {{Line::D, B}});
  // dual proof of A & B, then C from [[A]] and from [[B]]
  add(NdRule::AndEd, "AndEd", Kind::And, false, Line::Free, C,
      {{Line::D, Principal}, {Line::Free, C}, {Line::Free, C}},
      {{1, true, A}, {2, true, B}});

  add(NdRule::OrI1, "OrI1", Kind::Or, true, Line::P, Principal, {{Line::P, A}});
  add(NdRule::OrI2, "OrI2", Kind::Or, true, Line::P, Principal, {{Line::P, B}});
  add(NdRule::OrE, "OrE", Kind::Or, false, Line::Free, C,
      {{Line::P, Principal}, {Line::Free, C}, {Line::Free, C}},
      {{1, false, A}, {2, false, B}});
  add(NdRule::OrId, "OrId", Kind::Or, true, Line::D, Principal,
      {{Line::D, A}, {Line::D, B}});
  add(NdRule::OrEd1, "OrEd1", Kind::Or, false, Line::D, A, {{Line::D, Principal}});
  add(NdRule::OrEd2, "OrEd2", Kind::Or, false, Line::D, B, {{Line::D, Principal}});

  // proof of B from [A] yields a proof of A -> B
  add(NdRule::ImpI, "ImpI", Kind::Imp, true, Line::P, Principal, {{Line::P, B}},
      {{0, false, A}});
  add(NdRule::ImpE, "ImpE", Kind::Imp, false, Line::P, B,
      {{Line::P, Principal}, {Line::P, A}});
  // a proof of A and a dual proof of B yield a dual proof of A -> B
  add(NdRule::ImpId, "ImpId", Kind::Imp, true, Line::D, Principal,
      {{Line::P, A}, {Line::D, B}});
  // a dual proof of A -> B contains a proof of A and a dual proof of B
  add(NdRule::ImpEd1, "ImpEd1", Kind::Imp, false, Line::P, A, {{Line::D, Principal}});
  add(NdRule::ImpEd2, "ImpEd2", Kind::Imp, false, Line::D, B, {{Line::D, Principal}});

  // a proof of A and a dual proof of B yield a proof of A -< B
  add(NdRule::CoimpI, "CoimpI", Kind::Coimp, true, Line::P, Principal,
      {{Line::P, A}, {Line::D, B}});
  add(NdRule::CoimpE1, "CoimpE1", Kind::Coimp, false, Line::P, A, {{Line::P, Principal}});
  add(NdRule::CoimpE2, "CoimpE2", Kind::Coimp, false, Line::D, B, {{Line::P, Principal}});
  // dual proof of A from [[B]] yields a dual proof of A -< B
  add(NdRule::CoimpId, "CoimpId", Kind::Coimp, true, Line::D, Principal, {{Line::D, A}},
      {{0, true, B}});
  // dual proofs of A -< B and of B yield a dual proof of A
  add(NdRule::CoimpEd, "CoimpEd", Kind::Coimp, false, Line::D, A,
      {{Line::D, Principal}, {Line::D, B}});
  return t;
}

const std::vector<NdSchema>& nd_table() {
  static const std::vector<NdSchema> t = build_nd_table();
  return t;
}

const NdSchema& nd_schema(NdRule r) {
  for (const auto& s : nd_table())
    if (s.rule == r) return s;
  throw std::logic_error("nd_schema: leaf rules have no schema");
}

struct NdError {
  std::vector<std::size_t> path;
  std::string reason;
};

struct OpenClass {
  bool counter;
  Formula formula;
};
using OpenMap = std::map<std::string, OpenClass>;

LineKind as_line(Line l, LineKind uniform) {
  switch (l) {
    case Line::P: return LineKind::Proof;
    case Line::D: return LineKind::Dual;
    case Line::Free: return uniform;
  }
  throw std::logic_error("as_line");
}

const char* line_name(LineKind l) { return l == LineKind::Proof ? "proof" : "dual"; }

NdCheckResult check_tree(const NdNode& root);

OpenMap check_rec(const NdNode& n, std::vector<std::size_t>& path,
                  std::vector<std::string>& lints) {
  auto fail = [&](std::string reason) -> NdError { return {path, std::move(reason)}; };

  if (n.rule == NdRule::Assumption || n.rule == NdRule::Counterassumption) {
    bool counter = n.rule == NdRule::Counterassumption;
    if (!n.premises.empty()) throw fail("leaves take no premises");
    if (n.label.empty()) throw fail("leaf is missing its label");
    LineKind want = counter ? LineKind::Dual : LineKind::Proof;
    if (n.line != want)
      throw fail(std::string(counter ? "a counterassumption" : "an assumption") +
                 " is a " + line_name(want) + " line");
    return {{n.label, {counter, n.formula}}};
  }

  const NdSchema& s = nd_schema(n.rule);
  if (n.premises.size() != s.premises.size())
    throw fail(std::string(s.name) + ": wrong premise count");

  const Formula& principal = s.principal_in_conclusion ? n.formula : n.premises[0].formula;
  if (principal.kind() != s.head)
    throw fail(std::string(s.name) + ": principal '" + print_formula(principal) +
               "' has the wrong connective");

  auto resolve = [&](Ref r) -> Formula {
    switch (r) {
      case Ref::Principal: return principal;
      case Ref::A: return principal.left();
      case Ref::B: return principal.right();
      case Ref::C: return n.formula;
    }
    throw std::logic_error("resolve ref");
  };

  if (as_line(s.concl_line, n.line) != n.line)
    throw fail(std::string(s.name) + " concludes a " +
               line_name(as_line(s.concl_line, n.line)) + " line");
  if (n.formula != resolve(s.concl_formula))
    throw fail(std::string(s.name) + ": conclusion should be '" +
               print_formula(resolve(s.concl_formula)) + "'");

  std::vector<OpenMap> prem_open;
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    path.push_back(i);
    prem_open.push_back(check_rec(n.premises[i], path, lints));
    path.pop_back();
  }
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    const NdNode& child = n.premises[i];
    LineKind want = as_line(s.premises[i].line, n.line);
    if (child.line != want)
      throw fail(std::string(s.name) + ": premise " + std::to_string(i + 1) + " must be a " +
                 line_name(want) + " line");
    Formula want_f = resolve(s.premises[i].formula);
    if (child.formula != want_f)
      throw fail(std::string(s.name) + ": premise " + std::to_string(i + 1) + " should show '" +
                 print_formula(want_f) + "'");
  }

  if (n.discharges.size() > s.slots.size())
    throw fail(std::string(s.name) + " has only " + std::to_string(s.slots.size()) +
               " discharge slot(s)");
  for (std::size_t i = 0; i < n.discharges.size(); ++i) {
    if (!n.discharges[i]) continue;
    const Discharge& dis = *n.discharges[i];
    const Slot& slot = s.slots[i];
    if (dis.counter != slot.counter)
      throw fail(std::string(s.name) + ": slot " + std::to_string(i + 1) + " discharges " +
                 (slot.counter ? "counterassumptions" : "assumptions"));
    OpenMap& target = prem_open[slot.premise];
    auto it = target.find(dis.label);
    if (it == target.end()) {
      lints.push_back(std::string("vacuous discharge of label '") + dis.label + "' at " +
                      s.name);
      continue;
    }
    Formula want_f = resolve(slot.active);
    if (it->second.counter != slot.counter || it->second.formula != want_f)
      throw fail(std::string(s.name) + ": label '" + dis.label + "' binds '" +
                 print_formula(it->second.formula) + "', not the dischargeable '" +
                 print_formula(want_f) + "'");
    target.erase(it);
  }

  OpenMap merged;
  for (const auto& m : prem_open)
    for (const auto& [label, cls] : m) {
      auto [it, fresh] = merged.emplace(label, cls);
      if (!fresh && (it->second.counter != cls.counter || it->second.formula != cls.formula))
        throw fail("label '" + label + "' is reused for a different assumption");
    }
  return merged;
}

NdCheckResult check_tree(const NdNode& root) {
  NdCheckResult out;
  std::vector<std::size_t> path;
  try {
    OpenMap open = check_rec(root, path, out.lints);
    out.ok = true;
    for (const auto& [label, cls] : open)
      (cls.counter ? out.open.delta : out.open.gamma).insert(cls.formula);
    out.conclusion = root.formula;
    out.line = root.line;
  } catch (const NdError& e) {
    out.ok = false;
    out.path = e.path;
    out.reason = e.reason;
  }
  return out;
}

}  // namespace

const char* nd_rule_name(NdRule r) {
  if (r == NdRule::Assumption) return "Assumption";
  if (r == NdRule::Counterassumption) return "Counterassumption";
  return nd_schema(r).name;
}

NdRule nd_rule_from_name(const std::string& name) {
  if (name == "Assumption") return NdRule::Assumption;
  if (name == "Counterassumption") return NdRule::Counterassumption;
  for (const auto& s : nd_table())
    if (name == s.name) return s.rule;
  throw std::invalid_argument("unknown natural-deduction rule '" + name + "'");
}

NdNode assume(Formula f, std::string label) {
  NdNode n;
  n.formula = std::move(f);
  n.line = LineKind::Proof;
  n.rule = NdRule::Assumption;
  n.label = std::move(label);
  return n;
}

NdNode counter_assume(Formula f, std::string label) {
  NdNode n;
  n.formula = std::move(f);
  n.line = LineKind::Dual;
  n.rule = NdRule::Counterassumption;
  n.label = std::move(label);
  return n;
}

void validate_nd_rules() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    Signature sig;
    Formula a = Formula::atom("a"), b = Formula::atom("b"), c = Formula::atom("c");
    for (const NdSchema& s : nd_table()) {
      Formula principal = is_nullary(s.head) ? Formula::make_const(s.head)
                                             : Formula::make(s.head, a, b);
      auto resolve = [&](Ref r) {
        switch (r) {
          case Ref::Principal: return principal;
          case Ref::A: return principal.left();
          case Ref::B: return principal.right();
          case Ref::C: return c;
        }
        throw std::logic_error("resolve ref");
      };
      std::vector<LineKind> variants =
          s.concl_line == Line::Free ? std::vector<LineKind>{LineKind::Proof, LineKind::Dual}
                                     : std::vector<LineKind>{as_line(s.concl_line, LineKind::Proof)};
      for (LineKind uniform : variants) {
        NdNode node;
        node.rule = s.rule;
        node.line = uniform;
        node.formula = resolve(s.concl_formula);
        for (std::size_t i = 0; i < s.premises.size(); ++i) {
          Formula f = resolve(s.premises[i].formula);
          LineKind l = as_line(s.premises[i].line, uniform);
          std::string label = "u" + std::to_string(i);
          node.premises.push_back(l == LineKind::Proof ? assume(f, label)
                                                       : counter_assume(f, label));
        }
        NdCheckResult r = check_tree(node);
        if (!r.ok)
          throw std::logic_error(std::string("rule table validation: ") + s.name +
                                 " rejects its own canonical instance: " + r.reason);
        Sequent goal{r.open.gamma, r.open.delta,
                     r.line == LineKind::Proof ? Mode::Plus : Mode::Minus, r.conclusion};
        if (!decide_backward(goal, sig).derivable)
          throw std::logic_error(std::string("rule table validation: ") + s.name +
                                 " is not locally sound: '" + print_sequent(goal) +
                                 "' is underivable");
      }
    }
  });
}

NdCheckResult nd_check(const NdNode& root) {
  validate_nd_rules();
  return check_tree(root);
}

NdCheckResult nd_check(const NdNode& root, const Signature& sig) {
  NdCheckResult out = nd_check(root);
  if (!out.ok) return out;
  // Subset restrictions: a proof-only copy answers the single-line rules, a
  // dual-only copy the double-line rules.
  std::vector<std::size_t> path;
  std::string reason;
  auto walk = [&](auto&& self, const NdNode& n) -> bool {
    if (n.rule != NdRule::Assumption && n.rule != NdRule::Counterassumption) {
      const NdSchema& s = nd_schema(n.rule);
      const Formula& principal = s.principal_in_conclusion ? n.formula : n.premises[0].formula;
      if (!sig.known(principal.kind(), principal.copy())) {
        reason = "unknown tag in '" + print_formula(principal) + "'";
        return false;
      }
      Subset sub = sig.subset(principal.kind(), principal.copy());
      bool dual_group = s.concl_line == Line::D ||
                        (!s.premises.empty() && s.premises[0].line == Line::D);
      if (sub == Subset::ProofOnly && dual_group) {
        reason = std::string(s.name) + " is not available for the proof-only copy in '" +
                 print_formula(principal) + "'";
        return false;
      }
      if (sub == Subset::DualOnly && !dual_group) {
        reason = std::string(s.name) + " is not available for the dual-only copy in '" +
                 print_formula(principal) + "'";
        return false;
      }
    }
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      path.push_back(i);
      if (!self(self, n.premises[i])) return false;
      path.pop_back();
    }
    return true;
  };
  if (!walk(walk, root)) {
    out.ok = false;
    out.path = path;
    out.reason = reason;
    out.open = {};
  }
  return out;
}

}  // namespace bilat::nd
