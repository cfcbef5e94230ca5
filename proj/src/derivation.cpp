#include "bilat/derivation.hpp"

#include "bilat/printer.hpp"

namespace bilat {

std::size_t Derivation::node_count() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.node_count();
  return n;
}

namespace {

CheckResult check_node(const Derivation& d, const Signature& sig,
                       std::vector<std::size_t>& path) {
  const RuleSchema& s = schema(d.rule.rule);

  try {
    sig.validate(d.conclusion);
  } catch (const UnknownTagError& e) {
    return CheckResult::fail(path, e.what());
  }

  if (s.conclusion_mode && *s.conclusion_mode != d.conclusion.mode)
    return CheckResult::fail(path, std::string(s.name) + " concludes with the wrong mode");
  if (!s.conclusion_mode) {
    if (!d.rule.mode_star)
      return CheckResult::fail(path, std::string(s.name) + " is missing its * instantiation");
    if (*d.rule.mode_star != d.conclusion.mode)
      return CheckResult::fail(path, std::string(s.name) + ": * occurrences not uniform");
  }
  if (d.rule.side != principal_side(d.rule.rule))
    return CheckResult::fail(path, std::string(s.name) + ": principal on the wrong side");

  auto expected = premises_for(d.conclusion, d.rule.rule, d.rule.principal, sig);
  if (!expected)
    return CheckResult::fail(path, std::string(s.name) + ": bad principal for conclusion '" +
                                       print_sequent(d.conclusion) + "'");
  if (expected->size() != d.premises.size())
    return CheckResult::fail(path, std::string(s.name) + ": wrong premise count");
  for (std::size_t i = 0; i < d.premises.size(); ++i)
    if (d.premises[i].conclusion != (*expected)[i])
      return CheckResult::fail(
          path, std::string(s.name) + ": premise " + std::to_string(i + 1) +
                    " does not match, expected '" + print_sequent((*expected)[i]) +
                    "' got '" + print_sequent(d.premises[i].conclusion) + "'");

  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(i);
    CheckResult r = check_node(d.premises[i], sig, path);
    if (!r.ok) return r;
    path.pop_back();
  }
  return CheckResult::pass();
}

}  // namespace

CheckResult check(const Derivation& d, const Signature& sig) {
  std::vector<std::size_t> path;
  return check_node(d, sig, path);
}

Derivation insert_context_everywhere(const Derivation& d, const Formula& f, Side side) {
  Derivation out;
  out.conclusion = d.conclusion;
  auto& ctx = side == Side::Gamma ? out.conclusion.gamma : out.conclusion.delta;
  ctx.insert(f);
  out.rule = d.rule;
  out.premises.reserve(d.premises.size());
  for (const auto& p : d.premises) out.premises.push_back(insert_context_everywhere(p, f, side));
  return out;
}

}  // namespace bilat
