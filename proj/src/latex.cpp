#include "bilat/latex.hpp"

#include <stdexcept>

#include "bilat/printer.hpp"

namespace bilat {

std::string latex_rule_label(RuleId id) {
  switch (id) {
    case RuleId::RfPlus: return "\\mathrm{Rf}^{+}";
    case RuleId::RfMinus: return "\\mathrm{Rf}^{-}";
    case RuleId::BotRMinus: return "\\bot\\mathrm{R}^{-}";
    case RuleId::BotLa: return "\\bot\\mathrm{L}^{a}";
    case RuleId::TopRPlus: return "\\top\\mathrm{R}^{+}";
    case RuleId::TopLc: return "\\top\\mathrm{L}^{c}";
    case RuleId::AndRPlus: return "\\land\\mathrm{R}^{+}";
    case RuleId::AndLa: return "\\land\\mathrm{L}^{a}";
    case RuleId::AndRMinus1: return "\\land\\mathrm{R}^{-}_{1}";
    case RuleId::AndRMinus2: return "\\land\\mathrm{R}^{-}_{2}";
    case RuleId::AndLc: return "\\land\\mathrm{L}^{c}";
    case RuleId::OrRPlus1: return "\\lor\\mathrm{R}^{+}_{1}";
    case RuleId::OrRPlus2: return "\\lor\\mathrm{R}^{+}_{2}";
    case RuleId::OrLa: return "\\lor\\mathrm{L}^{a}";
    case RuleId::OrRMinus: return "\\lor\\mathrm{R}^{-}";
    case RuleId::OrLc: return "\\lor\\mathrm{L}^{c}";
    case RuleId::ImpRPlus: return "\\to\\mathrm{R}^{+}";
    case RuleId::ImpLa: return "\\to\\mathrm{L}^{a}";
    case RuleId::ImpRMinus: return "\\to\\mathrm{R}^{-}";
    case RuleId::ImpLc: return "\\to\\mathrm{L}^{c}";
    case RuleId::CoimpRPlus: return "\\prec\\mathrm{R}^{+}";
    case RuleId::CoimpLa: return "\\prec\\mathrm{L}^{a}";
    case RuleId::CoimpRMinus: return "\\prec\\mathrm{R}^{-}";
    case RuleId::CoimpLc: return "\\prec\\mathrm{L}^{c}";
  }
  throw std::logic_error("latex_rule_label: bad rule");
}

namespace {

void latex_rec(std::string& out, const Derivation& d) {
  for (const auto& p : d.premises) latex_rec(out, p);
  PrintOptions latex{.style = PrintStyle::Latex};
  std::string concl = "$" + print_sequent(d.conclusion, latex) + "$";
  if (d.premises.empty()) out += "\\AxiomC{}\n";
  out += "\\RightLabel{\\scriptsize $" + latex_rule_label(d.rule.rule) + "$}\n";
  switch (d.premises.size()) {
    case 0: out += "\\UnaryInfC{" + concl + "}\n"; break;
    case 1: out += "\\UnaryInfC{" + concl + "}\n"; break;
    case 2: out += "\\BinaryInfC{" + concl + "}\n"; break;
    default: throw std::logic_error("derivation_to_latex: too many premises");
  }
}

void tree_rec(std::string& out, const Derivation& d, std::size_t indent) {
  out.append(2 * indent, ' ');
  out += "[";
  out += rule_name(d.rule.rule);
  out += "] ";
  out += print_sequent(d.conclusion);
  out += '\n';
  for (const auto& p : d.premises) tree_rec(out, p, indent + 1);
}

}  // namespace

std::string derivation_to_latex(const Derivation& d) {
  std::string out = "\\begin{prooftree}\n";
  latex_rec(out, d);
  out += "\\end{prooftree}\n";
  return out;
}

std::string derivation_to_tree(const Derivation& d) {
  std::string out;
  tree_rec(out, d, 0);
  return out;
}

}  // namespace bilat
