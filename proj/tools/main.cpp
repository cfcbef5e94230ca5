#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bilat/engine.hpp"
#include "bilat/json_io.hpp"
#include "bilat/latex.hpp"
#include "bilat/nd.hpp"
#include "bilat/parser.hpp"
#include "bilat/printer.hpp"
#include "bilat/structural.hpp"
#include "bilat/uniqueness.hpp"
#include "selftest.hpp"

namespace {

using namespace bilat;

constexpr int kExitDerivable = 0;
constexpr int kExitUnderivable = 1;
constexpr int kExitError = 2;
constexpr int kExitUsage = 64;

Kind connective_from_token(const std::string& tok) {
  if (tok == "&" || tok == "and") return Kind::And;
  if (tok == "|" || tok == "or") return Kind::Or;
  if (tok == "->" || tok == "imp") return Kind::Imp;
  if (tok == "-<" || tok == "coimp") return Kind::Coimp;
  if (tok == "top") return Kind::Top;
  if (tok == "bot") return Kind::Bot;
  throw std::invalid_argument("unknown connective '" + tok + "'");
}

Signature signature_from_copies(const std::vector<std::string>& copies) {
  Signature sig;
  for (const std::string& spec : copies) {
    auto colon = spec.rfind(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("--copy expects <connective>:<full|proof-only|dual-only>");
    sig.add_copy(connective_from_token(spec.substr(0, colon)),
                 subset_from_name(spec.substr(colon + 1)));
  }
  return sig;
}

Limits limits_from(const std::optional<std::size_t>& max_sequents) {
  Limits lim;
  std::size_t n = 0;
  if (max_sequents) {
    n = *max_sequents;
  } else if (const char* env = std::getenv("BILAT_MAX_SEQUENTS")) {
    n = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
  }
  if (n > 0) {
    lim.max_visited = n;
    lim.max_generated = n;
  }
  return lim;
}

PrintOptions display_style(bool ascii) {
  return PrintOptions{ascii ? PrintStyle::Ascii : PrintStyle::Unicode, false};
}

void print_proof(const Derivation& d, const std::string& format, bool ascii) {
  if (format == "json") {
    std::cout << derivation_to_string(d) << "\n";
    return;
  }
  if (format == "latex") {
    std::cout << derivation_to_latex(d);
    return;
  }
  std::function<void(const Derivation&, std::size_t)> rec = [&](const Derivation& n,
                                                                std::size_t depth) {
    std::cout << std::string(2 * depth, ' ') << "[" << rule_name(n.rule.rule) << "] "
              << print_sequent(n.conclusion, display_style(ascii)) << "\n";
    for (const auto& p : n.premises) rec(p, depth + 1);
  };
  rec(d, 0);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string verdict_word(bool derivable) { return derivable ? "DERIVABLE" : "UNDERIVABLE"; }

int cmd_decide(const std::string& text, bool oracle, const std::string& proof_format,
               const std::vector<std::string>& copies,
               const std::optional<std::size_t>& max_sequents, bool ascii) {
  Signature sig = signature_from_copies(copies);
  Sequent goal = parse_sequent(text);
  Decision dec = decide(goal, sig, {.oracle = oracle, .limits = limits_from(max_sequents)});
  std::cout << verdict_word(dec.derivable) << "\n";
  if (dec.derivable && proof_format != "none")
    print_proof(*dec.proof, proof_format.empty() ? "tree" : proof_format, ascii);
  if (!dec.derivable) {
    std::cout << "backward search visited " << dec.stats.visited << " sequents";
    if (oracle)
      std::cout << "; saturation universe " << dec.stats.universe << ", generated "
                << dec.stats.generated << ", subsumptions " << dec.stats.subsumptions;
    std::cout << "\n";
  }
  return dec.derivable ? kExitDerivable : kExitUnderivable;
}

int cmd_check(const std::string& path, const std::vector<std::string>& copies, bool ascii) {
  Signature sig = signature_from_copies(copies);
  Derivation d = derivation_from_string(read_file(path));
  CheckResult res = check(d, sig);
  if (res.ok) {
    std::cout << "OK " << print_sequent(d.conclusion, display_style(ascii)) << "\n";
    return 0;
  }
  std::cout << "ERROR at node /";
  for (std::size_t i : res.path) std::cout << i << "/";
  std::cout << ": " << res.reason << "\n";
  return 1;
}

int cmd_nd_check(const std::string& path, const std::vector<std::string>& copies, bool ascii) {
  Signature sig = signature_from_copies(copies);
  nd::NdNode root = nd_from_string(read_file(path));
  nd::NdCheckResult res = nd_check(root, sig);
  for (const auto& lint : res.lints) std::cout << "warning: " << lint << "\n";
  if (!res.ok) {
    std::cout << "ERROR at node /";
    for (std::size_t i : res.path) std::cout << i << "/";
    std::cout << ": " << res.reason << "\n";
    return 1;
  }
  auto style = display_style(ascii);
  std::cout << "OK " << (res.line == nd::LineKind::Proof ? "proof" : "dual proof") << " of "
            << print_formula(res.conclusion, style) << "\n";
  std::cout << "open assumptions:";
  for (const auto& f : res.open.gamma.items()) std::cout << " " << print_formula(f, style);
  std::cout << "\nopen counterassumptions:";
  for (const auto& f : res.open.delta.items()) std::cout << " " << print_formula(f, style);
  std::cout << "\n";
  return 0;
}

int cmd_unique(const std::string& conn, bool partial, bool as_json, bool latex, bool ascii) {
  Kind k = connective_from_token(conn);
  UniquenessReport rep =
      uniqueness_report(k, partial, Formula::atom("p"), Formula::atom("q"), {});
  if (as_json) {
    std::cout << report_to_json(rep, true).dump(2) << "\n";
    return 0;
  }
  auto style = display_style(ascii);
  auto show_block = [&](const char* title, const std::vector<SequentVerdict>& vs) {
    if (vs.empty()) return;
    std::cout << title << "\n";
    for (const auto& v : vs) {
      std::cout << "  " << (v.derivable ? "DERIVABLE  " : "UNDERIVABLE") << "  "
                << print_sequent(v.sequent, style) << "\n";
      if (latex && v.proof) std::cout << derivation_to_latex(*v.proof);
    }
  };
  std::cout << "connective " << kind_word(rep.connective)
            << (rep.partial ? " (one proof-only copy, one dual-only copy, one full copy)"
                            : " (one full copy)")
            << "\n";
  show_block("definitional sequents (base against the full copy):", rep.definitional);
  show_block("same-relation sequents:", rep.same_relation);
  show_block("cross-relation sequents:", rep.cross_relation);
  std::cout << "bilaterally unique: " << (rep.unique ? "yes" : "no") << "\n";
  return 0;
}

int cmd_dual(const std::string& text, bool also_decide,
             const std::vector<std::string>& copies, bool ascii) {
  Signature sig = signature_from_copies(copies);
  Sequent s = parse_sequent(text);
  Sequent d = dualize_sequent(s);
  std::cout << print_sequent(d, display_style(ascii)) << "\n";
  if (also_decide) {
    Decision orig = decide(s, sig, {});
    Decision dualled = decide(d, sig.dualized(), {});
    std::cout << "original: " << verdict_word(orig.derivable) << "\n";
    std::cout << "dual:     " << verdict_word(dualled.derivable) << "\n";
  }
  return 0;
}

int cmd_identity(const std::string& text, const std::string& mode_text,
                 const std::string& proof_format, const std::vector<std::string>& copies,
                 bool ascii) {
  Signature sig = signature_from_copies(copies);
  Formula f = parse_formula(text);
  Mode mode;
  if (mode_text == "+")
    mode = Mode::Plus;
  else if (mode_text == "-")
    mode = Mode::Minus;
  else
    throw std::invalid_argument("mode must be + or -");
  Derivation d = general_identity(f, mode, sig);
  CheckResult res = check(d, sig);
  if (!res.ok) throw std::logic_error("identity construction failed: " + res.reason);
  print_proof(d, proof_format.empty() ? "tree" : proof_format, ascii);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proof kernel for the bilateral sequent calculus SC2Int"};
  app.require_subcommand(1);

  std::string sequent_text, file_path, formula_text, mode_text, conn;
  std::string proof_format;
  std::vector<std::string> copies;
  std::optional<std::size_t> max_sequents;
  bool oracle = false, partial = false, as_json = false, latex = false, also_decide = false;
  bool ascii = false;

  auto add_copy_flag = [&](CLI::App* cmd) {
    cmd->add_option("--copy", copies,
                    "append a connective copy, e.g. \"&:full\" or \"&:proof-only\"");
    cmd->add_flag("--ascii", ascii, "render sequents in plain ASCII");
  };

  CLI::App* c_decide = app.add_subcommand("decide", "decide a sequent");
  c_decide->add_option("sequent", sequent_text)->required();
  c_decide->add_flag("--oracle", oracle, "cross-check against forward saturation");
  c_decide->add_option("--proof", proof_format,
                       "proof rendering: tree (default), json, latex or none")
      ->check(CLI::IsMember({"json", "tree", "latex", "none"}));
  c_decide->add_option("--max-sequents", max_sequents, "search budget override");
  add_copy_flag(c_decide);

  CLI::App* c_check = app.add_subcommand("check", "validate a derivation JSON file");
  c_check->add_option("file", file_path)->required();
  add_copy_flag(c_check);

  CLI::App* c_nd = app.add_subcommand("nd-check", "validate a natural-deduction JSON file");
  c_nd->add_option("file", file_path)->required();
  add_copy_flag(c_nd);

  CLI::App* c_unique = app.add_subcommand("unique", "uniqueness report for a connective");
  c_unique->add_option("connective", conn, "and, or, imp, coimp, top or bot")->required();
  c_unique->add_flag("--partial", partial, "probe a proof-only and a dual-only copy as well");
  c_unique->add_flag("--json", as_json, "emit the report as JSON");
  c_unique->add_flag("--latex", latex, "emit derivation trees in proof-tree form");
  c_unique->add_flag("--ascii", ascii, "render sequents in plain ASCII");

  CLI::App* c_dual = app.add_subcommand("dual", "dualize a sequent");
  c_dual->add_option("sequent", sequent_text)->required();
  c_dual->add_flag("--decide", also_decide, "decide both the sequent and its dual");
  add_copy_flag(c_dual);

  CLI::App* c_identity = app.add_subcommand("identity", "derive a formula from itself");
  c_identity->add_option("formula", formula_text)->required();
  c_identity->add_option("mode", mode_text, "+ or -")->required();
  c_identity->add_option("--proof", proof_format, "json, tree or latex")
      ->check(CLI::IsMember({"json", "tree", "latex"}));
  add_copy_flag(c_identity);

  CLI::App* c_selftest = app.add_subcommand("selftest", "run the bundled corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(c_decide))
      return cmd_decide(sequent_text, oracle, proof_format, copies, max_sequents, ascii);
    if (app.got_subcommand(c_check)) return cmd_check(file_path, copies, ascii);
    if (app.got_subcommand(c_nd)) return cmd_nd_check(file_path, copies, ascii);
    if (app.got_subcommand(c_unique)) return cmd_unique(conn, partial, as_json, latex, ascii);
    if (app.got_subcommand(c_dual)) return cmd_dual(sequent_text, also_decide, copies, ascii);
    if (app.got_subcommand(c_identity))
      return cmd_identity(formula_text, mode_text, proof_format, copies, ascii);
    if (app.got_subcommand(c_selftest))
      return bilat::tools::run_selftest(std::cout) == 0 ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const JsonFormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitError;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitError;
  } catch (const OracleDisagreementError& e) {
    std::cerr << "internal disagreement: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
