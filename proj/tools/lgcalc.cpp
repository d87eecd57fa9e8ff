#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lgcalc/cut.hpp"
#include "lgcalc/model.hpp"
#include "lgcalc/search.hpp"
#include "lgcalc/text.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_prove(const std::string& judgement, bool all, long max_n, const std::string& format) {
  lg::Judgement j = lg::parse_judgement(judgement);
  lg::SearchOptions opts;
  if (!all) opts.max_proofs = max_n > 0 ? static_cast<size_t>(max_n) : 1;
  auto proofs = lg::enumerate_proofs(j, opts);
  for (size_t i = 0; i < proofs.size(); ++i) {
    if (format == "sexp") {
      std::cout << lg::render_derivation(proofs[i]) << "\n";
    } else {
      std::cout << "% proof " << i << "\n"
                << lg::render_proof_tree(proofs[i], format == "latex" ? lg::TreeStyle::Latex
                                                                      : lg::TreeStyle::Ascii);
    }
  }
  return proofs.empty() ? 1 : 0;
}

int run_check(const std::string& path) {
  lg::DerivPtr d = lg::parse_derivation(read_file(path));
  std::cout << lg::render_judgement(lg::infer(d)) << "\n";
  return 0;
}

int run_cut(const std::string& f_path, const std::string& g_path) {
  lg::DerivPtr f = lg::parse_derivation(read_file(f_path));
  lg::DerivPtr g = lg::parse_derivation(read_file(g_path));
  std::cout << lg::render_derivation(lg::cut(f, g)) << "\n";
  return 0;
}

int run_translate_type(const std::string& formula) {
  std::cout << lg::render_sem_type(lg::translate_type(lg::parse_formula(formula)), true) << "\n";
  return 0;
}

int run_denote(const std::string& lex_path, const std::string& model_path,
               const std::string& goal, const std::vector<std::string>& words, bool show_proof) {
  lg::Lexicon lex = lg::parse_lexicon(read_file(lex_path));
  lg::Model model = lg::parse_model(read_file(model_path));
  lg::FormulaPtr goal_f = lg::parse_formula(goal);
  lg::Judgement j = lg::sentence_judgement(lex, words, goal_f);
  auto proofs = lg::enumerate_proofs(j);
  for (size_t i = 0; i < proofs.size(); ++i) {
    bool v = lg::denote(proofs[i], lex, words, goal_f, model);
    std::cout << i << " " << (v ? "true" : "false");
    if (show_proof) std::cout << " " << lg::render_derivation(proofs[i]);
    std::cout << "\n";
  }
  return proofs.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lambek-Grishin calculus engine: proof search, cut elimination, CPS semantics"};
  app.require_subcommand(1);

  std::string judgement, format = "sexp";
  bool all = false;
  long max_n = 0;
  auto* prove = app.add_subcommand("prove", "enumerate cut-free proofs of a judgement");
  prove->add_option("judgement", judgement, "e.g. \"a * (a => b) |- b\"")->required();
  prove->add_flag("--all", all, "print every loop-free proof");
  prove->add_option("--max", max_n, "print at most N proofs");
  prove->add_option("--format", format, "sexp|ascii|latex")
      ->check(CLI::IsMember({"sexp", "ascii", "latex"}));

  std::string check_file;
  auto* check = app.add_subcommand("check", "infer the conclusion of a derivation file");
  check->add_option("file", check_file, "s-expression derivation file")->required();

  std::string cut_f, cut_g;
  auto* cutc = app.add_subcommand("cut", "compose two derivations by admissible cut");
  cutc->add_option("f", cut_f, "derivation of A |- B")->required();
  cutc->add_option("g", cut_g, "derivation of B |- C")->required();

  std::string tt_formula;
  auto* tt = app.add_subcommand("translate-type", "CPS image of a formula");
  tt->add_option("formula", tt_formula)->required();

  std::string lex_path, model_path, goal = "s";
  std::vector<std::string> words;
  bool show_proof = false;
  auto* den = app.add_subcommand("denote", "evaluate a sentence over a finite model");
  den->add_option("--lexicon", lex_path)->required();
  den->add_option("--model", model_path)->required();
  den->add_option("--goal", goal, "goal formula (default s)");
  den->add_flag("--show-proof", show_proof, "append each proof s-expression");
  den->add_option("words", words, "sentence words")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (prove->parsed()) return run_prove(judgement, all, max_n, format);
    if (check->parsed()) return run_check(check_file);
    if (cutc->parsed()) return run_cut(cut_f, cut_g);
    if (tt->parsed()) return run_translate_type(tt_formula);
    if (den->parsed()) return run_denote(lex_path, model_path, goal, words, show_proof);
  } catch (const lg::SchemaMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
