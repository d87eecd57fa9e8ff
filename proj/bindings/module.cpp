#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lgcalc/cut.hpp"
#include "lgcalc/model.hpp"
#include "lgcalc/search.hpp"
#include "lgcalc/text.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> prove(const std::string& judgement, std::optional<size_t> max_proofs) {
  lg::Judgement j = lg::parse_judgement(judgement);
  lg::SearchOptions opts;
  opts.max_proofs = max_proofs;
  std::vector<std::string> out;
  for (const auto& d : lg::enumerate_proofs(j, opts)) out.push_back(lg::render_derivation(d));
  return out;
}

std::string check(const std::string& sexp) {
  return lg::render_judgement(lg::infer(lg::parse_derivation(sexp)));
}

std::string cut_sexp(const std::string& f, const std::string& g) {
  return lg::render_derivation(lg::cut(lg::parse_derivation(f), lg::parse_derivation(g)));
}

std::string translate_type_str(const std::string& formula) {
  return lg::render_sem_type(lg::translate_type(lg::parse_formula(formula)), true);
}

std::string proof_tree(const std::string& sexp, const std::string& style) {
  return lg::render_proof_tree(lg::parse_derivation(sexp),
                               style == "latex" ? lg::TreeStyle::Latex : lg::TreeStyle::Ascii);
}

std::vector<std::pair<std::string, bool>> denote_sentence(const std::string& lexicon_text,
                                                          const std::string& model_text,
                                                          const std::string& goal,
                                                          const std::vector<std::string>& words) {
  lg::Lexicon lex = lg::parse_lexicon(lexicon_text);
  lg::Model m = lg::parse_model(model_text);
  lg::FormulaPtr goal_f = lg::parse_formula(goal);
  lg::Judgement j = lg::sentence_judgement(lex, words, goal_f);
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& d : lg::enumerate_proofs(j))
    out.emplace_back(lg::render_derivation(d), lg::denote(d, lex, words, goal_f, m));
  return out;
}

}  // namespace

PYBIND11_MODULE(_lgcalc, m) {
  m.doc() = "Lambek-Grishin calculus engine";

  m.def("prove", &prove, py::arg("judgement"), py::arg("max_proofs") = std::nullopt,
        "Enumerate loop-free cut-free proofs; returns derivation s-expressions in "
        "deterministic order.");
  m.def("check", &check, py::arg("derivation"),
        "Infer the conclusion judgement of a derivation s-expression.");
  m.def("cut", &cut_sexp, py::arg("f"), py::arg("g"),
        "Admissible cut of two derivations (s-expressions) with matching cut formula.");
  m.def("translate_type", &translate_type_str, py::arg("formula"),
        "CPS image of a formula as a semantic type string.");
  m.def("proof_tree", &proof_tree, py::arg("derivation"), py::arg("style") = "ascii",
        "Render a proof tree (style: ascii or latex).");
  m.def("denote", &denote_sentence, py::arg("lexicon"), py::arg("model"), py::arg("goal"),
        py::arg("words"),
        "Enumerate proofs of the sentence judgement and evaluate each over the model; "
        "returns (proof sexp, truth value) pairs.");
}
