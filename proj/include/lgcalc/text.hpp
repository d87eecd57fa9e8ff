#pragma once

#include <string>

#include "lgcalc/cps.hpp"
#include "lgcalc/derivation.hpp"
#include "lgcalc/model.hpp"

namespace lg {

struct ParseError : std::runtime_error {
  size_t offset;
  std::string expected;
  ParseError(size_t off, std::string exp)
      : std::runtime_error("parse error at offset " + std::to_string(off) + ": expected " + exp),
        offset(off),
        expected(std::move(exp)) {}
};

struct UnknownRule : std::runtime_error {
  std::string name;
  UnknownRule(std::string n) : std::runtime_error("unknown rule: " + n), name(std::move(n)) {}
};

struct ArityError : std::runtime_error {
  RuleTag tag;
  size_t got;
  ArityError(RuleTag t, size_t g)
      : std::runtime_error(std::string("rule ") + rule_name(t) + " applied to " +
                           std::to_string(g) + " arguments"),
        tag(t),
        got(g) {}
};

// Formulas and judgements. Connectives accept the ASCII aliases
// * => <= + -< >- and the Unicode originals; operators are
// non-associative with equal precedence, so nesting needs parentheses.
FormulaPtr parse_formula(const std::string& s);
Judgement parse_judgement(const std::string& s);  // separator |- or ⊢

std::string render_formula(const FormulaPtr& f, bool unicode = false);
std::string render_judgement(const Judgement& j, bool unicode = false);

// Derivations as s-expressions, e.g. "(r=>* (m=> (ax np) (ax s)))".
// Rule names use the ASCII aliases on output; Unicode names are also
// accepted on input.
DerivPtr parse_derivation(const std::string& s);
std::string render_derivation(const DerivPtr& d);

// SemType grammar: atoms, (t x u), ! t (Unicode ¬ and × on request).
std::string render_sem_type(const SemTypePtr& t, bool unicode = false);

// Inspection-only pretty printer for lambda terms (format not stable).
std::string render_term(const SemTermPtr& t);

enum class TreeStyle { Ascii, Latex };

// Proof tree with every node's inferred judgement and rule label,
// premises above conclusions. Ascii is an indented outline; Latex emits
// bussproofs commands with Unicode judgements.
std::string render_proof_tree(const DerivPtr& d, TreeStyle style);

// Lexicon file: one entry per line, `word : FORMULA = TERM`, where TERM
// uses \x -> t, \(x,y) -> t, juxtaposition, pairs (t , u) and the
// constants forall/exists/and/implies plus model names. Blank lines and
// # comments are ignored.
Lexicon parse_lexicon(const std::string& text);

// Model file lines: `entities e1 e2 ...`, `pred NAME e...`,
// `rel NAME (a,b) ...`; blank lines and # comments ignored.
Model parse_model(const std::string& text);

// Standalone term parser (used by the lexicon reader and tests).
SemTermPtr parse_term(const std::string& s);

}  // namespace lg
