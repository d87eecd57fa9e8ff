#pragma once

#include <random>
#include <string>
#include <vector>

#include "lgcalc/cut.hpp"
#include "lgcalc/model.hpp"
#include "lgcalc/search.hpp"
#include "lgcalc/text.hpp"

namespace lgtest {

using namespace lg;

inline FormulaPtr random_formula(std::mt19937& rng, int max_depth,
                                 const std::vector<std::string>& atoms) {
  std::uniform_int_distribution<int> pick_atom(0, static_cast<int>(atoms.size()) - 1);
  if (max_depth == 0 || std::uniform_int_distribution<int>(0, 2)(rng) == 0)
    return Formula::atom(atoms[pick_atom(rng)]);
  auto c = static_cast<Conn>(std::uniform_int_distribution<int>(0, 5)(rng));
  return Formula::make(c, random_formula(rng, max_depth - 1, atoms),
                       random_formula(rng, max_depth - 1, atoms));
}

inline DerivPtr random_derivation(std::mt19937& rng, int max_depth,
                                  const std::vector<std::string>& atoms) {
  // Shape-valid trees (arities respected); not necessarily schema-valid.
  std::uniform_int_distribution<int> pick_atom(0, static_cast<int>(atoms.size()) - 1);
  if (max_depth == 0 || std::uniform_int_distribution<int>(0, 3)(rng) == 0)
    return Derivation::ax(atoms[pick_atom(rng)]);
  RuleTag t = kRuleOrder[std::uniform_int_distribution<int>(1, kRuleCount - 1)(rng)];
  if (rule_arity(t) == 1) return Derivation::unary(t, random_derivation(rng, max_depth - 1, atoms));
  return Derivation::binary(t, random_derivation(rng, max_depth - 1, atoms),
                            random_derivation(rng, max_depth - 1, atoms));
}

// ---- the example sentence -----------------------------------------------

inline Judgement sentence_judgement_s5() {
  return parse_judgement("((np <= n) * n) * (((np => s) <= np) * ((np <= n) * n)) |- s");
}

// sent0 = r=>* (r<=* (m<= (m=> (r<=* ax') ax) (r<=* ax')))
inline DerivPtr sent0() {
  auto some_np = Derivation::unary(
      RuleTag::RImpLProd, Derivation::binary(RuleTag::MImpL, Derivation::ax("np"), Derivation::ax("n")));
  auto inner = Derivation::binary(RuleTag::MImpL,
                                  Derivation::binary(RuleTag::MImpR, some_np, Derivation::ax("s")),
                                  some_np);
  return Derivation::unary(RuleTag::RImpRProd, Derivation::unary(RuleTag::RImpLProd, inner));
}

// sent1 = r<=* (r<=* (m<= (r*<= (r=>* (r<=* (m<= ax' (r<=* ax'))))) ax))
inline DerivPtr sent1() {
  auto some_np = Derivation::unary(
      RuleTag::RImpLProd, Derivation::binary(RuleTag::MImpL, Derivation::ax("np"), Derivation::ax("n")));
  auto ax_nps = Derivation::binary(RuleTag::MImpR, Derivation::ax("np"), Derivation::ax("s"));
  auto u = Derivation::unary(
      RuleTag::RProdImpL,
      Derivation::unary(RuleTag::RImpRProd,
                        Derivation::unary(RuleTag::RImpLProd,
                                          Derivation::binary(RuleTag::MImpL, ax_nps, some_np))));
  auto f2 = Derivation::binary(RuleTag::MImpL, u, Derivation::ax("n"));
  return Derivation::unary(RuleTag::RImpLProd, Derivation::unary(RuleTag::RImpLProd, f2));
}

inline const char* lexicon_text_s5() {
  return "someone  : (np <= n) * n    = (\\(g,f) -> exists (\\x -> and (f x) (g x)), person)\n"
         "loves    : (np => s) <= np  = \\(k,y) -> k (\\(x,k2) -> k2 (loves x y))\n"
         "everyone : (np <= n) * n    = (\\(g,f) -> forall (\\x -> implies (f x) (g x)), person)\n";
}

// entities {e1,e2}, person both, loves the diagonal
inline Model model_m2() {
  Model m;
  m.entities = {"e1", "e2"};
  m.unary_preds["person"] = {"e1", "e2"};
  m.binary_rels["loves"] = {{"e1", "e1"}, {"e2", "e2"}};
  return m;
}

// ---- hand-coded reading oracles -----------------------------------------

inline bool loves_in(const Model& m, const std::string& x, const std::string& y) {
  auto it = m.binary_rels.find("loves");
  return it != m.binary_rels.end() && it->second.count({x, y}) > 0;
}

inline bool person_in(const Model& m, const std::string& x) {
  auto it = m.unary_preds.find("person");
  return it != m.unary_preds.end() && it->second.count(x) > 0;
}

// forall y (person y -> exists x (person x & loves x y))
inline bool reading_wide_universal(const Model& m) {
  for (const auto& y : m.entities) {
    if (!person_in(m, y)) continue;
    bool found = false;
    for (const auto& x : m.entities)
      if (person_in(m, x) && loves_in(m, x, y)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// exists x (person x & forall y (person y -> loves x y))
inline bool reading_wide_existential(const Model& m) {
  for (const auto& x : m.entities) {
    if (!person_in(m, x)) continue;
    bool all = true;
    for (const auto& y : m.entities)
      if (person_in(m, y) && !loves_in(m, x, y)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

inline Model random_model(std::mt19937& rng, int max_entities = 4) {
  Model m;
  int n = std::uniform_int_distribution<int>(1, max_entities)(rng);
  for (int i = 0; i < n; ++i) m.entities.push_back("e" + std::to_string(i + 1));
  auto& person = m.unary_preds["person"];
  for (const auto& e : m.entities)
    if (std::uniform_int_distribution<int>(0, 3)(rng) != 0) person.insert(e);
  auto& loves = m.binary_rels["loves"];
  for (const auto& a : m.entities)
    for (const auto& b : m.entities)
      if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) loves.insert({a, b});
  return m;
}

// ---- corpus of composable cut pairs --------------------------------------

struct CutPair {
  DerivPtr f, g;
  FormulaPtr cut_formula;
};

// Proof enumerations around a list of cut formulas covering all seven
// main connectives; formulas stay within depth 3.
inline std::vector<CutPair> cut_corpus(size_t max_pairs_per_formula = 64) {
  auto a = Formula::atom("a"), b = Formula::atom("b"), c = Formula::atom("c");
  std::vector<FormulaPtr> cut_formulas = {
      a,
      b,
      c,
      prod(a, b),
      prod(b, c),
      prod(prod(a, b), c),
      impr(a, b),
      impl(b, a),
      sum(a, b),
      diffl(b, a),
      diffr(a, b),
      diffl(c, a),
      diffr(c, b),
      prod(a, impr(a, b)),
      prod(impl(a, b), b),
      prod(b, impr(b, a)),
      impl(impr(a, b), a),
      sum(diffl(a, b), b),
  };
  std::vector<CutPair> out;
  for (const auto& cf : cut_formulas) {
    std::vector<FormulaPtr> lhs_templates = {cf, prod(impl(cf, b), b), prod(a, impr(a, cf)),
                                             prod(impl(cf, c), c), prod(b, impr(b, cf))};
    std::vector<FormulaPtr> rhs_templates = {cf,
                                             a,
                                             b,
                                             c,
                                             sum(b, diffr(b, cf)),
                                             sum(diffl(cf, a), a),
                                             sum(c, diffr(c, cf)),
                                             sum(diffl(cf, b), b)};
    std::vector<DerivPtr> fs, gs;
    for (const auto& x : lhs_templates)
      for (const auto& d : enumerate_proofs(Judgement{x, cf})) fs.push_back(d);
    for (const auto& y : rhs_templates)
      for (const auto& d : enumerate_proofs(Judgement{cf, y})) gs.push_back(d);
    size_t added = 0;
    for (const auto& f : fs) {
      for (const auto& g : gs) {
        if (added >= max_pairs_per_formula) break;
        out.push_back(CutPair{f, g, cf});
        ++added;
      }
      if (added >= max_pairs_per_formula) break;
    }
  }
  // Grishin-interaction pairs: these judgements are only derivable
  // through the d-rules, so cut/origin/translation run over them too.
  struct Extra {
    const char* fj;
    const char* gj;
  };
  const Extra extras[] = {
      {"(c >- a) * b |- (c >- a) * b", "(c >- a) * b |- c >- (a * b)"},
      {"(c >- a) * b |- c >- (a * b)", "c >- (a * b) |- c >- (a * b)"},
      {"a -< c |- ((a * b) -< c) <= b", "((a * b) -< c) <= b |- ((a * b) -< c) <= b"},
      {"c >- b |- a => (c >- (a * b))", "a => (c >- (a * b)) |- a => (c >- (a * b))"},
      {"b -< c |- a => ((a * b) -< c)", "a => ((a * b) -< c) |- a => ((a * b) -< c)"},
  };
  for (const auto& e : extras) {
    Judgement fj = parse_judgement(e.fj), gj = parse_judgement(e.gj);
    for (const auto& f : enumerate_proofs(fj))
      for (const auto& g : enumerate_proofs(gj)) out.push_back(CutPair{f, g, fj.rhs});
  }
  return out;
}

inline std::vector<Judgement> grishin_judgements() {
  return {
      parse_judgement("(c >- a) * b |- c >- (a * b)"),
      parse_judgement("c >- a |- (c >- (a * b)) <= b"),
      parse_judgement("a -< c |- ((a * b) -< c) <= b"),
      parse_judgement("c >- b |- a => (c >- (a * b))"),
      parse_judgement("b -< c |- a => ((a * b) -< c)"),
  };
}

// Distinct derivations appearing in the corpus (for per-derivation runs).
inline std::vector<DerivPtr> corpus_derivations(const std::vector<CutPair>& pairs) {
  std::vector<DerivPtr> ds;
  auto add = [&](const DerivPtr& d) {
    for (const auto& e : ds)
      if (equal(e, d)) return;
    ds.push_back(d);
  };
  for (const auto& p : pairs) {
    add(p.f);
    add(p.g);
  }
  return ds;
}

}  // namespace lgtest
