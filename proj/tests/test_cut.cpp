#include <doctest.h>

#include "helpers.hpp"
#include "lgcalc/cut.hpp"

using namespace lg;
using namespace lgtest;

namespace {
DerivPtr ax(const char* a) { return Derivation::ax(a); }
}  // namespace

TEST_CASE("cut on an atomic formula substitutes into g") {
  // g : a |- b <= (a => b), f = ax a; cut must give g's judgement with
  // the same antecedent (here: identical judgement).
  auto g = Derivation::unary(
      RuleTag::RProdImpL,
      Derivation::unary(RuleTag::RImpRProd, Derivation::binary(RuleTag::MImpR, ax("a"), ax("b"))));
  CHECK(infer(g) == parse_judgement("a |- b <= (a => b)"));
  auto r = cut(ax("a"), g);
  CHECK(equal(r, g));  // rebuild of f=ax is g itself
}

TEST_CASE("cut against the general axiom preserves the judgement") {
  auto f = Derivation::unary(RuleTag::RImpRProd,
                             Derivation::binary(RuleTag::MImpR, ax("a"), ax("b")));
  auto b = Formula::atom("b");
  auto r = cut(f, ax_general(b));
  CHECK(infer(r) == infer(f));

  auto inst = parse_formula("a * (a => b)");
  auto r2 = cut(ax_general(inst), f);
  CHECK(infer(r2) == infer(f));
}

TEST_CASE("cut on a product follows the rewrite of the origin view") {
  // f : a*b |- a*b  (m* ax ax), g : a*b |- b <= (a => (a*b))? keep simple:
  // g proves a*b |- a*b as well; conclusion must be a*b |- a*b.
  auto f = Derivation::binary(RuleTag::MProd, ax("a"), ax("b"));
  auto g = f;
  auto r = cut(f, g);
  CHECK(infer(r) == parse_judgement("a * b |- a * b"));
}

TEST_CASE("cut formula mismatch is reported") {
  CHECK_THROWS_AS(cut(ax("a"), ax("b")), CutFormulaMismatch);
}

TEST_CASE("cut on a product: exact rewrite skeleton at the identity instance") {
  // Unfolding the product clause by hand for f = g = m* ax ax gives
  // r<=* . r*<= . r=>* . r*=> around the introducer.
  auto f = Derivation::binary(RuleTag::MProd, ax("b"), ax("c"));
  auto expected = parse_derivation("(r<=* (r*<= (r=>* (r*=> (m* (ax b) (ax c))))))");
  CHECK(equal(cut(f, f), expected));
}

TEST_CASE("cut on a sum: exact rewrite skeleton at the identity instance") {
  auto f = Derivation::binary(RuleTag::MSum, ax("b"), ax("c"));
  auto expected = parse_derivation("(r-<+ (r+-< (r>-+ (r+>- (m+ (ax b) (ax c))))))");
  CHECK(equal(cut(f, f), expected));
}

TEST_CASE("cut is well-typed across the corpus and bounded in depth") {
  auto pairs = cut_corpus();
  REQUIRE(pairs.size() >= 200);
  // all seven main connectives appear as cut formulas
  std::set<int> conative;
  for (const auto& p : pairs)
    conative.insert(p.cut_formula->is_atom() ? -1 : static_cast<int>(p.cut_formula->conn()));
  CHECK(conative.size() == 7);

  for (const auto& p : pairs) {
    CutStats stats;
    auto r = cut(p.f, p.g, &stats);
    Judgement want{infer(p.f).lhs, infer(p.g).rhs};
    CHECK(infer(r) == want);
    CHECK(stats.max_depth <= 2 * p.cut_formula->size());
  }
}

TEST_CASE("cut of the sentence proofs against the goal axiom") {
  auto d = cut(sent0(), ax("s"));
  CHECK(infer(d) == sentence_judgement_s5());
}
