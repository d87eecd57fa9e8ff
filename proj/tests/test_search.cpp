#include <doctest.h>

#include "helpers.hpp"
#include "lgcalc/search.hpp"

using namespace lg;
using namespace lgtest;

TEST_CASE("enumerate: atomic identity has exactly the axiom") {
  auto out = enumerate_proofs(parse_judgement("a |- a"));
  REQUIRE(out.size() == 1);
  CHECK(equal(out[0], Derivation::ax("a")));
}

TEST_CASE("enumerate: distinct atoms are not derivable") {
  CHECK(enumerate_proofs(parse_judgement("a |- b")).empty());
}

TEST_CASE("enumerate: underivable compound judgement") {
  CHECK(enumerate_proofs(parse_judgement("a * b |- b * a")).empty());
}

TEST_CASE("enumerate: application judgement contains the combinator") {
  auto out = enumerate_proofs(parse_judgement("np * (np => s) |- s"));
  auto fixture = Derivation::unary(
      RuleTag::RImpRProd,
      Derivation::binary(RuleTag::MImpR, Derivation::ax("np"), Derivation::ax("s")));
  bool found = false;
  for (const auto& d : out) found = found || equal(d, fixture);
  CHECK(found);
  CHECK(out.size() == 1);  // exhaustive loop-free search finds exactly the one
}

namespace {

// Oracle: backward enumeration bounded by depth with NO loop pruning.
std::vector<DerivPtr> brute_enumerate(const Judgement& j, size_t depth_left) {
  std::vector<DerivPtr> out;
  for (RuleTag t : kRuleOrder) {
    if (t == RuleTag::Ax) {
      if (j.lhs->is_atom() && j.rhs->is_atom() && j.lhs->atom_name() == j.rhs->atom_name())
        out.push_back(Derivation::ax(j.lhs->atom_name()));
      continue;
    }
    auto prems = backward(t, j);
    if (!prems || depth_left == 0) continue;
    if (prems->size() == 1) {
      for (auto& d : brute_enumerate((*prems)[0], depth_left - 1))
        out.push_back(Derivation::unary(t, d));
    } else {
      auto lefts = brute_enumerate((*prems)[0], depth_left - 1);
      if (lefts.empty()) continue;
      auto rights = brute_enumerate((*prems)[1], depth_left - 1);
      for (auto& l : lefts)
        for (auto& r : rights) out.push_back(Derivation::binary(t, l, r));
    }
  }
  return out;
}

// Does any judgement repeat along a root-to-leaf path of d?
bool loop_free(const DerivPtr& d, std::vector<Judgement>& path) {
  Judgement j = infer(d);
  for (const auto& seen : path)
    if (seen == j) return false;
  path.push_back(j);
  bool ok = true;
  for (int i = 0; i < rule_arity(d->tag()) && ok; ++i)
    ok = loop_free(i == 0 ? d->left() : d->right(), path);
  path.pop_back();
  return ok;
}

}  // namespace

TEST_CASE("enumerate equals the filtered brute-force oracle at equal depth") {
  // the loop-free criterion, implemented independently: run the search
  // without pruning and drop derivations with a repeated judgement on
  // some path; result must match the pruning search, order included
  for (const char* src : {"a |- a", "a * b |- a * b", "a * (a => b) |- b",
                          "b |- a + (a >- b)", "a => b |- a => b",
                          "(c >- a) * b |- c >- (a * b)"}) {
    Judgement j = parse_judgement(src);
    const size_t depth = 7;
    std::vector<DerivPtr> oracle;
    for (const auto& d : brute_enumerate(j, depth)) {
      std::vector<Judgement> path;
      if (loop_free(d, path)) oracle.push_back(d);
    }
    auto pruned = enumerate_proofs(j, SearchOptions{std::nullopt, depth});
    REQUIRE(pruned.size() == oracle.size());
    for (size_t i = 0; i < pruned.size(); ++i) CHECK(equal(pruned[i], oracle[i]));
  }
}

TEST_CASE("enumerate: every returned derivation is loop-free") {
  for (const Judgement& j : {sentence_judgement_s5(), parse_judgement("a * (a => b) |- b")}) {
    for (const auto& d : enumerate_proofs(j)) {
      std::vector<Judgement> path;
      CHECK(loop_free(d, path));
    }
  }
}

TEST_CASE("enumerate: soundness and distinctness") {
  for (const char* src : {"a * b |- a * b", "(a => b) |- (a => b)", "b |- a + (a >- b)",
                          "a * (a => b) |- b", "(b <= a) * a |- b"}) {
    Judgement j = parse_judgement(src);
    auto out = enumerate_proofs(j);
    for (size_t i = 0; i < out.size(); ++i) {
      CHECK(infer(out[i]) == j);
      for (size_t k = i + 1; k < out.size(); ++k) CHECK(!equal(out[i], out[k]));
    }
  }
}

TEST_CASE("enumerate: deterministic across runs") {
  Judgement j = parse_judgement("(a => b) * ((b => a) * (a => b)) |- b");
  auto out1 = enumerate_proofs(j);
  auto out2 = enumerate_proofs(j);
  REQUIRE(out1.size() == out2.size());
  for (size_t i = 0; i < out1.size(); ++i) CHECK(equal(out1[i], out2[i]));
}

TEST_CASE("enumerate: max_proofs truncates deterministically") {
  Judgement j = sentence_judgement_s5();
  auto all = enumerate_proofs(j);
  auto firsts = enumerate_proofs(j, SearchOptions{2, std::nullopt});
  REQUIRE(firsts.size() == 2);
  CHECK(equal(firsts[0], all[0]));
  CHECK(equal(firsts[1], all[1]));
}

TEST_CASE("enumerate: max_depth prunes deep proofs") {
  Judgement j = parse_judgement("a * (a => b) |- b");
  CHECK(enumerate_proofs(j, SearchOptions{std::nullopt, 1}).empty());
  CHECK(enumerate_proofs(j, SearchOptions{std::nullopt, 3}).size() == 1);
}

TEST_CASE("enumerate: the example sentence has seven proofs with both witnesses") {
  auto out = enumerate_proofs(sentence_judgement_s5());
  CHECK(out.size() == 7);
  bool has0 = false, has1 = false;
  for (const auto& d : out) {
    CHECK(infer(d) == sentence_judgement_s5());
    has0 = has0 || equal(d, sent0());
    has1 = has1 || equal(d, sent1());
  }
  CHECK(has0);
  CHECK(has1);
}

TEST_CASE("enumerate: grishin interaction judgements are derivable") {
  // these hold only through the distributivity rules
  for (const Judgement& j : grishin_judgements()) {
    auto out = enumerate_proofs(j);
    REQUIRE(!out.empty());
    bool uses_d_rule = false;
    std::function<void(const DerivPtr&)> scan = [&](const DerivPtr& d) {
      if (d->tag() == RuleTag::DDiffRImpL || d->tag() == RuleTag::DDiffRImpR ||
          d->tag() == RuleTag::DDiffLImpR || d->tag() == RuleTag::DDiffLImpL)
        uses_d_rule = true;
      for (int i = 0; i < rule_arity(d->tag()); ++i) scan(i == 0 ? d->left() : d->right());
    };
    for (const auto& d : out) {
      CHECK(infer(d) == j);
      scan(d);
    }
    CHECK(uses_d_rule);
  }
  // unrelated atoms stay underivable
  CHECK(enumerate_proofs(parse_judgement("(c >- a) |- (d <= b)")).empty());
}
