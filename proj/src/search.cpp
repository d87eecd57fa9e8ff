#include "lgcalc/search.hpp"

#include <unordered_set>

namespace lg {

namespace {

using PathSet = std::unordered_set<Judgement, JudgementHash>;

struct Searcher {
  const SearchOptions& opts;

  bool depth_ok(size_t depth) const { return !opts.max_depth || depth <= *opts.max_depth; }

  // All loop-free proofs of j given the judgements already on this branch.
  std::vector<DerivPtr> solve(const Judgement& j, PathSet& path, size_t depth) {
    std::vector<DerivPtr> out;
    for (RuleTag t : kRuleOrder) {
      if (t == RuleTag::Ax) {
        if (j.lhs->is_atom() && j.rhs->is_atom() && j.lhs->atom_name() == j.rhs->atom_name())
          out.push_back(Derivation::ax(j.lhs->atom_name()));
        continue;
      }
      auto prems = backward(t, j);
      if (!prems) continue;
      if (!depth_ok(depth + 1)) continue;
      bool loops = false;
      for (const Judgement& p : *prems)
        if (path.count(p)) {
          loops = true;
          break;
        }
      if (loops) continue;

      if (prems->size() == 1) {
        const Judgement& p = (*prems)[0];
        path.insert(p);
        for (auto& d : solve(p, path, depth + 1)) out.push_back(Derivation::unary(t, d));
        path.erase(p);
      } else {
        const Judgement &p0 = (*prems)[0], &p1 = (*prems)[1];
        path.insert(p0);
        auto lefts = solve(p0, path, depth + 1);
        path.erase(p0);
        if (lefts.empty()) continue;
        path.insert(p1);
        auto rights = solve(p1, path, depth + 1);
        path.erase(p1);
        for (auto& l : lefts)
          for (auto& r : rights) out.push_back(Derivation::binary(t, l, r));
      }
    }
    return out;
  }
};

}  // namespace

std::vector<DerivPtr> enumerate_proofs(const Judgement& j, const SearchOptions& opts) {
  Searcher s{opts};
  PathSet path;
  path.insert(j);
  auto out = s.solve(j, path, 0);
  if (opts.max_proofs && out.size() > *opts.max_proofs) out.resize(*opts.max_proofs);
  return out;
}

}  // namespace lg
