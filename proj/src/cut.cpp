#include "lgcalc/cut.hpp"

#include <algorithm>

#include "lgcalc/origin.hpp"

namespace lg {

namespace {

DerivPtr u(RuleTag t, DerivPtr d) { return Derivation::unary(t, std::move(d)); }

DerivPtr cut_impl(const DerivPtr& f, const DerivPtr& g, const FormulaPtr& cut_formula,
                  size_t depth, CutStats* stats) {
  if (stats) {
    ++stats->calls;
    stats->max_depth = std::max(stats->max_depth, depth);
  }
  const FormulaPtr& b = cut_formula;

  if (b->is_atom()) {
    // ax introduced B in g; replace it with f.
    auto jg = infer(g);
    auto jctx = JudgementContext::antecedent_hole(FormulaContext::hole(Polarity::Pos), jg.rhs);
    OriginView v = find_origin(std::nullopt, jctx, b, g);
    return apply_spine(v.spine, f);
  }

  auto rec = [&](const DerivPtr& f2, const DerivPtr& g2, const FormulaPtr& cf) {
    return cut_impl(f2, g2, cf, depth + 1, stats);
  };

  switch (b->conn()) {
    case Conn::Prod: {
      auto jf = infer(f);
      auto jctx = JudgementContext::succedent_hole(jf.lhs, FormulaContext::hole(Polarity::Neg));
      OriginView v = find_origin(Conn::Prod, jctx, b, f);
      const DerivPtr &h1 = v.premises[0], &h2 = v.premises[1];
      auto inner = u(RuleTag::RImpLProd,
                     rec(h1,
                         u(RuleTag::RProdImpL,
                           u(RuleTag::RImpRProd, rec(h2, u(RuleTag::RProdImpR, g), b->right()))),
                         b->left()));
      return apply_spine(v.spine, inner);
    }
    case Conn::ImpL: {
      auto jg = infer(g);
      auto jctx = JudgementContext::antecedent_hole(FormulaContext::hole(Polarity::Pos), jg.rhs);
      OriginView v = find_origin(Conn::ImpL, jctx, b, g);
      const DerivPtr &h1 = v.premises[0], &h2 = v.premises[1];
      auto inner = u(RuleTag::RProdImpL,
                     u(RuleTag::RImpRProd,
                       rec(h2,
                           u(RuleTag::RProdImpR, rec(u(RuleTag::RImpLProd, f), h1, b->left())),
                           b->right())));
      return apply_spine(v.spine, inner);
    }
    case Conn::ImpR: {
      auto jg = infer(g);
      auto jctx = JudgementContext::antecedent_hole(FormulaContext::hole(Polarity::Pos), jg.rhs);
      OriginView v = find_origin(Conn::ImpR, jctx, b, g);
      const DerivPtr &h1 = v.premises[0], &h2 = v.premises[1];
      auto inner = u(RuleTag::RProdImpR,
                     u(RuleTag::RImpLProd,
                       rec(h1,
                           u(RuleTag::RProdImpL, rec(u(RuleTag::RImpRProd, f), h2, b->right())),
                           b->left())));
      return apply_spine(v.spine, inner);
    }
    case Conn::Sum: {
      auto jg = infer(g);
      auto jctx = JudgementContext::antecedent_hole(FormulaContext::hole(Polarity::Pos), jg.rhs);
      OriginView v = find_origin(Conn::Sum, jctx, b, g);
      const DerivPtr &h1 = v.premises[0], &h2 = v.premises[1];
      auto inner = u(RuleTag::RDiffLSum,
                     rec(u(RuleTag::RSumDiffL,
                           u(RuleTag::RDiffRSum, rec(u(RuleTag::RSumDiffR, f), h2, b->right()))),
                         h1, b->left()));
      return apply_spine(v.spine, inner);
    }
    case Conn::DiffL: {
      auto jf = infer(f);
      auto jctx = JudgementContext::succedent_hole(jf.lhs, FormulaContext::hole(Polarity::Neg));
      OriginView v = find_origin(Conn::DiffL, jctx, b, f);
      const DerivPtr &h1 = v.premises[0], &h2 = v.premises[1];
      auto inner = u(RuleTag::RSumDiffL,
                     u(RuleTag::RDiffRSum,
                       rec(u(RuleTag::RSumDiffR, rec(h1, u(RuleTag::RDiffLSum, g), b->left())),
                           h2, b->right())));
      return apply_spine(v.spine, inner);
    }
    case Conn::DiffR: {
      auto jf = infer(f);
      auto jctx = JudgementContext::succedent_hole(jf.lhs, FormulaContext::hole(Polarity::Neg));
      OriginView v = find_origin(Conn::DiffR, jctx, b, f);
      const DerivPtr &h1 = v.premises[0], &h2 = v.premises[1];
      auto inner = u(RuleTag::RSumDiffR,
                     u(RuleTag::RDiffLSum,
                       rec(u(RuleTag::RSumDiffL, rec(h2, u(RuleTag::RDiffRSum, g), b->right())),
                           h1, b->left())));
      return apply_spine(v.spine, inner);
    }
  }
  throw std::logic_error("cut: bad connective");
}

}  // namespace

DerivPtr cut(const DerivPtr& f, const DerivPtr& g, CutStats* stats) {
  Judgement jf = infer(f);
  Judgement jg = infer(g);
  if (!equal(jf.rhs, jg.lhs)) throw CutFormulaMismatch(jf, jg);
  return cut_impl(f, g, jf.rhs, 1, stats);
}

}  // namespace lg
