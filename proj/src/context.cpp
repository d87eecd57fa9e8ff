#include "lgcalc/context.hpp"

namespace lg {

namespace {
constexpr Polarity P = Polarity::Pos;
constexpr Polarity N = Polarity::Neg;
}  // namespace

std::pair<Polarity, Polarity> FormulaContext::polarity_rule(Kind k, Conn c) {
  // (required inner outer-polarity, resulting outer-polarity)
  if (k == Kind::HoleRight) {
    switch (c) {
      case Conn::Prod: return {P, P};
      case Conn::ImpR: return {N, N};
      case Conn::ImpL: return {P, N};
      case Conn::Sum: return {N, N};
      case Conn::DiffL: return {N, P};
      case Conn::DiffR: return {P, P};
    }
  } else {
    switch (c) {
      case Conn::Prod: return {P, P};
      case Conn::ImpR: return {P, N};
      case Conn::ImpL: return {N, N};
      case Conn::Sum: return {N, N};
      case Conn::DiffL: return {P, P};
      case Conn::DiffR: return {N, P};
    }
  }
  throw BadContext("polarity_rule: bad constructor");
}

FCtxPtr FormulaContext::hole(Polarity p) {
  auto c = std::shared_ptr<FormulaContext>(new FormulaContext());
  c->kind_ = Kind::Hole;
  c->hole_pol_ = p;
  c->outer_pol_ = p;
  return c;
}

FCtxPtr FormulaContext::hole_left(Conn cn, FCtxPtr inner, FormulaPtr fixed_right) {
  auto [need, out] = polarity_rule(Kind::HoleLeft, cn);
  if (inner->outer_polarity() != need) throw BadContext("hole_left: inner polarity violates the table");
  auto c = std::shared_ptr<FormulaContext>(new FormulaContext());
  c->kind_ = Kind::HoleLeft;
  c->conn_ = cn;
  c->hole_pol_ = inner->hole_polarity();
  c->outer_pol_ = out;
  c->inner_ = std::move(inner);
  c->fixed_ = std::move(fixed_right);
  return c;
}

FCtxPtr FormulaContext::hole_right(Conn cn, FormulaPtr fixed_left, FCtxPtr inner) {
  auto [need, out] = polarity_rule(Kind::HoleRight, cn);
  if (inner->outer_polarity() != need) throw BadContext("hole_right: inner polarity violates the table");
  auto c = std::shared_ptr<FormulaContext>(new FormulaContext());
  c->kind_ = Kind::HoleRight;
  c->conn_ = cn;
  c->hole_pol_ = inner->hole_polarity();
  c->outer_pol_ = out;
  c->inner_ = std::move(inner);
  c->fixed_ = std::move(fixed_left);
  return c;
}

JudgementContext JudgementContext::antecedent_hole(FCtxPtr ctx, FormulaPtr succedent) {
  if (ctx->outer_polarity() != Polarity::Pos)
    throw BadContext("antecedent_hole: context must have outer polarity +");
  JudgementContext j;
  j.in_antecedent_ = true;
  j.ctx_ = std::move(ctx);
  j.fixed_ = std::move(succedent);
  return j;
}

JudgementContext JudgementContext::succedent_hole(FormulaPtr antecedent, FCtxPtr ctx) {
  if (ctx->outer_polarity() != Polarity::Neg)
    throw BadContext("succedent_hole: context must have outer polarity -");
  JudgementContext j;
  j.in_antecedent_ = false;
  j.ctx_ = std::move(ctx);
  j.fixed_ = std::move(antecedent);
  return j;
}

FormulaPtr plug(const FCtxPtr& ctx, const FormulaPtr& a) {
  switch (ctx->kind()) {
    case FormulaContext::Kind::Hole:
      return a;
    case FormulaContext::Kind::HoleLeft:
      return Formula::make(ctx->conn(), plug(ctx->inner(), a), ctx->fixed());
    case FormulaContext::Kind::HoleRight:
      return Formula::make(ctx->conn(), ctx->fixed(), plug(ctx->inner(), a));
  }
  throw BadContext("plug: bad context");
}

Judgement plug_j(const JudgementContext& jctx, const FormulaPtr& a) {
  if (jctx.hole_in_antecedent()) return Judgement{plug(jctx.ctx(), a), jctx.fixed_side()};
  return Judgement{jctx.fixed_side(), plug(jctx.ctx(), a)};
}

}  // namespace lg
