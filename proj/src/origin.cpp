#include "lgcalc/origin.hpp"

#include <cassert>
#include <stdexcept>

namespace lg {

DerivPtr apply_spine(const RebuildSpine& spine, const DerivPtr& d) {
  DerivPtr cur = d;
  for (const SpineFrame& fr : spine.frames) {
    if (rule_arity(fr.tag) == 1) {
      cur = Derivation::unary(fr.tag, cur);
    } else if (fr.fixed_right) {
      cur = Derivation::binary(fr.tag, cur, fr.fixed_right);
    } else {
      cur = Derivation::binary(fr.tag, fr.fixed_left, cur);
    }
  }
  infer(cur);  // schema validation; throws SchemaMismatch on misuse
  return cur;
}

DerivPtr OriginView::introducer_node(const FormulaPtr& hole_formula) const {
  if (introducer == RuleTag::Ax) return Derivation::ax(hole_formula->atom_name());
  return Derivation::binary(introducer, premises[0], premises[1]);
}

DerivPtr OriginView::reconstruct(const FormulaPtr& hole_formula) const {
  return apply_spine(spine, introducer_node(hole_formula));
}

Polarity immutable_polarity(const FormulaPtr& f) {
  if (f->is_atom()) return Polarity::Pos;
  switch (f->conn()) {
    case Conn::Prod:
    case Conn::DiffL:
    case Conn::DiffR:
      return Polarity::Neg;
    default:
      return Polarity::Pos;
  }
}

RuleTag introducer_for(const FormulaPtr& f) {
  if (f->is_atom()) return RuleTag::Ax;
  switch (f->conn()) {
    case Conn::Prod: return RuleTag::MProd;
    case Conn::ImpR: return RuleTag::MImpR;
    case Conn::ImpL: return RuleTag::MImpL;
    case Conn::Sum: return RuleTag::MSum;
    case Conn::DiffL: return RuleTag::MDiffL;
    case Conn::DiffR: return RuleTag::MDiffR;
  }
  throw std::logic_error("introducer_for: bad formula");
}

namespace {

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

using Binding = std::array<FormulaPtr, 4>;

void bind_side(const SidePat& p, const FormulaPtr& f, Binding& b) {
  if (p.is_var()) {
    b[p.var] = f;
    return;
  }
  if (f->is_atom() || f->conn() != p.conn)
    throw InternalError("find_origin: conclusion shape disagrees with rule schema");
  b[p.l] = f->left();
  b[p.r] = f->right();
}

FormulaPtr inst(const SidePat& p, const Binding& b) {
  if (p.is_var()) return b[p.var];
  return Formula::make(p.conn, b[p.l], b[p.r]);
}

// Premise position of metavariable mv: premise index, side, and which
// pattern slot it fills (-1 bare, 0 left of node, 1 right of node).
struct MvLoc {
  int prem;
  int side;
  int slot;
};

MvLoc locate(const RuleSchema& s, int8_t mv) {
  for (int i = 0; i < s.arity; ++i) {
    for (int side = 0; side < 2; ++side) {
      const SidePat& p = s.prem[i][side];
      if (p.is_var()) {
        if (p.var == mv) return {i, side, -1};
      } else {
        if (p.l == mv) return {i, side, 0};
        if (p.r == mv) return {i, side, 1};
      }
    }
  }
  throw InternalError("find_origin: metavariable not found in premises");
}

OriginView descend(const JudgementContext& jctx, const FormulaPtr& hole, const DerivPtr& f) {
  const int side = jctx.hole_in_antecedent() ? 0 : 1;
  const FCtxPtr& ctx = jctx.ctx();

  if (f->tag() == RuleTag::Ax) {
    // The hole can only be the axiom's antecedent atom.
    if (side != 0 || ctx->kind() != FormulaContext::Kind::Hole || !hole->is_atom() ||
        hole->atom_name() != f->atom())
      throw InternalError("find_origin: ax reached with a non-atomic or nested hole");
    return OriginView{RuleTag::Ax, {}, {}};
  }

  const RuleSchema& s = schema(f->tag());
  const SidePat& pat = s.concl[side];

  if (!pat.is_var() && ctx->kind() == FormulaContext::Kind::Hole) {
    // The last rule takes the hole formula apart. Polarisation ensures
    // this only happens at the monotonicity rule that introduced it.
    if (hole->is_atom() || pat.conn != hole->conn() || f->tag() != introducer_for(hole))
      throw InternalError("find_origin: destructuring rule is not the introducer");
    return OriginView{f->tag(), {f->left(), f->right()}, {}};
  }

  // The hole sits strictly inside one metavariable region.
  int8_t mv;
  FCtxPtr rest;
  if (pat.is_var()) {
    mv = pat.var;
    rest = ctx;
  } else {
    if (ctx->conn() != pat.conn)
      throw InternalError("find_origin: context frame disagrees with conclusion shape");
    mv = ctx->kind() == FormulaContext::Kind::HoleLeft ? pat.l : pat.r;
    rest = ctx->inner();
  }

  Judgement j = plug_j(jctx, hole);
  Binding b;
  bind_side(s.concl[0], j.lhs, b);
  bind_side(s.concl[1], j.rhs, b);

  MvLoc loc = locate(s, mv);
  const SidePat& pp = s.prem[loc.prem][loc.side];
  FCtxPtr nctx;
  if (loc.slot == -1) {
    nctx = rest;
  } else if (loc.slot == 0) {
    nctx = FormulaContext::hole_left(pp.conn, rest, b[pp.r]);
  } else {
    nctx = FormulaContext::hole_right(pp.conn, b[pp.l], rest);
  }
  FormulaPtr other = inst(s.prem[loc.prem][1 - loc.side], b);
  JudgementContext njctx = loc.side == 0 ? JudgementContext::antecedent_hole(nctx, other)
                                         : JudgementContext::succedent_hole(other, nctx);

  const DerivPtr& child = loc.prem == 0 ? f->left() : f->right();
  OriginView v = descend(njctx, hole, child);

  SpineFrame frame{f->tag(), nullptr, nullptr};
  if (s.arity == 2) {
    if (loc.prem == 0)
      frame.fixed_right = f->right();
    else
      frame.fixed_left = f->left();
  }
  v.spine.frames.push_back(frame);
  return v;
}

}  // namespace

OriginView find_origin(std::optional<Conn> conn, const JudgementContext& jctx,
                       const FormulaPtr& hole_formula, const DerivPtr& f) {
  if (hole_formula->is_atom() ? conn.has_value() : (!conn || *conn != hole_formula->conn()))
    throw InternalError("find_origin: conn does not match the hole formula");
  if (jctx.hole_polarity() != immutable_polarity(hole_formula))
    throw InternalError("find_origin: context polarity is not the immutable side");

  OriginView v = descend(jctx, hole_formula, f);
#ifndef NDEBUG
  // Runtime analogue of the reconstruction equality proof.
  assert(equal(v.reconstruct(hole_formula), f));
#endif
  return v;
}

}  // namespace lg
