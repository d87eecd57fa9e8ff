#pragma once

#include <memory>
#include <stdexcept>

#include "lgcalc/formula.hpp"

namespace lg {

// + : the hole ends up as the whole antecedent once the surrounding
//     context is peeled away by residuation; - : the whole succedent.
enum class Polarity : uint8_t { Pos, Neg };

inline const char* polarity_name(Polarity p) { return p == Polarity::Pos ? "+" : "-"; }

class FormulaContext;
using FCtxPtr = std::shared_ptr<const FormulaContext>;

// Well-polarised one-hole formula context. The constructor table is
// closed: each (hole side, connective) pair fixes the inner and outer
// polarities, and illegal combinations are rejected at construction.
class FormulaContext {
public:
  enum class Kind : uint8_t { Hole, HoleLeft, HoleRight };

  static FCtxPtr hole(Polarity p);
  // hole in the left argument: inner[..] CONN fixed
  static FCtxPtr hole_left(Conn c, FCtxPtr inner, FormulaPtr fixed_right);
  // hole in the right argument: fixed CONN inner[..]
  static FCtxPtr hole_right(Conn c, FormulaPtr fixed_left, FCtxPtr inner);

  Kind kind() const { return kind_; }
  Conn conn() const { return conn_; }
  const FCtxPtr& inner() const { return inner_; }
  const FormulaPtr& fixed() const { return fixed_; }
  Polarity hole_polarity() const { return hole_pol_; }
  Polarity outer_polarity() const { return outer_pol_; }

  // Required (inner outer-polarity, resulting outer-polarity) for a
  // constructor, per the well-polarisation table.
  static std::pair<Polarity, Polarity> polarity_rule(Kind k, Conn c);

private:
  FormulaContext() = default;
  Kind kind_ = Kind::Hole;
  Conn conn_ = Conn::Prod;
  FCtxPtr inner_;
  FormulaPtr fixed_;
  Polarity hole_pol_ = Polarity::Pos;
  Polarity outer_pol_ = Polarity::Pos;
};

struct BadContext : std::logic_error {
  using std::logic_error::logic_error;
};

// A judgement with one hole on a designated side. AntecedentHole
// requires a +-outer context, SuccedentHole a --outer one.
class JudgementContext {
public:
  static JudgementContext antecedent_hole(FCtxPtr ctx, FormulaPtr succedent);
  static JudgementContext succedent_hole(FormulaPtr antecedent, FCtxPtr ctx);

  bool hole_in_antecedent() const { return in_antecedent_; }
  const FCtxPtr& ctx() const { return ctx_; }
  const FormulaPtr& fixed_side() const { return fixed_; }
  Polarity hole_polarity() const { return ctx_->hole_polarity(); }

private:
  JudgementContext() = default;
  bool in_antecedent_ = true;
  FCtxPtr ctx_;
  FormulaPtr fixed_;
};

FormulaPtr plug(const FCtxPtr& ctx, const FormulaPtr& a);
Judgement plug_j(const JudgementContext& jctx, const FormulaPtr& a);

}  // namespace lg
