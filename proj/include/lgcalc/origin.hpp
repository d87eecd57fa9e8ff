#pragma once

#include <optional>
#include <vector>

#include "lgcalc/context.hpp"
#include "lgcalc/derivation.hpp"

namespace lg {

// One rule application with one open premise. For binary rules the
// sibling premise is stored fixed; tags are never ax.
struct SpineFrame {
  RuleTag tag;
  DerivPtr fixed_left;   // set when the open premise is the right one
  DerivPtr fixed_right;  // set when the open premise is the left one
};

// Innermost-first composition of rule applications. Rebuilds the
// analysed derivation from the introducer and stays schema-valid when
// the hole formula inside the open premise is replaced by any formula.
struct RebuildSpine {
  std::vector<SpineFrame> frames;
};

// Folds the frames over d and validates the result with infer
// (SchemaMismatch propagates if d does not fit the innermost frame).
DerivPtr apply_spine(const RebuildSpine& spine, const DerivPtr& d);

// Decomposition of a derivation into the monotonicity rule (or axiom)
// that introduced a connective occurrence, the introducer's premises,
// and the spine of rules between conclusion and introducer.
struct OriginView {
  RuleTag introducer;              // ax or one of the six m-rules
  std::vector<DerivPtr> premises;  // empty for ax, two otherwise
  RebuildSpine spine;

  DerivPtr introducer_node(const FormulaPtr& hole_formula) const;
  DerivPtr reconstruct(const FormulaPtr& hole_formula) const;
};

// Side on which a formula with this main connective is immutable:
// - (succedent) for ⊗/⇚/⇛ and + (antecedent) for atoms, ⇒, ⇐, ⊕.
Polarity immutable_polarity(const FormulaPtr& f);

// Monotonicity introducer for the main connective (ax for atoms).
RuleTag introducer_for(const FormulaPtr& f);

// find' from the origin construction: given a well-polarised judgement
// context whose hole holds hole_formula and a derivation f of the
// plugged judgement, walk down f to the rule that introduced the
// occurrence. conn is the main connective (nullopt for atoms) and must
// agree with hole_formula; the context polarity must match
// immutable_polarity(hole_formula). Total on valid inputs.
OriginView find_origin(std::optional<Conn> conn, const JudgementContext& jctx,
                       const FormulaPtr& hole_formula, const DerivPtr& f);

}  // namespace lg
