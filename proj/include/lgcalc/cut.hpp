#pragma once

#include "lgcalc/derivation.hpp"

namespace lg {

struct CutFormulaMismatch : std::runtime_error {
  Judgement left, right;
  CutFormulaMismatch(Judgement f, Judgement g)
      : std::runtime_error("cut: succedent of f differs from antecedent of g"),
        left(std::move(f)),
        right(std::move(g)) {}
};

struct CutStats {
  size_t calls = 0;
  size_t max_depth = 0;  // nesting depth of cut invocations
};

// Admissible cut: from f : A |- B and g : B |- C build a cut-free
// derivation of A |- C. Dispatches on the main connective of B and
// rewrites through the origin view of the side where B is immutable;
// each recursive cut acts on an immediate subformula of B. Stack depth
// grows with 2*size(B) plus the spine lengths of the analysed
// derivations, which is only a concern for adversarially deep inputs.
DerivPtr cut(const DerivPtr& f, const DerivPtr& g, CutStats* stats = nullptr);

}  // namespace lg
