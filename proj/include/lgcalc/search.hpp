#pragma once

#include <optional>
#include <vector>

#include "lgcalc/derivation.hpp"

namespace lg {

struct SearchOptions {
  std::optional<size_t> max_proofs;  // truncate output after this many
  std::optional<size_t> max_depth;   // backward steps per branch
};

// Enumerate all loop-free cut-free derivations of j by backward rule
// application. A candidate is kept iff no judgement repeats along any
// root-to-leaf path of its backward construction; output order is
// deterministic depth-first with rules tried in kRuleOrder. An empty
// result means "not derivable loop-free".
std::vector<DerivPtr> enumerate_proofs(const Judgement& j, const SearchOptions& opts = {});

}  // namespace lg
