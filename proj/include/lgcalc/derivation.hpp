#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgcalc/formula.hpp"

namespace lg {

// The 19 inference rules of LG in the residuation-monotonicity
// axiomatisation. Enum order is the backward proof-search order.
enum class RuleTag : uint8_t {
  Ax,          // ax
  RImpRProd,   // r=>*  : B |- A=>C  ->  A*B |- C
  RProdImpR,   // r*=>  : A*B |- C   ->  B |- A=>C
  RImpLProd,   // r<=*  : A |- C<=B  ->  A*B |- C
  RProdImpL,   // r*<=  : A*B |- C   ->  A |- C<=B
  MProd,       // m*    : A|-B, C|-D ->  A*C |- B*D
  MImpR,       // m=>   : A|-B, C|-D ->  B=>C |- A=>D
  MImpL,       // m<=   : A|-B, C|-D ->  A<=D |- B<=C
  RDiffRSum,   // r>-+  : B>-C |- A  ->  C |- B+A
  RSumDiffR,   // r+>-  : C |- B+A   ->  B>-C |- A
  RSumDiffL,   // r+-<  : C |- B+A   ->  C-<A |- B
  RDiffLSum,   // r-<+  : C-<A |- B  ->  C |- B+A
  MSum,        // m+    : A|-B, C|-D ->  A+C |- B+D
  MDiffR,      // m>-   : C|-D, A|-B ->  D>-A |- C>-B
  MDiffL,      // m-<   : A|-B, C|-D ->  A-<D |- B-<C
  DDiffRImpL,  // d>-<= : A*B |- C+D ->  C>-A |- D<=B
  DDiffRImpR,  // d>-=> : A*B |- C+D ->  C>-B |- A=>D
  DDiffLImpR,  // d-<=> : A*B |- C+D ->  B-<D |- A=>C
  DDiffLImpL,  // d-<<= : A*B |- C+D ->  A-<D |- C<=B
};

constexpr int kRuleCount = 19;
constexpr std::array<RuleTag, kRuleCount> kRuleOrder = {
    RuleTag::Ax,         RuleTag::RImpRProd,  RuleTag::RProdImpR, RuleTag::RImpLProd,
    RuleTag::RProdImpL,  RuleTag::MProd,      RuleTag::MImpR,     RuleTag::MImpL,
    RuleTag::RDiffRSum,  RuleTag::RSumDiffR,  RuleTag::RSumDiffL, RuleTag::RDiffLSum,
    RuleTag::MSum,       RuleTag::MDiffR,     RuleTag::MDiffL,    RuleTag::DDiffRImpL,
    RuleTag::DDiffRImpR, RuleTag::DDiffLImpR, RuleTag::DDiffLImpL};

int rule_arity(RuleTag t);                 // 0, 1 or 2
const char* rule_name(RuleTag t);          // ASCII alias, e.g. "r=>*"
const char* rule_name_unicode(RuleTag t);  // e.g. "r⇒⊗"

class Derivation;
using DerivPtr = std::shared_ptr<const Derivation>;

// Proof tree node. Only the rule tag and axiom atoms are stored; the
// judgement at each node is recomputed by infer, never cached.
class Derivation {
public:
  static DerivPtr ax(std::string atom);
  static DerivPtr unary(RuleTag t, DerivPtr child);
  static DerivPtr binary(RuleTag t, DerivPtr l, DerivPtr r);

  RuleTag tag() const { return tag_; }
  const std::string& atom() const { return atom_; }
  const DerivPtr& left() const { return left_; }
  const DerivPtr& right() const { return right_; }

  uint32_t size() const { return size_; }
  size_t hash() const { return hash_; }

private:
  Derivation() = default;
  RuleTag tag_ = RuleTag::Ax;
  std::string atom_;
  DerivPtr left_, right_;
  uint32_t size_ = 1;
  size_t hash_ = 0;
};

bool equal(const DerivPtr& a, const DerivPtr& b);

// Raised by infer when a premise judgement does not fit the rule schema.
struct SchemaMismatch : std::runtime_error {
  std::vector<int> path;  // child indices from the root to the offending node
  RuleTag tag;
  Judgement premise;
  SchemaMismatch(std::vector<int> p, RuleTag t, Judgement j);
};

// Bottom-up computation of the unique conclusion of a derivation.
Judgement infer(const DerivPtr& d);

// Generalised axiom: the identity derivation A |- A, by structural
// recursion replacing each connective with its monotonicity rule.
DerivPtr ax_general(const FormulaPtr& a);

// One backward step: match j against the conclusion schema of t and
// return the premise judgements, or nullopt when the shapes disagree.
// Never matches Ax; handle axioms separately.
std::optional<std::vector<Judgement>> backward(RuleTag t, const Judgement& j);

// Schema metadata used by infer/backward/find_origin. Every side of
// every rule schema is either a bare metavariable or one connective
// over two metavariables, so a two-level pattern suffices.
struct SidePat {
  int8_t var = -1;  // >= 0: bare metavariable id (0..3 for A..D)
  Conn conn = Conn::Prod;
  int8_t l = -1, r = -1;  // metavariable ids under the connective
  bool is_var() const { return var >= 0; }
};

struct RuleSchema {
  RuleTag tag;
  int arity;
  SidePat concl[2];    // [0]=lhs, [1]=rhs
  SidePat prem[2][2];  // prem[i][side]
};

const RuleSchema& schema(RuleTag t);

}  // namespace lg
