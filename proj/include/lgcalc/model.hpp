#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lgcalc/cps.hpp"

namespace lg {

// Finite first-order model: named entities, unary predicates as entity
// sets, binary relations as pair sets.
struct Model {
  std::vector<std::string> entities;
  std::map<std::string, std::set<std::string>> unary_preds;
  std::map<std::string, std::set<std::pair<std::string, std::string>>> binary_rels;

  // all entities referenced by preds/rels must be listed
  void validate() const;
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnboundVariable : EvalError {
  UnboundVariable(const std::string& n) : EvalError("unbound variable: " + n) {}
};
struct UnknownConstant : EvalError {
  UnknownConstant(const std::string& n) : EvalError("unknown constant: " + n) {}
};

class SemValue;
using ValPtr = std::shared_ptr<const SemValue>;

// Values of the finite-model evaluator. Tables are exhaustive function
// graphs (keys sorted, one entry per domain point); closures and
// natives are lazily built function values, behaviourally equivalent
// to their tables and canonicalised on demand.
class SemValue {
public:
  enum class Kind : uint8_t { Truth, Entity, Pair, Table, Closure, Native };

  struct EnvNode {
    std::string name;
    ValPtr value;
    std::shared_ptr<const EnvNode> next;
  };
  using Env = std::shared_ptr<const EnvNode>;

  static ValPtr truth(bool b);
  static ValPtr entity(std::string name);
  static ValPtr pair(ValPtr l, ValPtr r);
  static ValPtr table(std::vector<std::pair<ValPtr, ValPtr>> entries);  // sorts the keys
  // entries already ascending by key (enumerator/canonicalizer output)
  static ValPtr table_presorted(std::vector<std::pair<ValPtr, ValPtr>> entries);
  static ValPtr closure(SemTermPtr lam_term, Env env);  // Lam or PairLam
  static ValPtr native(std::function<ValPtr(const ValPtr&)> fn);

  Kind kind() const { return kind_; }
  bool truth_value() const { return truth_; }
  const std::string& entity_name() const { return name_; }
  const ValPtr& left() const { return l_; }
  const ValPtr& right() const { return r_; }
  const std::vector<std::pair<ValPtr, ValPtr>>& entries() const { return table_; }
  const SemTermPtr& lam_term() const { return term_; }
  const Env& env() const { return env_; }
  const std::function<ValPtr(const ValPtr&)>& fn() const { return fn_; }

  bool is_function() const { return kind_ == Kind::Table || kind_ == Kind::Closure || kind_ == Kind::Native; }
  bool is_canonical() const;  // no closures/natives anywhere inside

private:
  SemValue() = default;
  Kind kind_ = Kind::Truth;
  bool truth_ = false;
  std::string name_;
  ValPtr l_, r_;
  std::vector<std::pair<ValPtr, ValPtr>> table_;
  SemTermPtr term_;
  Env env_;
  std::function<ValPtr(const ValPtr&)> fn_;
};

// Total order on canonical values (tables compared entrywise).
int cmp_val(const ValPtr& a, const ValPtr& b);

// Rebuild v as a canonical value of the same type as exemplar, which
// must itself be canonical. Functions are tabulated over the
// exemplar's key set.
ValPtr canonicalize(const ValPtr& v, const ValPtr& exemplar, const Model& m);

// Apply a function value. Table lookup canonicalises the argument
// against the table's keys first.
ValPtr apply_value(const ValPtr& fn, const ValPtr& arg, const Model& m);

// Environment-style evaluation. Constants are the logical postulates
// (forall, exists, and, implies), the model's predicates/relations and
// its entity names.
ValPtr eval_term(const SemTermPtr& t, const SemValue::Env& env, const Model& m);
inline ValPtr eval_term(const SemTermPtr& t, const Model& m) { return eval_term(t, nullptr, m); }

// ---- enumeration of finite types ---------------------------------------

// Number of values of t over m, or nullopt when it exceeds cap (or t
// contains an opaque base/meta). Base("Entity") denotes the entity set.
std::optional<size_t> ty_cardinality(const TyPtr& t, size_t n_entities, size_t cap);

// All values of t in canonical order. Throws EvalError on types that
// are not enumerable over a finite model.
std::vector<ValPtr> enum_values(const TyPtr& t, const Model& m);

inline TyPtr ty_entity() { return Ty::base("Entity"); }

// Checker signature of the evaluator's constant vocabulary over m.
ConstSignature model_signature(const Model& m);

// Standard atom interpretation of the example grammar: N as entity
// predicates, NP as entities, S as truth values. Unknown atoms map to
// opaque bases (not evaluable).
TyPtr standard_atom_interp(const std::string& atom);

// ---- lexicon and sentence denotations ----------------------------------

struct LexEntry {
  FormulaPtr syn_type;
  SemTermPtr term;
};

struct Lexicon {
  std::vector<std::pair<std::string, LexEntry>> entries;  // insertion order
  const LexEntry* find(const std::string& word) const;
};

struct WordNotInLexicon : EvalError {
  WordNotInLexicon(const std::string& w) : EvalError("word not in lexicon: " + w) {}
};
struct JudgementMismatch : EvalError {
  using EvalError::EvalError;
};

// w1 * (w2 * (... * wn)) |- goal
Judgement sentence_judgement(const Lexicon& lex, const std::vector<std::string>& words,
                             const FormulaPtr& goal);

// Evaluate translate_r(d) on the right-nested tuple of lexicon terms
// and the identity continuation; the result must be a truth value.
bool denote(const DerivPtr& d, const Lexicon& lex, const std::vector<std::string>& words,
            const FormulaPtr& goal, const Model& m);

}  // namespace lg
