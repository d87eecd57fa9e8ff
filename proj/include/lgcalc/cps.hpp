#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lgcalc/derivation.hpp"

namespace lg {

class SemType;
using SemTypePtr = std::shared_ptr<const SemType>;

// Image of a formula under the call-by-value CPS translation on types.
// Neg t stands for functions from t into the abstract return type R;
// double negations are never collapsed.
class SemType {
public:
  enum class Kind : uint8_t { AtomDen, Pair, Neg };

  static SemTypePtr atom_den(std::string atom);
  static SemTypePtr pair(SemTypePtr l, SemTypePtr r);
  static SemTypePtr neg(SemTypePtr inner);

  Kind kind() const { return kind_; }
  const std::string& atom() const { return atom_; }
  const SemTypePtr& left() const { return l_; }
  const SemTypePtr& right() const { return r_; }

private:
  SemType() = default;
  Kind kind_ = Kind::AtomDen;
  std::string atom_;
  SemTypePtr l_, r_;
};

bool equal(const SemTypePtr& a, const SemTypePtr& b);

// The seven type clauses of the translation.
SemTypePtr translate_type(const FormulaPtr& f);

class SemTerm;
using SemTermPtr = std::shared_ptr<const SemTerm>;

// Lambda terms with pairs and pattern-matching pair lambdas; the
// target language of the derivation translation.
class SemTerm {
public:
  enum class Kind : uint8_t { Var, Lam, PairLam, App, MkPair, Const };

  static SemTermPtr var(std::string name);
  static SemTermPtr lam(std::string name, SemTermPtr body);
  static SemTermPtr pair_lam(std::string n1, std::string n2, SemTermPtr body);
  static SemTermPtr app(SemTermPtr fun, SemTermPtr arg);
  static SemTermPtr mk_pair(SemTermPtr l, SemTermPtr r);
  static SemTermPtr constant(std::string name);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::string& name2() const { return name2_; }
  const SemTermPtr& a() const { return a_; }
  const SemTermPtr& b() const { return b_; }

private:
  SemTerm() = default;
  Kind kind_ = Kind::Var;
  std::string name_, name2_;
  SemTermPtr a_, b_;
};

// Mutually recursive term translations. For d : A |- B,
//   translate_l(d) inhabits  ¬⌈B⌉ -> ¬⌈A⌉
//   translate_r(d) inhabits  ⌈A⌉ -> ¬¬⌈B⌉
// with -> realised as Lam. Both are closed and free of constants.
SemTermPtr translate_l(const DerivPtr& d);
SemTermPtr translate_r(const DerivPtr& d);

bool has_constant(const SemTermPtr& t);

// ---- simply typed checking --------------------------------------------

class Ty;
using TyPtr = std::shared_ptr<const Ty>;

// Checker-side types. R is the distinguished return type; Neg t from
// SemType embeds as Arrow(t, R). Base covers entity and opaque atom
// denotations.
class Ty {
public:
  enum class Kind : uint8_t { R, Base, Prod, Arrow, Meta };

  static TyPtr r();
  static TyPtr base(std::string name);
  static TyPtr prod(TyPtr l, TyPtr r);
  static TyPtr arrow(TyPtr dom, TyPtr cod);
  static TyPtr meta(int id);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int meta_id() const { return meta_; }
  const TyPtr& left() const { return l_; }
  const TyPtr& right() const { return r_; }

private:
  Ty() = default;
  Kind kind_ = Kind::R;
  std::string name_;
  int meta_ = -1;
  TyPtr l_, r_;
};

bool equal(const TyPtr& a, const TyPtr& b);
std::string show_ty(const TyPtr& t);

using AtomInterp = std::function<TyPtr(const std::string&)>;

// Turn a SemType into a checker type, interpreting atoms through
// interp (atoms map to opaque bases when interp is null).
TyPtr embed_sem_type(const SemTypePtr& t, const AtomInterp& interp = nullptr);

// ⌈A⌉ -> ¬¬⌈B⌉ and ¬⌈B⌉ -> ¬⌈A⌉ as checker types for a judgement.
TyPtr signature_r(const Judgement& j, const AtomInterp& interp = nullptr);
TyPtr signature_l(const Judgement& j, const AtomInterp& interp = nullptr);

struct TypeError {
  std::vector<int> path;  // subterm path: 0 = a()/body, 1 = b()
  std::string message;
};

using ConstSignature = std::map<std::string, TyPtr>;

// Standard simply-typed checking with unification; nullopt on success,
// otherwise the first ill-typed subterm.
std::optional<TypeError> type_check(const SemTermPtr& t, const TyPtr& expected,
                                    const ConstSignature& constants = {});

}  // namespace lg
