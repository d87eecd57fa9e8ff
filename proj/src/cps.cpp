#include "lgcalc/cps.hpp"

#include <sstream>

namespace lg {

SemTypePtr SemType::atom_den(std::string atom) {
  auto t = std::shared_ptr<SemType>(new SemType());
  t->kind_ = Kind::AtomDen;
  t->atom_ = std::move(atom);
  return t;
}

SemTypePtr SemType::pair(SemTypePtr l, SemTypePtr r) {
  auto t = std::shared_ptr<SemType>(new SemType());
  t->kind_ = Kind::Pair;
  t->l_ = std::move(l);
  t->r_ = std::move(r);
  return t;
}

SemTypePtr SemType::neg(SemTypePtr inner) {
  auto t = std::shared_ptr<SemType>(new SemType());
  t->kind_ = Kind::Neg;
  t->l_ = std::move(inner);
  return t;
}

bool equal(const SemTypePtr& a, const SemTypePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case SemType::Kind::AtomDen: return a->atom() == b->atom();
    case SemType::Kind::Neg: return equal(a->left(), b->left());
    case SemType::Kind::Pair: return equal(a->left(), b->left()) && equal(a->right(), b->right());
  }
  return false;
}

SemTypePtr translate_type(const FormulaPtr& f) {
  if (f->is_atom()) return SemType::atom_den(f->atom_name());
  SemTypePtr l = translate_type(f->left());
  SemTypePtr r = translate_type(f->right());
  switch (f->conn()) {
    case Conn::Prod:  // ⌈A⊗B⌉ = ⌈A⌉ × ⌈B⌉
      return SemType::pair(l, r);
    case Conn::ImpR:  // ⌈A⇒B⌉ = ¬(⌈A⌉ × ¬⌈B⌉)
      return SemType::neg(SemType::pair(l, SemType::neg(r)));
    case Conn::ImpL:  // ⌈B⇐A⌉ = ¬(¬⌈B⌉ × ⌈A⌉)
      return SemType::neg(SemType::pair(SemType::neg(l), r));
    case Conn::Sum:  // ⌈B⊕A⌉ = ¬(¬⌈B⌉ × ¬⌈A⌉)
      return SemType::neg(SemType::pair(SemType::neg(l), SemType::neg(r)));
    case Conn::DiffL:  // ⌈B⇚A⌉ = ⌈B⌉ × ¬⌈A⌉
      return SemType::pair(l, SemType::neg(r));
    case Conn::DiffR:  // ⌈A⇛B⌉ = ¬⌈A⌉ × ⌈B⌉
      return SemType::pair(SemType::neg(l), r);
  }
  throw std::logic_error("translate_type: bad connective");
}

SemTermPtr SemTerm::var(std::string name) {
  auto t = std::shared_ptr<SemTerm>(new SemTerm());
  t->kind_ = Kind::Var;
  t->name_ = std::move(name);
  return t;
}

SemTermPtr SemTerm::lam(std::string name, SemTermPtr body) {
  auto t = std::shared_ptr<SemTerm>(new SemTerm());
  t->kind_ = Kind::Lam;
  t->name_ = std::move(name);
  t->a_ = std::move(body);
  return t;
}

SemTermPtr SemTerm::pair_lam(std::string n1, std::string n2, SemTermPtr body) {
  auto t = std::shared_ptr<SemTerm>(new SemTerm());
  t->kind_ = Kind::PairLam;
  t->name_ = std::move(n1);
  t->name2_ = std::move(n2);
  t->a_ = std::move(body);
  return t;
}

SemTermPtr SemTerm::app(SemTermPtr fun, SemTermPtr arg) {
  auto t = std::shared_ptr<SemTerm>(new SemTerm());
  t->kind_ = Kind::App;
  t->a_ = std::move(fun);
  t->b_ = std::move(arg);
  return t;
}

SemTermPtr SemTerm::mk_pair(SemTermPtr l, SemTermPtr r) {
  auto t = std::shared_ptr<SemTerm>(new SemTerm());
  t->kind_ = Kind::MkPair;
  t->a_ = std::move(l);
  t->b_ = std::move(r);
  return t;
}

SemTermPtr SemTerm::constant(std::string name) {
  auto t = std::shared_ptr<SemTerm>(new SemTerm());
  t->kind_ = Kind::Const;
  t->name_ = std::move(name);
  return t;
}

bool has_constant(const SemTermPtr& t) {
  switch (t->kind()) {
    case SemTerm::Kind::Const: return true;
    case SemTerm::Kind::Var: return false;
    case SemTerm::Kind::Lam:
    case SemTerm::Kind::PairLam: return has_constant(t->a());
    default: return has_constant(t->a()) || has_constant(t->b());
  }
}

namespace {

// Builds both term translations with a shared fresh-name supply.
struct Translator {
  int next = 0;

  std::string fresh(const char* stem) { return std::string(stem) + std::to_string(next++); }

  static SemTermPtr lam(std::string x, SemTermPtr b) { return SemTerm::lam(std::move(x), std::move(b)); }
  static SemTermPtr plam(std::string x, std::string y, SemTermPtr b) {
    return SemTerm::pair_lam(std::move(x), std::move(y), std::move(b));
  }
  static SemTermPtr app(SemTermPtr f, SemTermPtr a) { return SemTerm::app(std::move(f), std::move(a)); }
  static SemTermPtr app2(SemTermPtr f, SemTermPtr a, SemTermPtr b) {
    return app(app(std::move(f), std::move(a)), std::move(b));
  }
  static SemTermPtr pr(SemTermPtr a, SemTermPtr b) { return SemTerm::mk_pair(std::move(a), std::move(b)); }
  static SemTermPtr vr(const std::string& x) { return SemTerm::var(x); }

  // ⌈_⌉ᴿ : LG A |- B  ~>  ⌈A⌉ -> ¬¬⌈B⌉
  SemTermPtr right(const DerivPtr& d) {
    switch (d->tag()) {
      case RuleTag::Ax: {
        auto x = fresh("x"), k = fresh("k");
        return lam(x, lam(k, app(vr(k), vr(x))));
      }
      case RuleTag::RImpRProd: {
        auto f = right(d->left());
        auto a = fresh("a"), b = fresh("b"), k = fresh("k"), w = fresh("w");
        return plam(a, b, lam(k, app2(f, vr(b), lam(w, app(vr(w), pr(vr(a), vr(k)))))));
      }
      case RuleTag::RProdImpR: {
        auto f = right(d->left());
        auto b = fresh("b"), k = fresh("k"), a = fresh("a"), c = fresh("c");
        return lam(b, lam(k, app(vr(k), plam(a, c, app2(f, pr(vr(a), vr(b)), vr(c))))));
      }
      case RuleTag::RImpLProd: {
        auto f = right(d->left());
        auto a = fresh("a"), b = fresh("b"), k = fresh("k"), w = fresh("w");
        return plam(a, b, lam(k, app2(f, vr(a), lam(w, app(vr(w), pr(vr(k), vr(b)))))));
      }
      case RuleTag::RProdImpL: {
        auto f = right(d->left());
        auto a = fresh("a"), k = fresh("k"), c = fresh("c"), b = fresh("b");
        return lam(a, lam(k, app(vr(k), plam(c, b, app2(f, pr(vr(a), vr(b)), vr(c))))));
      }
      case RuleTag::MProd: {
        auto f = right(d->left()), g = right(d->right());
        auto a = fresh("a"), c = fresh("c"), k = fresh("k"), b = fresh("b"), e = fresh("d");
        return plam(a, c,
                    lam(k, app2(f, vr(a),
                                lam(b, app2(g, vr(c), lam(e, app(vr(k), pr(vr(b), vr(e)))))))));
      }
      case RuleTag::MImpR: {
        auto f = right(d->left()), g = translate_l_with(d->right());
        auto h = fresh("h"), k = fresh("k"), a = fresh("a"), e = fresh("d"), b = fresh("b");
        return lam(h, lam(k, app(vr(k),
                                 plam(a, e,
                                      app2(f, vr(a),
                                           lam(b, app(vr(h), pr(vr(b), app(g, vr(e))))))))));
      }
      case RuleTag::MImpL: {
        auto f = translate_l_with(d->left()), g = right(d->right());
        auto h = fresh("h"), k = fresh("k"), b = fresh("b"), c = fresh("c"), e = fresh("d");
        return lam(h, lam(k, app(vr(k),
                                 plam(b, c,
                                      app2(g, vr(c),
                                           lam(e, app(vr(h), pr(app(f, vr(b)), vr(e)))))))));
      }
      case RuleTag::RDiffRSum: {
        auto f = right(d->left());
        auto c = fresh("c"), k = fresh("k"), b = fresh("b"), a = fresh("a");
        return lam(c, lam(k, app(vr(k), plam(b, a, app2(f, pr(vr(b), vr(c)), vr(a))))));
      }
      case RuleTag::RSumDiffR: {
        auto f = right(d->left());
        auto b = fresh("b"), c = fresh("c"), k = fresh("k"), w = fresh("w");
        return plam(b, c, lam(k, app2(f, vr(c), lam(w, app(vr(w), pr(vr(b), vr(k)))))));
      }
      case RuleTag::RSumDiffL: {
        auto f = right(d->left());
        auto c = fresh("c"), a = fresh("a"), k = fresh("k"), w = fresh("w");
        return plam(c, a, lam(k, app2(f, vr(c), lam(w, app(vr(w), pr(vr(k), vr(a)))))));
      }
      case RuleTag::RDiffLSum: {
        auto f = right(d->left());
        auto c = fresh("c"), k = fresh("k"), b = fresh("b"), a = fresh("a");
        return lam(c, lam(k, app(vr(k), plam(b, a, app2(f, pr(vr(c), vr(a)), vr(b))))));
      }
      case RuleTag::MSum: {
        auto f = translate_l_with(d->left()), g = translate_l_with(d->right());
        auto h = fresh("h"), k = fresh("k"), b = fresh("b"), e = fresh("d");
        return lam(h, lam(k, app(vr(k),
                                 plam(b, e, app(vr(h), pr(app(f, vr(b)), app(g, vr(e))))))));
      }
      case RuleTag::MDiffR: {
        auto f = right(d->left()), g = right(d->right());
        auto e = fresh("d"), a = fresh("a"), k = fresh("k"), b = fresh("b"), c = fresh("c");
        return plam(e, a,
                    lam(k, app2(g, vr(a),
                                lam(b, app(vr(k), pr(lam(c, app2(f, vr(c), vr(e))), vr(b)))))));
      }
      case RuleTag::MDiffL: {
        auto f = right(d->left()), g = right(d->right());
        auto a = fresh("a"), e = fresh("d"), k = fresh("k"), b = fresh("b"), c = fresh("c");
        return plam(a, e,
                    lam(k, app2(f, vr(a),
                                lam(b, app(vr(k), pr(vr(b), lam(c, app2(g, vr(c), vr(e)))))))));
      }
      case RuleTag::DDiffRImpL: {
        auto f = right(d->left());
        auto c = fresh("c"), a = fresh("a"), k = fresh("k"), e = fresh("d"), b = fresh("b"), w = fresh("w");
        return plam(c, a,
                    lam(k, app(vr(k), plam(e, b,
                                           app2(f, pr(vr(a), vr(b)),
                                                lam(w, app(vr(w), pr(vr(c), vr(e)))))))));
      }
      case RuleTag::DDiffRImpR: {
        auto f = right(d->left());
        auto c = fresh("c"), b = fresh("b"), k = fresh("k"), a = fresh("a"), e = fresh("d"), w = fresh("w");
        return plam(c, b,
                    lam(k, app(vr(k), plam(a, e,
                                           app2(f, pr(vr(a), vr(b)),
                                                lam(w, app(vr(w), pr(vr(c), vr(e)))))))));
      }
      case RuleTag::DDiffLImpR: {
        auto f = right(d->left());
        auto b = fresh("b"), e = fresh("d"), k = fresh("k"), a = fresh("a"), c = fresh("c"), w = fresh("w");
        return plam(b, e,
                    lam(k, app(vr(k), plam(a, c,
                                           app2(f, pr(vr(a), vr(b)),
                                                lam(w, app(vr(w), pr(vr(c), vr(e)))))))));
      }
      case RuleTag::DDiffLImpL: {
        auto f = right(d->left());
        auto a = fresh("a"), e = fresh("d"), k = fresh("k"), c = fresh("c"), b = fresh("b"), w = fresh("w");
        return plam(a, e,
                    lam(k, app(vr(k), plam(c, b,
                                           app2(f, pr(vr(a), vr(b)),
                                                lam(w, app(vr(w), pr(vr(c), vr(e)))))))));
      }
    }
    throw std::logic_error("translate_r: bad tag");
  }

  // ⌈_⌉ᴸ : LG A |- B  ~>  ¬⌈B⌉ -> ¬⌈A⌉
  SemTermPtr left(const DerivPtr& d) {
    switch (d->tag()) {
      case RuleTag::Ax: {
        auto k = fresh("k"), x = fresh("x");
        return lam(k, lam(x, app(vr(k), vr(x))));
      }
      case RuleTag::RImpRProd: {
        auto f = left(d->left());
        auto k = fresh("k"), a = fresh("a"), b = fresh("b"), w = fresh("w");
        return lam(k, plam(a, b, app2(f, lam(w, app(vr(w), pr(vr(a), vr(k)))), vr(b))));
      }
      case RuleTag::RProdImpR: {
        auto f = left(d->left());
        auto k = fresh("k"), b = fresh("b"), a = fresh("a"), c = fresh("c");
        return lam(k, lam(b, app(vr(k), plam(a, c, app2(f, vr(c), pr(vr(a), vr(b)))))));
      }
      case RuleTag::RImpLProd: {
        auto f = left(d->left());
        auto k = fresh("k"), a = fresh("a"), b = fresh("b"), w = fresh("w");
        return lam(k, plam(a, b, app2(f, lam(w, app(vr(w), pr(vr(k), vr(b)))), vr(a))));
      }
      case RuleTag::RProdImpL: {
        auto f = left(d->left());
        auto k = fresh("k"), a = fresh("a"), c = fresh("c"), b = fresh("b");
        return lam(k, lam(a, app(vr(k), plam(c, b, app2(f, vr(c), pr(vr(a), vr(b)))))));
      }
      case RuleTag::MProd: {
        auto f = translate_r_with(d->left()), g = translate_r_with(d->right());
        auto k = fresh("k"), a = fresh("a"), c = fresh("c"), b = fresh("b"), e = fresh("d");
        return lam(k, plam(a, c,
                           app2(f, vr(a),
                                lam(b, app2(g, vr(c), lam(e, app(vr(k), pr(vr(b), vr(e)))))))));
      }
      case RuleTag::MImpR: {
        auto f = translate_r_with(d->left()), g = left(d->right());
        auto k = fresh("k"), h = fresh("h"), a = fresh("a"), e = fresh("d"), b = fresh("b");
        return lam(k, lam(h, app(vr(k),
                                 plam(a, e,
                                      app2(f, vr(a),
                                           lam(b, app(vr(h), pr(vr(b), app(g, vr(e))))))))));
      }
      case RuleTag::MImpL: {
        auto f = left(d->left()), g = translate_r_with(d->right());
        auto k = fresh("k"), h = fresh("h"), b = fresh("b"), c = fresh("c"), e = fresh("d");
        return lam(k, lam(h, app(vr(k),
                                 plam(b, c,
                                      app2(g, vr(c),
                                           lam(e, app(vr(h), pr(app(f, vr(b)), vr(e)))))))));
      }
      case RuleTag::RDiffRSum: {
        auto f = left(d->left());
        auto k = fresh("k"), c = fresh("c"), b = fresh("b"), a = fresh("a");
        return lam(k, lam(c, app(vr(k), plam(b, a, app2(f, vr(a), pr(vr(b), vr(c)))))));
      }
      case RuleTag::RSumDiffR: {
        auto f = left(d->left());
        auto k = fresh("k"), b = fresh("b"), c = fresh("c"), w = fresh("w");
        return lam(k, plam(b, c, app2(f, lam(w, app(vr(w), pr(vr(b), vr(k)))), vr(c))));
      }
      case RuleTag::RSumDiffL: {
        auto f = left(d->left());
        auto k = fresh("k"), c = fresh("c"), a = fresh("a"), w = fresh("w");
        return lam(k, plam(c, a, app2(f, lam(w, app(vr(w), pr(vr(k), vr(a)))), vr(c))));
      }
      case RuleTag::RDiffLSum: {
        auto f = left(d->left());
        auto k = fresh("k"), c = fresh("c"), b = fresh("b"), a = fresh("a");
        return lam(k, lam(c, app(vr(k), plam(b, a, app2(f, vr(b), pr(vr(c), vr(a)))))));
      }
      case RuleTag::MSum: {
        auto f = left(d->left()), g = left(d->right());
        auto k = fresh("k"), h = fresh("h"), b = fresh("b"), e = fresh("d");
        return lam(k, lam(h, app(vr(k),
                                 plam(b, e, app(vr(h), pr(app(f, vr(b)), app(g, vr(e))))))));
      }
      case RuleTag::MDiffR: {
        auto f = translate_r_with(d->left()), g = translate_r_with(d->right());
        auto k = fresh("k"), e = fresh("d"), a = fresh("a"), b = fresh("b"), c = fresh("c");
        return lam(k, plam(e, a,
                           app2(g, vr(a),
                                lam(b, app(vr(k), pr(lam(c, app2(f, vr(c), vr(e))), vr(b)))))));
      }
      case RuleTag::MDiffL: {
        auto f = translate_r_with(d->left()), g = translate_r_with(d->right());
        auto k = fresh("k"), a = fresh("a"), e = fresh("d"), b = fresh("b"), c = fresh("c");
        return lam(k, plam(a, e,
                           app2(f, vr(a),
                                lam(b, app(vr(k), pr(vr(b), lam(c, app2(g, vr(c), vr(e)))))))));
      }
      case RuleTag::DDiffRImpL: {
        auto f = left(d->left());
        auto k = fresh("k"), c = fresh("c"), a = fresh("a"), e = fresh("d"), b = fresh("b"), w = fresh("w");
        return lam(k, plam(c, a,
                           app(vr(k), plam(e, b,
                                           app2(f, lam(w, app(vr(w), pr(vr(c), vr(e)))),
                                                pr(vr(a), vr(b)))))));
      }
      case RuleTag::DDiffRImpR: {
        auto f = left(d->left());
        auto k = fresh("k"), c = fresh("c"), b = fresh("b"), a = fresh("a"), e = fresh("d"), w = fresh("w");
        return lam(k, plam(c, b,
                           app(vr(k), plam(a, e,
                                           app2(f, lam(w, app(vr(w), pr(vr(c), vr(e)))),
                                                pr(vr(a), vr(b)))))));
      }
      case RuleTag::DDiffLImpR: {
        auto f = left(d->left());
        auto k = fresh("k"), b = fresh("b"), e = fresh("d"), a = fresh("a"), c = fresh("c"), w = fresh("w");
        return lam(k, plam(b, e,
                           app(vr(k), plam(a, c,
                                           app2(f, lam(w, app(vr(w), pr(vr(c), vr(e)))),
                                                pr(vr(a), vr(b)))))));
      }
      case RuleTag::DDiffLImpL: {
        auto f = left(d->left());
        auto k = fresh("k"), a = fresh("a"), e = fresh("d"), c = fresh("c"), b = fresh("b"), w = fresh("w");
        return lam(k, plam(a, e,
                           app(vr(k), plam(c, b,
                                           app2(f, lam(w, app(vr(w), pr(vr(c), vr(e)))),
                                                pr(vr(a), vr(b)))))));
      }
    }
    throw std::logic_error("translate_l: bad tag");
  }

  SemTermPtr translate_l_with(const DerivPtr& d) { return left(d); }
  SemTermPtr translate_r_with(const DerivPtr& d) { return right(d); }
};

}  // namespace

SemTermPtr translate_r(const DerivPtr& d) {
  Translator t;
  return t.right(d);
}

SemTermPtr translate_l(const DerivPtr& d) {
  Translator t;
  return t.left(d);
}

// ---- checker types ------------------------------------------------------

TyPtr Ty::r() {
  static TyPtr inst = std::shared_ptr<Ty>(new Ty());
  return inst;
}

TyPtr Ty::base(std::string name) {
  auto t = std::shared_ptr<Ty>(new Ty());
  t->kind_ = Kind::Base;
  t->name_ = std::move(name);
  return t;
}

TyPtr Ty::prod(TyPtr l, TyPtr r) {
  auto t = std::shared_ptr<Ty>(new Ty());
  t->kind_ = Kind::Prod;
  t->l_ = std::move(l);
  t->r_ = std::move(r);
  return t;
}

TyPtr Ty::arrow(TyPtr dom, TyPtr cod) {
  auto t = std::shared_ptr<Ty>(new Ty());
  t->kind_ = Kind::Arrow;
  t->l_ = std::move(dom);
  t->r_ = std::move(cod);
  return t;
}

TyPtr Ty::meta(int id) {
  auto t = std::shared_ptr<Ty>(new Ty());
  t->kind_ = Kind::Meta;
  t->meta_ = id;
  return t;
}

bool equal(const TyPtr& a, const TyPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Ty::Kind::R: return true;
    case Ty::Kind::Base: return a->name() == b->name();
    case Ty::Kind::Meta: return a->meta_id() == b->meta_id();
    default: return equal(a->left(), b->left()) && equal(a->right(), b->right());
  }
}

std::string show_ty(const TyPtr& t) {
  switch (t->kind()) {
    case Ty::Kind::R: return "R";
    case Ty::Kind::Base: return t->name();
    case Ty::Kind::Meta: return "?" + std::to_string(t->meta_id());
    case Ty::Kind::Prod: return "(" + show_ty(t->left()) + " x " + show_ty(t->right()) + ")";
    case Ty::Kind::Arrow: return "(" + show_ty(t->left()) + " -> " + show_ty(t->right()) + ")";
  }
  return "?";
}

TyPtr embed_sem_type(const SemTypePtr& t, const AtomInterp& interp) {
  switch (t->kind()) {
    case SemType::Kind::AtomDen:
      return interp ? interp(t->atom()) : Ty::base(t->atom());
    case SemType::Kind::Pair:
      return Ty::prod(embed_sem_type(t->left(), interp), embed_sem_type(t->right(), interp));
    case SemType::Kind::Neg:
      return Ty::arrow(embed_sem_type(t->left(), interp), Ty::r());
  }
  throw std::logic_error("embed_sem_type: bad kind");
}

TyPtr signature_r(const Judgement& j, const AtomInterp& interp) {
  TyPtr a = embed_sem_type(translate_type(j.lhs), interp);
  TyPtr b = embed_sem_type(translate_type(j.rhs), interp);
  return Ty::arrow(a, Ty::arrow(Ty::arrow(b, Ty::r()), Ty::r()));
}

TyPtr signature_l(const Judgement& j, const AtomInterp& interp) {
  TyPtr a = embed_sem_type(translate_type(j.lhs), interp);
  TyPtr b = embed_sem_type(translate_type(j.rhs), interp);
  return Ty::arrow(Ty::arrow(b, Ty::r()), Ty::arrow(a, Ty::r()));
}

// ---- type checking ------------------------------------------------------

namespace {

struct Infer {
  const ConstSignature& consts;
  std::vector<TyPtr> subst;
  std::optional<TypeError> err;

  TyPtr fresh_meta() {
    subst.push_back(nullptr);
    return Ty::meta(static_cast<int>(subst.size()) - 1);
  }

  TyPtr resolve(TyPtr t) {
    while (t->kind() == Ty::Kind::Meta && subst[t->meta_id()]) t = subst[t->meta_id()];
    return t;
  }

  bool occurs(int id, const TyPtr& t0) {
    TyPtr t = resolve(t0);
    switch (t->kind()) {
      case Ty::Kind::Meta: return t->meta_id() == id;
      case Ty::Kind::Prod:
      case Ty::Kind::Arrow: return occurs(id, t->left()) || occurs(id, t->right());
      default: return false;
    }
  }

  bool unify(const TyPtr& a0, const TyPtr& b0) {
    TyPtr a = resolve(a0), b = resolve(b0);
    if (a->kind() == Ty::Kind::Meta) {
      if (b->kind() == Ty::Kind::Meta && b->meta_id() == a->meta_id()) return true;
      if (occurs(a->meta_id(), b)) return false;
      subst[a->meta_id()] = b;
      return true;
    }
    if (b->kind() == Ty::Kind::Meta) return unify(b, a);
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
      case Ty::Kind::R: return true;
      case Ty::Kind::Base: return a->name() == b->name();
      default: return unify(a->left(), b->left()) && unify(a->right(), b->right());
    }
  }

  using TermEnv = std::map<std::string, TyPtr>;

  TyPtr run(const SemTermPtr& t, TermEnv& env, std::vector<int>& path) {
    switch (t->kind()) {
      case SemTerm::Kind::Var: {
        auto it = env.find(t->name());
        if (it == env.end()) {
          err = TypeError{path, "unbound variable " + t->name()};
          return nullptr;
        }
        return it->second;
      }
      case SemTerm::Kind::Const: {
        auto it = consts.find(t->name());
        if (it == consts.end()) {
          err = TypeError{path, "unknown constant " + t->name()};
          return nullptr;
        }
        return it->second;
      }
      case SemTerm::Kind::Lam: {
        TyPtr dom = fresh_meta();
        auto saved = env.find(t->name()) != env.end() ? std::optional<TyPtr>(env[t->name()])
                                                      : std::nullopt;
        env[t->name()] = dom;
        path.push_back(0);
        TyPtr body = run(t->a(), env, path);
        path.pop_back();
        if (saved)
          env[t->name()] = *saved;
        else
          env.erase(t->name());
        if (!body) return nullptr;
        return Ty::arrow(dom, body);
      }
      case SemTerm::Kind::PairLam: {
        TyPtr d1 = fresh_meta(), d2 = fresh_meta();
        auto s1 = env.count(t->name()) ? std::optional<TyPtr>(env[t->name()]) : std::nullopt;
        auto s2 = env.count(t->name2()) ? std::optional<TyPtr>(env[t->name2()]) : std::nullopt;
        env[t->name()] = d1;
        env[t->name2()] = d2;
        path.push_back(0);
        TyPtr body = run(t->a(), env, path);
        path.pop_back();
        // restore in reverse binding order (the binders may share a name)
        if (s2) env[t->name2()] = *s2; else env.erase(t->name2());
        if (s1) env[t->name()] = *s1; else env.erase(t->name());
        if (!body) return nullptr;
        return Ty::arrow(Ty::prod(d1, d2), body);
      }
      case SemTerm::Kind::App: {
        path.push_back(0);
        TyPtr fun = run(t->a(), env, path);
        path.pop_back();
        if (!fun) return nullptr;
        path.push_back(1);
        TyPtr arg = run(t->b(), env, path);
        path.pop_back();
        if (!arg) return nullptr;
        TyPtr cod = fresh_meta();
        if (!unify(fun, Ty::arrow(arg, cod))) {
          err = TypeError{path, "cannot apply " + show_ty(resolve(fun)) + " to " +
                                    show_ty(resolve(arg))};
          return nullptr;
        }
        return cod;
      }
      case SemTerm::Kind::MkPair: {
        path.push_back(0);
        TyPtr l = run(t->a(), env, path);
        path.pop_back();
        if (!l) return nullptr;
        path.push_back(1);
        TyPtr r = run(t->b(), env, path);
        path.pop_back();
        if (!r) return nullptr;
        return Ty::prod(l, r);
      }
    }
    err = TypeError{path, "bad term"};
    return nullptr;
  }
};

}  // namespace

std::optional<TypeError> type_check(const SemTermPtr& t, const TyPtr& expected,
                                    const ConstSignature& constants) {
  Infer inf{constants, {}, std::nullopt};
  Infer::TermEnv env;
  std::vector<int> path;
  TyPtr got = inf.run(t, env, path);
  if (!got) return inf.err;
  if (!inf.unify(got, expected))
    return TypeError{{}, "term has type " + show_ty(inf.resolve(got)) + ", expected " +
                             show_ty(inf.resolve(expected))};
  return std::nullopt;
}

}  // namespace lg
