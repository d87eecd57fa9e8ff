#include "lgcalc/model.hpp"

#include <algorithm>
#include <cassert>

namespace lg {

void Model::validate() const {
  if (entities.empty()) throw EvalError("model: entity list is empty");
  std::set<std::string> ents(entities.begin(), entities.end());
  if (ents.size() != entities.size()) throw EvalError("model: duplicate entity");
  for (const auto& [name, set] : unary_preds)
    for (const auto& e : set)
      if (!ents.count(e)) throw EvalError("model: pred " + name + " references unknown entity " + e);
  for (const auto& [name, set] : binary_rels)
    for (const auto& [a, b] : set)
      if (!ents.count(a) || !ents.count(b))
        throw EvalError("model: rel " + name + " references unknown entity");
}

ValPtr SemValue::truth(bool b) {
  auto v = std::shared_ptr<SemValue>(new SemValue());
  v->kind_ = Kind::Truth;
  v->truth_ = b;
  return v;
}

ValPtr SemValue::entity(std::string name) {
  auto v = std::shared_ptr<SemValue>(new SemValue());
  v->kind_ = Kind::Entity;
  v->name_ = std::move(name);
  return v;
}

ValPtr SemValue::pair(ValPtr l, ValPtr r) {
  auto v = std::shared_ptr<SemValue>(new SemValue());
  v->kind_ = Kind::Pair;
  v->l_ = std::move(l);
  v->r_ = std::move(r);
  return v;
}

ValPtr SemValue::table(std::vector<std::pair<ValPtr, ValPtr>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return cmp_val(a.first, b.first) < 0; });
  return table_presorted(std::move(entries));
}

ValPtr SemValue::table_presorted(std::vector<std::pair<ValPtr, ValPtr>> entries) {
  auto v = std::shared_ptr<SemValue>(new SemValue());
  v->kind_ = Kind::Table;
  v->table_ = std::move(entries);
  return v;
}

ValPtr SemValue::closure(SemTermPtr lam_term, Env env) {
  auto v = std::shared_ptr<SemValue>(new SemValue());
  v->kind_ = Kind::Closure;
  v->term_ = std::move(lam_term);
  v->env_ = std::move(env);
  return v;
}

ValPtr SemValue::native(std::function<ValPtr(const ValPtr&)> fn) {
  auto v = std::shared_ptr<SemValue>(new SemValue());
  v->kind_ = Kind::Native;
  v->fn_ = std::move(fn);
  return v;
}

bool SemValue::is_canonical() const {
  switch (kind_) {
    case Kind::Truth:
    case Kind::Entity:
      return true;
    case Kind::Pair:
      return l_->is_canonical() && r_->is_canonical();
    case Kind::Table:
      for (const auto& [k, v] : table_)
        if (!k->is_canonical() || !v->is_canonical()) return false;
      return true;
    default:
      return false;
  }
}

int cmp_val(const ValPtr& a, const ValPtr& b) {
  if (a->kind() != b->kind())
    return static_cast<int>(a->kind()) < static_cast<int>(b->kind()) ? -1 : 1;
  switch (a->kind()) {
    case SemValue::Kind::Truth:
      return (a->truth_value() ? 1 : 0) - (b->truth_value() ? 1 : 0);
    case SemValue::Kind::Entity:
      return a->entity_name().compare(b->entity_name());
    case SemValue::Kind::Pair: {
      int c = cmp_val(a->left(), b->left());
      return c != 0 ? c : cmp_val(a->right(), b->right());
    }
    case SemValue::Kind::Table: {
      if (a->entries().size() != b->entries().size())
        return a->entries().size() < b->entries().size() ? -1 : 1;
      for (size_t i = 0; i < a->entries().size(); ++i) {
        int c = cmp_val(a->entries()[i].first, b->entries()[i].first);
        if (c != 0) return c;
        c = cmp_val(a->entries()[i].second, b->entries()[i].second);
        if (c != 0) return c;
      }
      return 0;
    }
    default:
      throw EvalError("cmp_val: closures have no canonical order");
  }
}

ValPtr canonicalize(const ValPtr& v, const ValPtr& exemplar, const Model& m) {
  switch (exemplar->kind()) {
    case SemValue::Kind::Truth:
    case SemValue::Kind::Entity:
      return v;  // already ground
    case SemValue::Kind::Pair:
      if (v->kind() != SemValue::Kind::Pair) throw EvalError("canonicalize: expected a pair");
      return SemValue::pair(canonicalize(v->left(), exemplar->left(), m),
                            canonicalize(v->right(), exemplar->right(), m));
    case SemValue::Kind::Table: {
      std::vector<std::pair<ValPtr, ValPtr>> entries;
      entries.reserve(exemplar->entries().size());
      const ValPtr& val_ex = exemplar->entries().front().second;
      for (const auto& [key, unused] : exemplar->entries())
        entries.emplace_back(key, canonicalize(apply_value(v, key, m), val_ex, m));
      return SemValue::table_presorted(std::move(entries));
    }
    default:
      throw EvalError("canonicalize: exemplar is not canonical");
  }
}

ValPtr apply_value(const ValPtr& fn, const ValPtr& arg, const Model& m) {
  switch (fn->kind()) {
    case SemValue::Kind::Native:
      return fn->fn()(arg);
    case SemValue::Kind::Closure: {
      const SemTermPtr& t = fn->lam_term();
      if (t->kind() == SemTerm::Kind::Lam) {
        auto env = std::make_shared<SemValue::EnvNode>(SemValue::EnvNode{t->name(), arg, fn->env()});
        return eval_term(t->a(), env, m);
      }
      // PairLam destructures its argument
      if (arg->kind() != SemValue::Kind::Pair)
        throw EvalError("apply: pair-pattern lambda applied to a non-pair");
      auto env1 = std::make_shared<SemValue::EnvNode>(SemValue::EnvNode{t->name(), arg->left(), fn->env()});
      auto env2 = std::make_shared<SemValue::EnvNode>(SemValue::EnvNode{t->name2(), arg->right(), env1});
      return eval_term(t->a(), env2, m);
    }
    case SemValue::Kind::Table: {
      ValPtr key = arg->is_canonical() ? arg : canonicalize(arg, fn->entries().front().first, m);
      // keys are sorted; binary search
      size_t lo = 0, hi = fn->entries().size();
      while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        int c = cmp_val(fn->entries()[mid].first, key);
        if (c == 0) return fn->entries()[mid].second;
        if (c < 0)
          lo = mid + 1;
        else
          hi = mid;
      }
      throw EvalError("apply: argument outside table domain");
    }
    default:
      throw EvalError("apply: value is not a function");
  }
}

namespace {

ValPtr lookup_env(const SemValue::Env& env, const std::string& name) {
  for (const SemValue::EnvNode* n = env.get(); n; n = n->next.get())
    if (n->name == name) return n->value;
  return nullptr;
}

bool as_truth(const ValPtr& v) {
  if (v->kind() != SemValue::Kind::Truth) throw EvalError("expected a truth value");
  return v->truth_value();
}

ValPtr constant_value(const std::string& name, const Model& m) {
  const Model* mp = &m;
  if (name == "forall") {
    return SemValue::native([mp](const ValPtr& f) {
      for (const auto& e : mp->entities)
        if (!as_truth(apply_value(f, SemValue::entity(e), *mp))) return SemValue::truth(false);
      return SemValue::truth(true);
    });
  }
  if (name == "exists") {
    return SemValue::native([mp](const ValPtr& f) {
      for (const auto& e : mp->entities)
        if (as_truth(apply_value(f, SemValue::entity(e), *mp))) return SemValue::truth(true);
      return SemValue::truth(false);
    });
  }
  if (name == "and") {
    return SemValue::native([](const ValPtr& p) {
      bool pv = as_truth(p);
      return SemValue::native([pv](const ValPtr& q) { return SemValue::truth(pv && as_truth(q)); });
    });
  }
  if (name == "implies") {
    return SemValue::native([](const ValPtr& p) {
      bool pv = as_truth(p);
      return SemValue::native([pv](const ValPtr& q) { return SemValue::truth(!pv || as_truth(q)); });
    });
  }
  if (auto it = m.unary_preds.find(name); it != m.unary_preds.end()) {
    const auto* set = &it->second;
    return SemValue::native([set](const ValPtr& e) {
      if (e->kind() != SemValue::Kind::Entity) throw EvalError("predicate applied to a non-entity");
      return SemValue::truth(set->count(e->entity_name()) > 0);
    });
  }
  if (auto it = m.binary_rels.find(name); it != m.binary_rels.end()) {
    const auto* set = &it->second;
    return SemValue::native([set](const ValPtr& a) {
      if (a->kind() != SemValue::Kind::Entity) throw EvalError("relation applied to a non-entity");
      std::string first = a->entity_name();
      return SemValue::native([set, first](const ValPtr& b) {
        if (b->kind() != SemValue::Kind::Entity) throw EvalError("relation applied to a non-entity");
        return SemValue::truth(set->count({first, b->entity_name()}) > 0);
      });
    });
  }
  if (std::find(m.entities.begin(), m.entities.end(), name) != m.entities.end())
    return SemValue::entity(name);
  throw UnknownConstant(name);
}

}  // namespace

ValPtr eval_term(const SemTermPtr& t, const SemValue::Env& env, const Model& m) {
  switch (t->kind()) {
    case SemTerm::Kind::Var: {
      ValPtr v = lookup_env(env, t->name());
      if (!v) throw UnboundVariable(t->name());
      return v;
    }
    case SemTerm::Kind::Const:
      return constant_value(t->name(), m);
    case SemTerm::Kind::Lam:
    case SemTerm::Kind::PairLam:
      return SemValue::closure(t, env);
    case SemTerm::Kind::App:
      return apply_value(eval_term(t->a(), env, m), eval_term(t->b(), env, m), m);
    case SemTerm::Kind::MkPair:
      return SemValue::pair(eval_term(t->a(), env, m), eval_term(t->b(), env, m));
  }
  throw EvalError("eval: bad term");
}

std::optional<size_t> ty_cardinality(const TyPtr& t, size_t n_entities, size_t cap) {
  switch (t->kind()) {
    case Ty::Kind::R:
      return 2;
    case Ty::Kind::Base:
      if (t->name() == "Entity") return n_entities;
      return std::nullopt;
    case Ty::Kind::Prod: {
      auto l = ty_cardinality(t->left(), n_entities, cap);
      auto r = ty_cardinality(t->right(), n_entities, cap);
      if (!l || !r || *l > cap / std::max<size_t>(*r, 1)) return std::nullopt;
      size_t n = *l * *r;
      return n <= cap ? std::optional<size_t>(n) : std::nullopt;
    }
    case Ty::Kind::Arrow: {
      auto d = ty_cardinality(t->left(), n_entities, cap);
      auto c = ty_cardinality(t->right(), n_entities, cap);
      if (!d || !c) return std::nullopt;
      size_t n = 1;
      for (size_t i = 0; i < *d; ++i) {
        if (*c != 0 && n > cap / *c) return std::nullopt;
        n *= *c;
      }
      return n <= cap ? std::optional<size_t>(n) : std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

std::vector<ValPtr> enum_values(const TyPtr& t, const Model& m) {
  switch (t->kind()) {
    case Ty::Kind::R:
      return {SemValue::truth(false), SemValue::truth(true)};
    case Ty::Kind::Base: {
      if (t->name() != "Entity") throw EvalError("enum_values: opaque base type " + t->name());
      std::vector<std::string> names = m.entities;
      std::sort(names.begin(), names.end());
      std::vector<ValPtr> out;
      for (const auto& e : names) out.push_back(SemValue::entity(e));
      return out;
    }
    case Ty::Kind::Prod: {
      auto ls = enum_values(t->left(), m);
      auto rs = enum_values(t->right(), m);
      std::vector<ValPtr> out;
      out.reserve(ls.size() * rs.size());
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(SemValue::pair(l, r));
      return out;
    }
    case Ty::Kind::Arrow: {
      auto dom = enum_values(t->left(), m);
      auto cod = enum_values(t->right(), m);
      if (dom.empty()) throw EvalError("enum_values: empty domain");
      // odometer over cod^dom; the last position cycles fastest so the
      // output stays ascending under cmp_val (dom and cod already are)
      std::vector<size_t> idx(dom.size(), 0);
      std::vector<ValPtr> out;
      for (;;) {
        std::vector<std::pair<ValPtr, ValPtr>> entries;
        entries.reserve(dom.size());
        for (size_t i = 0; i < dom.size(); ++i) entries.emplace_back(dom[i], cod[idx[i]]);
        out.push_back(SemValue::table_presorted(std::move(entries)));
        size_t i = idx.size();
        while (i > 0 && ++idx[i - 1] == cod.size()) idx[--i] = 0;
        if (i == 0) break;
      }
      return out;
    }
    default:
      throw EvalError("enum_values: type is not enumerable");
  }
}

ConstSignature model_signature(const Model& m) {
  ConstSignature sig;
  TyPtr ent = ty_entity(), r = Ty::r();
  TyPtr pred = Ty::arrow(ent, r);
  sig["forall"] = Ty::arrow(pred, r);
  sig["exists"] = Ty::arrow(pred, r);
  sig["and"] = Ty::arrow(r, Ty::arrow(r, r));
  sig["implies"] = Ty::arrow(r, Ty::arrow(r, r));
  for (const auto& [name, unused] : m.unary_preds) sig[name] = pred;
  for (const auto& [name, unused] : m.binary_rels) sig[name] = Ty::arrow(ent, pred);
  for (const auto& e : m.entities) sig[e] = ent;
  return sig;
}

TyPtr standard_atom_interp(const std::string& atom) {
  if (atom == "np" || atom == "NP") return ty_entity();
  if (atom == "s" || atom == "S") return Ty::r();
  if (atom == "n" || atom == "N") return Ty::arrow(ty_entity(), Ty::r());
  return Ty::base(atom);
}

const LexEntry* Lexicon::find(const std::string& word) const {
  for (const auto& [w, e] : entries)
    if (w == word) return &e;
  return nullptr;
}

Judgement sentence_judgement(const Lexicon& lex, const std::vector<std::string>& words,
                             const FormulaPtr& goal) {
  if (words.empty()) throw EvalError("sentence_judgement: no words");
  std::vector<FormulaPtr> types;
  for (const auto& w : words) {
    const LexEntry* e = lex.find(w);
    if (!e) throw WordNotInLexicon(w);
    types.push_back(e->syn_type);
  }
  FormulaPtr lhs = types.back();
  for (size_t i = types.size() - 1; i-- > 0;) lhs = prod(types[i], lhs);
  return Judgement{lhs, goal};
}

bool denote(const DerivPtr& d, const Lexicon& lex, const std::vector<std::string>& words,
            const FormulaPtr& goal, const Model& m) {
  Judgement want = sentence_judgement(lex, words, goal);
  Judgement got = infer(d);
  if (got != want) throw JudgementMismatch("denote: derivation does not prove the sentence judgement");

  SemTermPtr tuple = lex.find(words.back())->term;
  for (size_t i = words.size() - 1; i-- > 0;)
    tuple = SemTerm::mk_pair(lex.find(words[i])->term, tuple);

  SemTermPtr id = SemTerm::lam("x", SemTerm::var("x"));
  SemTermPtr whole = SemTerm::app(SemTerm::app(translate_r(d), tuple), id);
  ValPtr v = eval_term(whole, m);
  if (v->kind() != SemValue::Kind::Truth) throw EvalError("denote: result is not a truth value");
  return v->truth_value();
}

}  // namespace lg
