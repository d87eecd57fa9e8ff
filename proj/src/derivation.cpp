#include "lgcalc/derivation.hpp"

#include <cassert>
#include <sstream>

namespace lg {

int rule_arity(RuleTag t) {
  switch (t) {
    case RuleTag::Ax:
      return 0;
    case RuleTag::MProd:
    case RuleTag::MImpR:
    case RuleTag::MImpL:
    case RuleTag::MSum:
    case RuleTag::MDiffR:
    case RuleTag::MDiffL:
      return 2;
    default:
      return 1;
  }
}

const char* rule_name(RuleTag t) {
  switch (t) {
    case RuleTag::Ax: return "ax";
    case RuleTag::RImpRProd: return "r=>*";
    case RuleTag::RProdImpR: return "r*=>";
    case RuleTag::RImpLProd: return "r<=*";
    case RuleTag::RProdImpL: return "r*<=";
    case RuleTag::MProd: return "m*";
    case RuleTag::MImpR: return "m=>";
    case RuleTag::MImpL: return "m<=";
    case RuleTag::RDiffRSum: return "r>-+";
    case RuleTag::RSumDiffR: return "r+>-";
    case RuleTag::RSumDiffL: return "r+-<";
    case RuleTag::RDiffLSum: return "r-<+";
    case RuleTag::MSum: return "m+";
    case RuleTag::MDiffR: return "m>-";
    case RuleTag::MDiffL: return "m-<";
    case RuleTag::DDiffRImpL: return "d>-<=";
    case RuleTag::DDiffRImpR: return "d>-=>";
    case RuleTag::DDiffLImpR: return "d-<=>";
    case RuleTag::DDiffLImpL: return "d-<<=";
  }
  return "?";
}

const char* rule_name_unicode(RuleTag t) {
  switch (t) {
    case RuleTag::Ax: return "ax";
    case RuleTag::RImpRProd: return "r⇒⊗";
    case RuleTag::RProdImpR: return "r⊗⇒";
    case RuleTag::RImpLProd: return "r⇐⊗";
    case RuleTag::RProdImpL: return "r⊗⇐";
    case RuleTag::MProd: return "m⊗";
    case RuleTag::MImpR: return "m⇒";
    case RuleTag::MImpL: return "m⇐";
    case RuleTag::RDiffRSum: return "r⇛⊕";
    case RuleTag::RSumDiffR: return "r⊕⇛";
    case RuleTag::RSumDiffL: return "r⊕⇚";
    case RuleTag::RDiffLSum: return "r⇚⊕";
    case RuleTag::MSum: return "m⊕";
    case RuleTag::MDiffR: return "m⇛";
    case RuleTag::MDiffL: return "m⇚";
    case RuleTag::DDiffRImpL: return "d⇛⇐";
    case RuleTag::DDiffRImpR: return "d⇛⇒";
    case RuleTag::DDiffLImpR: return "d⇚⇒";
    case RuleTag::DDiffLImpL: return "d⇚⇐";
  }
  return "?";
}

static size_t mix(size_t a, size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

DerivPtr Derivation::ax(std::string atom) {
  auto d = std::shared_ptr<Derivation>(new Derivation());
  d->tag_ = RuleTag::Ax;
  d->atom_ = std::move(atom);
  d->size_ = 1;
  d->hash_ = mix(0xd0, std::hash<std::string>{}(d->atom_));
  return d;
}

DerivPtr Derivation::unary(RuleTag t, DerivPtr child) {
  assert(rule_arity(t) == 1);
  auto d = std::shared_ptr<Derivation>(new Derivation());
  d->tag_ = t;
  d->size_ = 1 + child->size();
  d->hash_ = mix(static_cast<size_t>(t) + 0x11, child->hash());
  d->left_ = std::move(child);
  return d;
}

DerivPtr Derivation::binary(RuleTag t, DerivPtr l, DerivPtr r) {
  assert(rule_arity(t) == 2);
  auto d = std::shared_ptr<Derivation>(new Derivation());
  d->tag_ = t;
  d->size_ = 1 + l->size() + r->size();
  d->hash_ = mix(mix(static_cast<size_t>(t) + 0x23, l->hash()), r->hash());
  d->left_ = std::move(l);
  d->right_ = std::move(r);
  return d;
}

bool equal(const DerivPtr& a, const DerivPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash() != b->hash() || a->size() != b->size() || a->tag() != b->tag()) return false;
  switch (rule_arity(a->tag())) {
    case 0: return a->atom() == b->atom();
    case 1: return equal(a->left(), b->left());
    default: return equal(a->left(), b->left()) && equal(a->right(), b->right());
  }
}

SchemaMismatch::SchemaMismatch(std::vector<int> p, RuleTag t, Judgement j)
    : std::runtime_error(std::string("premise does not match schema of ") + rule_name(t)),
      path(std::move(p)),
      tag(t),
      premise(std::move(j)) {}

namespace {

constexpr int8_t A = 0, B = 1, C = 2, D = 3;

constexpr SidePat v(int8_t m) { return SidePat{m, Conn::Prod, -1, -1}; }
constexpr SidePat n(Conn c, int8_t l, int8_t r) { return SidePat{-1, c, l, r}; }

// One row per rule; the single source of truth for rule shapes.
const RuleSchema kSchemas[kRuleCount] = {
    {RuleTag::Ax, 0, {v(A), v(A)}, {}},
    {RuleTag::RImpRProd, 1, {n(Conn::Prod, A, B), v(C)}, {{v(B), n(Conn::ImpR, A, C)}, {}}},
    {RuleTag::RProdImpR, 1, {v(B), n(Conn::ImpR, A, C)}, {{n(Conn::Prod, A, B), v(C)}, {}}},
    {RuleTag::RImpLProd, 1, {n(Conn::Prod, A, B), v(C)}, {{v(A), n(Conn::ImpL, C, B)}, {}}},
    {RuleTag::RProdImpL, 1, {v(A), n(Conn::ImpL, C, B)}, {{n(Conn::Prod, A, B), v(C)}, {}}},
    {RuleTag::MProd, 2, {n(Conn::Prod, A, C), n(Conn::Prod, B, D)}, {{v(A), v(B)}, {v(C), v(D)}}},
    {RuleTag::MImpR, 2, {n(Conn::ImpR, B, C), n(Conn::ImpR, A, D)}, {{v(A), v(B)}, {v(C), v(D)}}},
    {RuleTag::MImpL, 2, {n(Conn::ImpL, A, D), n(Conn::ImpL, B, C)}, {{v(A), v(B)}, {v(C), v(D)}}},
    {RuleTag::RDiffRSum, 1, {v(C), n(Conn::Sum, B, A)}, {{n(Conn::DiffR, B, C), v(A)}, {}}},
    {RuleTag::RSumDiffR, 1, {n(Conn::DiffR, B, C), v(A)}, {{v(C), n(Conn::Sum, B, A)}, {}}},
    {RuleTag::RSumDiffL, 1, {n(Conn::DiffL, C, A), v(B)}, {{v(C), n(Conn::Sum, B, A)}, {}}},
    {RuleTag::RDiffLSum, 1, {v(C), n(Conn::Sum, B, A)}, {{n(Conn::DiffL, C, A), v(B)}, {}}},
    {RuleTag::MSum, 2, {n(Conn::Sum, A, C), n(Conn::Sum, B, D)}, {{v(A), v(B)}, {v(C), v(D)}}},
    {RuleTag::MDiffR, 2, {n(Conn::DiffR, D, A), n(Conn::DiffR, C, B)}, {{v(C), v(D)}, {v(A), v(B)}}},
    {RuleTag::MDiffL, 2, {n(Conn::DiffL, A, D), n(Conn::DiffL, B, C)}, {{v(A), v(B)}, {v(C), v(D)}}},
    {RuleTag::DDiffRImpL, 1, {n(Conn::DiffR, C, A), n(Conn::ImpL, D, B)}, {{n(Conn::Prod, A, B), n(Conn::Sum, C, D)}, {}}},
    {RuleTag::DDiffRImpR, 1, {n(Conn::DiffR, C, B), n(Conn::ImpR, A, D)}, {{n(Conn::Prod, A, B), n(Conn::Sum, C, D)}, {}}},
    {RuleTag::DDiffLImpR, 1, {n(Conn::DiffL, B, D), n(Conn::ImpR, A, C)}, {{n(Conn::Prod, A, B), n(Conn::Sum, C, D)}, {}}},
    {RuleTag::DDiffLImpL, 1, {n(Conn::DiffL, A, D), n(Conn::ImpL, C, B)}, {{n(Conn::Prod, A, B), n(Conn::Sum, C, D)}, {}}},
};

using Binding = std::array<FormulaPtr, 4>;

bool match_side(const SidePat& p, const FormulaPtr& f, Binding& b) {
  if (p.is_var()) {
    b[p.var] = f;
    return true;
  }
  if (f->is_atom() || f->conn() != p.conn) return false;
  b[p.l] = f->left();
  b[p.r] = f->right();
  return true;
}

FormulaPtr instantiate_side(const SidePat& p, const Binding& b) {
  if (p.is_var()) return b[p.var];
  return Formula::make(p.conn, b[p.l], b[p.r]);
}

Judgement infer_impl(const DerivPtr& d, std::vector<int>& path) {
  if (d->tag() == RuleTag::Ax) {
    auto a = Formula::atom(d->atom());
    return Judgement{a, a};
  }
  const RuleSchema& s = schema(d->tag());
  Binding b;
  for (int i = 0; i < s.arity; ++i) {
    path.push_back(i);
    Judgement pj = infer_impl(i == 0 ? d->left() : d->right(), path);
    if (!match_side(s.prem[i][0], pj.lhs, b) || !match_side(s.prem[i][1], pj.rhs, b))
      throw SchemaMismatch(path, d->tag(), pj);
    path.pop_back();
  }
  return Judgement{instantiate_side(s.concl[0], b), instantiate_side(s.concl[1], b)};
}

}  // namespace

const RuleSchema& schema(RuleTag t) { return kSchemas[static_cast<int>(t)]; }

Judgement infer(const DerivPtr& d) {
  std::vector<int> path;
  return infer_impl(d, path);
}

DerivPtr ax_general(const FormulaPtr& a) {
  if (a->is_atom()) return Derivation::ax(a->atom_name());
  RuleTag m;
  switch (a->conn()) {
    case Conn::Prod: m = RuleTag::MProd; break;
    case Conn::ImpR: m = RuleTag::MImpR; break;
    case Conn::ImpL: m = RuleTag::MImpL; break;
    case Conn::Sum: m = RuleTag::MSum; break;
    case Conn::DiffL: m = RuleTag::MDiffL; break;
    case Conn::DiffR: m = RuleTag::MDiffR; break;
    default: throw std::logic_error("ax_general: bad connective");
  }
  return Derivation::binary(m, ax_general(a->left()), ax_general(a->right()));
}

std::optional<std::vector<Judgement>> backward(RuleTag t, const Judgement& j) {
  if (t == RuleTag::Ax) return std::nullopt;
  const RuleSchema& s = schema(t);
  Binding b;
  if (!match_side(s.concl[0], j.lhs, b) || !match_side(s.concl[1], j.rhs, b)) return std::nullopt;
  std::vector<Judgement> prems;
  prems.reserve(s.arity);
  for (int i = 0; i < s.arity; ++i)
    prems.push_back(Judgement{instantiate_side(s.prem[i][0], b), instantiate_side(s.prem[i][1], b)});
  return prems;
}

}  // namespace lg
