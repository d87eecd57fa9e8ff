#include "lgcalc/formula.hpp"

#include <functional>

namespace lg {

const char* conn_ascii(Conn c) {
  switch (c) {
    case Conn::Prod: return "*";
    case Conn::ImpR: return "=>";
    case Conn::ImpL: return "<=";
    case Conn::Sum: return "+";
    case Conn::DiffL: return "-<";
    case Conn::DiffR: return ">-";
  }
  return "?";
}

const char* conn_unicode(Conn c) {
  switch (c) {
    case Conn::Prod: return "⊗";
    case Conn::ImpR: return "⇒";
    case Conn::ImpL: return "⇐";
    case Conn::Sum: return "⊕";
    case Conn::DiffL: return "⇚";
    case Conn::DiffR: return "⇛";
  }
  return "?";
}

static size_t mix(size_t a, size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

FormulaPtr Formula::atom(std::string name) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->atom_node_ = true;
  f->name_ = std::move(name);
  f->size_ = 1;
  f->hash_ = mix(0xa70a, std::hash<std::string>{}(f->name_));
  return f;
}

FormulaPtr Formula::make(Conn c, FormulaPtr l, FormulaPtr r) {
  auto f = std::shared_ptr<Formula>(new Formula());
  f->atom_node_ = false;
  f->conn_ = c;
  f->size_ = 1 + l->size() + r->size();
  f->hash_ = mix(mix(static_cast<size_t>(c) + 1, l->hash()), r->hash());
  f->left_ = std::move(l);
  f->right_ = std::move(r);
  return f;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash() != b->hash() || a->size() != b->size()) return false;
  if (a->is_atom() != b->is_atom()) return false;
  if (a->is_atom()) return a->atom_name() == b->atom_name();
  return a->conn() == b->conn() && equal(a->left(), b->left()) && equal(a->right(), b->right());
}

}  // namespace lg
