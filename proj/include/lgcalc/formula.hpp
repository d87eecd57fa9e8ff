#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace lg {

// The six binary connectives of LG. Prod/ImpR/ImpL form the Lambek family,
// Sum/DiffL/DiffR its dual family.
enum class Conn : uint8_t {
  Prod,   // ⊗
  ImpR,   // ⇒
  ImpL,   // ⇐
  Sum,    // ⊕
  DiffL,  // ⇚
  DiffR,  // ⇛
};

const char* conn_ascii(Conn c);    // "*", "=>", "<=", "+", "-<", ">-"
const char* conn_unicode(Conn c);  // "⊗", "⇒", "⇐", "⊕", "⇚", "⇛"

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula tree: an atom or a binary connective node.
// Nodes carry a precomputed structural hash and node count.
class Formula {
public:
  static FormulaPtr atom(std::string name);
  static FormulaPtr make(Conn c, FormulaPtr l, FormulaPtr r);

  bool is_atom() const { return atom_node_; }
  const std::string& atom_name() const { return name_; }
  Conn conn() const { return conn_; }
  const FormulaPtr& left() const { return left_; }
  const FormulaPtr& right() const { return right_; }

  uint32_t size() const { return size_; }  // number of nodes, >= 1
  size_t hash() const { return hash_; }

private:
  Formula() = default;

  bool atom_node_ = false;
  Conn conn_ = Conn::Prod;
  std::string name_;
  FormulaPtr left_, right_;
  uint32_t size_ = 1;
  size_t hash_ = 0;
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);

inline FormulaPtr prod(FormulaPtr l, FormulaPtr r) { return Formula::make(Conn::Prod, std::move(l), std::move(r)); }
inline FormulaPtr impr(FormulaPtr l, FormulaPtr r) { return Formula::make(Conn::ImpR, std::move(l), std::move(r)); }
inline FormulaPtr impl(FormulaPtr l, FormulaPtr r) { return Formula::make(Conn::ImpL, std::move(l), std::move(r)); }
inline FormulaPtr sum(FormulaPtr l, FormulaPtr r) { return Formula::make(Conn::Sum, std::move(l), std::move(r)); }
inline FormulaPtr diffl(FormulaPtr l, FormulaPtr r) { return Formula::make(Conn::DiffL, std::move(l), std::move(r)); }
inline FormulaPtr diffr(FormulaPtr l, FormulaPtr r) { return Formula::make(Conn::DiffR, std::move(l), std::move(r)); }

// lhs ⊢ rhs
struct Judgement {
  FormulaPtr lhs, rhs;

  bool operator==(const Judgement& o) const { return equal(lhs, o.lhs) && equal(rhs, o.rhs); }
  bool operator!=(const Judgement& o) const { return !(*this == o); }
  size_t hash() const { return lhs->hash() * 0x9e3779b97f4a7c15ull + rhs->hash(); }
};

struct JudgementHash {
  size_t operator()(const Judgement& j) const { return j.hash(); }
};

}  // namespace lg
