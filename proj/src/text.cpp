#include "lgcalc/text.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace lg {

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct Token {
  enum class Kind { Atom, Op, LParen, RParen, Turnstile, End, Unknown };
  Kind kind = Kind::End;
  size_t offset = 0;
  std::string text;
  Conn conn = Conn::Prod;
};

// Longest-match table of operator spellings (ASCII aliases and the
// Unicode originals as UTF-8 byte strings).
const std::vector<std::pair<std::string, Token>> kOps = {
    {"|-", {Token::Kind::Turnstile, 0, "|-"}},
    {"\u22a2", {Token::Kind::Turnstile, 0, "\u22a2"}},
    {"=>", {Token::Kind::Op, 0, "=>", Conn::ImpR}},
    {"<=", {Token::Kind::Op, 0, "<=", Conn::ImpL}},
    {"-<", {Token::Kind::Op, 0, "-<", Conn::DiffL}},
    {">-", {Token::Kind::Op, 0, ">-", Conn::DiffR}},
    {"*", {Token::Kind::Op, 0, "*", Conn::Prod}},
    {"+", {Token::Kind::Op, 0, "+", Conn::Sum}},
    {"\u2297", {Token::Kind::Op, 0, "\u2297", Conn::Prod}},
    {"\u21d2", {Token::Kind::Op, 0, "\u21d2", Conn::ImpR}},
    {"\u21d0", {Token::Kind::Op, 0, "\u21d0", Conn::ImpL}},
    {"\u2295", {Token::Kind::Op, 0, "\u2295", Conn::Sum}},
    {"\u21da", {Token::Kind::Op, 0, "\u21da", Conn::DiffL}},
    {"\u21db", {Token::Kind::Op, 0, "\u21db", Conn::DiffR}},
};

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  Token cur;

  explicit Lexer(const std::string& str) : s(str) { advance(); }

  void advance() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    cur.offset = pos;
    if (pos >= s.size()) {
      cur.kind = Token::Kind::End;
      cur.text.clear();
      return;
    }
    if (s[pos] == '(') {
      cur = {Token::Kind::LParen, pos, "("};
      ++pos;
      return;
    }
    if (s[pos] == ')') {
      cur = {Token::Kind::RParen, pos, ")"};
      ++pos;
      return;
    }
    for (const auto& [spelling, tok] : kOps) {
      if (s.compare(pos, spelling.size(), spelling) == 0) {
        cur = tok;
        cur.offset = pos;
        pos += spelling.size();
        return;
      }
    }
    if (ident_char(s[pos])) {
      size_t start = pos;
      while (pos < s.size() && ident_char(s[pos])) ++pos;
      cur = {Token::Kind::Atom, start, s.substr(start, pos - start)};
      return;
    }
    cur = {Token::Kind::Unknown, pos, std::string(1, s[pos])};
  }
};

FormulaPtr parse_formula_expr(Lexer& lx);

FormulaPtr parse_operand(Lexer& lx) {
  if (lx.cur.kind == Token::Kind::LParen) {
    lx.advance();
    FormulaPtr f = parse_formula_expr(lx);
    if (lx.cur.kind != Token::Kind::RParen) throw ParseError(lx.cur.offset, ")");
    lx.advance();
    return f;
  }
  if (lx.cur.kind == Token::Kind::Atom) {
    FormulaPtr f = Formula::atom(lx.cur.text);
    lx.advance();
    return f;
  }
  throw ParseError(lx.cur.offset, "atom or (");
}

FormulaPtr parse_formula_expr(Lexer& lx) {
  FormulaPtr l = parse_operand(lx);
  if (lx.cur.kind != Token::Kind::Op) return l;
  Conn c = lx.cur.conn;
  lx.advance();
  FormulaPtr r = parse_operand(lx);
  if (lx.cur.kind == Token::Kind::Op)
    throw ParseError(lx.cur.offset, "end of formula (operators are non-associative; parenthesise)");
  return Formula::make(c, l, r);
}

void expect_end(const Lexer& lx) {
  if (lx.cur.kind != Token::Kind::End) throw ParseError(lx.cur.offset, "end of input");
}

}  // namespace

FormulaPtr parse_formula(const std::string& s) {
  Lexer lx(s);
  FormulaPtr f = parse_formula_expr(lx);
  expect_end(lx);
  return f;
}

Judgement parse_judgement(const std::string& s) {
  Lexer lx(s);
  FormulaPtr lhs = parse_formula_expr(lx);
  if (lx.cur.kind != Token::Kind::Turnstile) throw ParseError(lx.cur.offset, "|-");
  lx.advance();
  FormulaPtr rhs = parse_formula_expr(lx);
  expect_end(lx);
  return Judgement{lhs, rhs};
}

namespace {

void render_formula_rec(const FormulaPtr& f, bool unicode, bool parens, std::string& out) {
  if (f->is_atom()) {
    out += f->atom_name();
    return;
  }
  if (parens) out += "(";
  render_formula_rec(f->left(), unicode, true, out);
  out += " ";
  out += unicode ? conn_unicode(f->conn()) : conn_ascii(f->conn());
  out += " ";
  render_formula_rec(f->right(), unicode, true, out);
  if (parens) out += ")";
}

}  // namespace

std::string render_formula(const FormulaPtr& f, bool unicode) {
  std::string out;
  render_formula_rec(f, unicode, false, out);
  return out;
}

std::string render_judgement(const Judgement& j, bool unicode) {
  return render_formula(j.lhs, unicode) + (unicode ? " \u22a2 " : " |- ") +
         render_formula(j.rhs, unicode);
}

// ---- derivation s-expressions -------------------------------------------

namespace {

const std::map<std::string, RuleTag>& rule_names() {
  static const std::map<std::string, RuleTag> m = [] {
    std::map<std::string, RuleTag> out;
    for (RuleTag t : kRuleOrder) {
      out[rule_name(t)] = t;
      out[rule_name_unicode(t)] = t;
    }
    return out;
  }();
  return m;
}

struct SexpLexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  std::string symbol() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '(' &&
           s[pos] != ')')
      ++pos;
    if (start == pos) throw ParseError(start, "symbol");
    return s.substr(start, pos - start);
  }
};

DerivPtr parse_deriv_node(SexpLexer& lx) {
  if (lx.peek() != '(') throw ParseError(lx.pos, "(");
  ++lx.pos;
  std::string name = lx.symbol();
  auto it = rule_names().find(name);
  if (it == rule_names().end()) throw UnknownRule(name);
  RuleTag tag = it->second;

  if (tag == RuleTag::Ax) {
    std::vector<std::string> atoms;
    while (lx.peek() != ')' && lx.peek() != '\0') {
      if (lx.peek() == '(') throw ArityError(tag, 2);  // ax takes a bare atom
      atoms.push_back(lx.symbol());
    }
    if (lx.peek() != ')') throw ParseError(lx.pos, ")");
    ++lx.pos;
    if (atoms.size() != 1) throw ArityError(tag, atoms.size());
    return Derivation::ax(atoms[0]);
  }

  std::vector<DerivPtr> kids;
  while (lx.peek() != ')' && lx.peek() != '\0') kids.push_back(parse_deriv_node(lx));
  if (lx.peek() != ')') throw ParseError(lx.pos, ")");
  ++lx.pos;
  size_t want = static_cast<size_t>(rule_arity(tag));
  if (kids.size() != want) throw ArityError(tag, kids.size());
  return want == 1 ? Derivation::unary(tag, kids[0]) : Derivation::binary(tag, kids[0], kids[1]);
}

}  // namespace

DerivPtr parse_derivation(const std::string& s) {
  SexpLexer lx{s};
  DerivPtr d = parse_deriv_node(lx);
  if (!lx.at_end()) throw ParseError(lx.pos, "end of input");
  return d;
}

std::string render_derivation(const DerivPtr& d) {
  std::string out = "(";
  out += rule_name(d->tag());
  switch (rule_arity(d->tag())) {
    case 0:
      out += " " + d->atom();
      break;
    case 1:
      out += " " + render_derivation(d->left());
      break;
    default:
      out += " " + render_derivation(d->left()) + " " + render_derivation(d->right());
  }
  out += ")";
  return out;
}

// ---- semantic types and terms -------------------------------------------

namespace {

void render_sem_type_rec(const SemTypePtr& t, bool unicode, std::string& out) {
  switch (t->kind()) {
    case SemType::Kind::AtomDen:
      out += t->atom();
      return;
    case SemType::Kind::Neg:
      out += unicode ? "\u00ac " : "! ";
      render_sem_type_rec(t->left(), unicode, out);
      return;
    case SemType::Kind::Pair:
      out += "(";
      render_sem_type_rec(t->left(), unicode, out);
      out += unicode ? " \u00d7 " : " x ";
      render_sem_type_rec(t->right(), unicode, out);
      out += ")";
      return;
  }
}

}  // namespace

std::string render_sem_type(const SemTypePtr& t, bool unicode) {
  std::string out;
  render_sem_type_rec(t, unicode, out);
  return out;
}

namespace {

void render_term_rec(const SemTermPtr& t, bool arg_pos, std::string& out) {
  switch (t->kind()) {
    case SemTerm::Kind::Var:
    case SemTerm::Kind::Const:
      out += t->name();
      return;
    case SemTerm::Kind::Lam:
    case SemTerm::Kind::PairLam: {
      if (arg_pos) out += "(";
      out += "\\";
      if (t->kind() == SemTerm::Kind::Lam)
        out += t->name();
      else
        out += "(" + t->name() + "," + t->name2() + ")";
      out += " -> ";
      render_term_rec(t->a(), false, out);
      if (arg_pos) out += ")";
      return;
    }
    case SemTerm::Kind::App: {
      if (arg_pos) out += "(";
      render_term_rec(t->a(), t->a()->kind() != SemTerm::Kind::App, out);
      out += " ";
      render_term_rec(t->b(), true, out);
      if (arg_pos) out += ")";
      return;
    }
    case SemTerm::Kind::MkPair:
      out += "(";
      render_term_rec(t->a(), false, out);
      out += " , ";
      render_term_rec(t->b(), false, out);
      out += ")";
      return;
  }
}

}  // namespace

std::string render_term(const SemTermPtr& t) {
  std::string out;
  render_term_rec(t, false, out);
  return out;
}

// ---- proof trees ----------------------------------------------------------

namespace {

void ascii_tree(const DerivPtr& d, int depth, std::string& out) {
  for (int i = 0; i < rule_arity(d->tag()); ++i)
    ascii_tree(i == 0 ? d->left() : d->right(), depth + 1, out);
  out.append(static_cast<size_t>(depth) * 2, ' ');
  out += render_judgement(infer(d));
  out += "   (";
  out += rule_name(d->tag());
  out += ")\n";
}

void latex_tree(const DerivPtr& d, std::string& out) {
  for (int i = 0; i < rule_arity(d->tag()); ++i) latex_tree(i == 0 ? d->left() : d->right(), out);
  out += "\\RightLabel{\\tiny{$(";
  out += rule_name_unicode(d->tag());
  out += ")$}}\n";
  switch (rule_arity(d->tag())) {
    case 0: out += "\\AXC{$"; break;
    case 1: out += "\\UIC{$"; break;
    default: out += "\\BIC{$"; break;
  }
  out += render_judgement(infer(d), true);
  out += "$}\n";
}

}  // namespace

std::string render_proof_tree(const DerivPtr& d, TreeStyle style) {
  infer(d);  // propagate SchemaMismatch before emitting anything
  std::string out;
  if (style == TreeStyle::Ascii) {
    ascii_tree(d, 0, out);
  } else {
    out += "\\begin{prooftree}\n";
    latex_tree(d, out);
    out += "\\end{prooftree}\n";
  }
  return out;
}

// ---- lambda term parsing --------------------------------------------------

namespace {

struct TermLexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool try_consume(const std::string& tok) {
    skip_ws();
    if (s.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && ident_char(s[pos])) ++pos;
    if (start == pos) throw ParseError(start, "identifier");
    return s.substr(start, pos - start);
  }
};

// Raw terms use Const for every name; bound occurrences are rewritten
// to Var afterwards.
SemTermPtr parse_term_expr(TermLexer& lx);

SemTermPtr parse_term_atom(TermLexer& lx) {
  if (lx.try_consume("(")) {
    SemTermPtr t = parse_term_expr(lx);
    if (lx.try_consume(",")) {
      SemTermPtr u = parse_term_expr(lx);
      if (!lx.try_consume(")")) throw ParseError(lx.pos, ")");
      return SemTerm::mk_pair(t, u);
    }
    if (!lx.try_consume(")")) throw ParseError(lx.pos, ") or ,");
    return t;
  }
  return SemTerm::constant(lx.ident());
}

SemTermPtr parse_term_expr(TermLexer& lx) {
  if (lx.try_consume("\\")) {
    std::string n1, n2;
    bool is_pair = false;
    if (lx.try_consume("(")) {
      is_pair = true;
      n1 = lx.ident();
      if (!lx.try_consume(",")) throw ParseError(lx.pos, ",");
      n2 = lx.ident();
      if (!lx.try_consume(")")) throw ParseError(lx.pos, ")");
    } else {
      n1 = lx.ident();
    }
    if (!lx.try_consume("->")) throw ParseError(lx.pos, "->");
    SemTermPtr body = parse_term_expr(lx);
    return is_pair ? SemTerm::pair_lam(n1, n2, body) : SemTerm::lam(n1, body);
  }
  SemTermPtr t = parse_term_atom(lx);
  for (;;) {
    char c = lx.peek();
    if (c == '\0' || c == ')' || c == ',') break;
    if (c == '\\') {
      // lambda in argument position extends to the end of the spine
      t = SemTerm::app(t, parse_term_expr(lx));
      break;
    }
    t = SemTerm::app(t, parse_term_atom(lx));
  }
  return t;
}

SemTermPtr resolve_vars(const SemTermPtr& t, std::set<std::string>& bound) {
  switch (t->kind()) {
    case SemTerm::Kind::Const:
      return bound.count(t->name()) ? SemTerm::var(t->name()) : t;
    case SemTerm::Kind::Var:
      return t;
    case SemTerm::Kind::Lam: {
      bool fresh = bound.insert(t->name()).second;
      SemTermPtr body = resolve_vars(t->a(), bound);
      if (fresh) bound.erase(t->name());
      return SemTerm::lam(t->name(), body);
    }
    case SemTerm::Kind::PairLam: {
      bool f1 = bound.insert(t->name()).second;
      bool f2 = bound.insert(t->name2()).second;
      SemTermPtr body = resolve_vars(t->a(), bound);
      if (f1) bound.erase(t->name());
      if (f2) bound.erase(t->name2());
      return SemTerm::pair_lam(t->name(), t->name2(), body);
    }
    case SemTerm::Kind::App:
      return SemTerm::app(resolve_vars(t->a(), bound), resolve_vars(t->b(), bound));
    case SemTerm::Kind::MkPair:
      return SemTerm::mk_pair(resolve_vars(t->a(), bound), resolve_vars(t->b(), bound));
  }
  throw ParseError(0, "term");
}

}  // namespace

SemTermPtr parse_term(const std::string& s) {
  TermLexer lx{s};
  SemTermPtr raw = parse_term_expr(lx);
  lx.skip_ws();
  if (lx.pos < s.size()) throw ParseError(lx.pos, "end of input");
  std::set<std::string> bound;
  return resolve_vars(raw, bound);
}

// ---- lexicon and model files ----------------------------------------------

namespace {

std::string strip_comment(const std::string& line) {
  size_t h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Lexicon parse_lexicon(const std::string& text) {
  Lexicon lex;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = strip_comment(line);
    if (blank(line)) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(0, "':' in lexicon entry");
    std::string word = line.substr(0, colon);
    while (!word.empty() && std::isspace(static_cast<unsigned char>(word.back()))) word.pop_back();
    size_t ws = 0;
    while (ws < word.size() && std::isspace(static_cast<unsigned char>(word[ws]))) ++ws;
    word = word.substr(ws);
    if (word.empty()) throw ParseError(0, "word before ':'");

    std::string rest = line.substr(colon + 1);
    Lexer flx(rest);
    FormulaPtr syn = parse_formula_expr(flx);
    // formula parsing stops right before '='
    if (flx.cur.kind != Token::Kind::Unknown || flx.cur.text != "=")
      throw ParseError(colon + 1 + flx.cur.offset, "'=' after the syntactic type");
    std::string term_src = rest.substr(flx.cur.offset + 1);
    SemTermPtr term = parse_term(term_src);
    lex.entries.push_back({word, LexEntry{syn, term}});
  }
  return lex;
}

Model parse_model(const std::string& text) {
  Model m;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = strip_comment(line);
    if (blank(line)) continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "entities") {
      std::string e;
      while (ls >> e) m.entities.push_back(e);
    } else if (kw == "pred") {
      std::string name, e;
      ls >> name;
      if (name.empty()) throw ParseError(0, "predicate name");
      auto& set = m.unary_preds[name];
      while (ls >> e) set.insert(e);
    } else if (kw == "rel") {
      std::string name, p;
      ls >> name;
      if (name.empty()) throw ParseError(0, "relation name");
      auto& set = m.binary_rels[name];
      while (ls >> p) {
        if (p.size() < 3 || p.front() != '(' || p.back() != ')')
          throw ParseError(0, "(a,b) pair");
        size_t comma = p.find(',');
        if (comma == std::string::npos) throw ParseError(0, "(a,b) pair");
        set.insert({p.substr(1, comma - 1), p.substr(comma + 1, p.size() - comma - 2)});
      }
    } else {
      throw ParseError(0, "entities/pred/rel");
    }
  }
  m.validate();
  return m;
}

}  // namespace lg
