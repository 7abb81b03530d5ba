#ifndef SPERKIT_FORMULA_HPP
#define SPERKIT_FORMULA_HPP

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sperkit/rat.hpp"

namespace sperkit {

// ---------------------------------------------------------------------------
// Terms of the language of ordered fields with rational constants:
// sums, products, negation and positive integer powers.

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Const, Var, Add, Mul, Neg, Pow };
  Kind kind;
  Rat value;         // Const
  std::string name;  // Var
  TermPtr a, b;      // Add/Mul use both, Neg/Pow use a
  int exponent = 0;  // Pow, >= 1
};

inline TermPtr t_const(const Rat& r) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Const;
  t->value = r;
  return t;
}
inline TermPtr t_var(const std::string& name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Var;
  t->name = name;
  return t;
}
inline TermPtr t_add(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Add;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}
inline TermPtr t_mul(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Mul;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}
inline TermPtr t_neg(TermPtr a) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Neg;
  t->a = std::move(a);
  return t;
}
inline TermPtr t_pow(TermPtr a, int e) {
  if (e < 1) throw InternalError("power exponent must be positive");
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Pow;
  t->a = std::move(a);
  t->exponent = e;
  return t;
}
inline TermPtr t_sub(TermPtr a, TermPtr b) { return t_add(std::move(a), t_neg(std::move(b))); }

enum class Rel { Eq, Ne, Lt, Le, Gt, Ge };

inline Rel rel_negate(Rel r) {
  switch (r) {
    case Rel::Eq: return Rel::Ne;
    case Rel::Ne: return Rel::Eq;
    case Rel::Lt: return Rel::Ge;
    case Rel::Le: return Rel::Gt;
    case Rel::Gt: return Rel::Le;
    case Rel::Ge: return Rel::Lt;
  }
  return Rel::Eq;
}

inline const char* rel_text(Rel r) {
  switch (r) {
    case Rel::Eq: return "=";
    case Rel::Ne: return "!=";
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::Gt: return ">";
    case Rel::Ge: return ">=";
  }
  return "=";
}

// ---------------------------------------------------------------------------
// Formulas: atoms, boolean structure and quantifiers.

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Atom, True, False, And, Or, Not, Exists, Forall };
  Kind kind;
  TermPtr lhs, rhs;
  Rel rel = Rel::Eq;
  FormulaPtr a, b;  // And/Or use both, Not/Exists/Forall use a
  std::string var;  // quantifiers
};

inline FormulaPtr f_atom(TermPtr lhs, Rel rel, TermPtr rhs) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Atom;
  f->lhs = std::move(lhs);
  f->rel = rel;
  f->rhs = std::move(rhs);
  return f;
}
inline FormulaPtr f_true() {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::True;
  return f;
}
inline FormulaPtr f_false() {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::False;
  return f;
}
inline FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::And;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}
inline FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Or;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}
inline FormulaPtr f_not(FormulaPtr a) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Not;
  f->a = std::move(a);
  return f;
}
inline FormulaPtr f_exists(const std::string& var, FormulaPtr a) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Exists;
  f->var = var;
  f->a = std::move(a);
  return f;
}
inline FormulaPtr f_forall(const std::string& var, FormulaPtr a) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Forall;
  f->var = var;
  f->a = std::move(a);
  return f;
}

// ---------------------------------------------------------------------------
// Variable bookkeeping

inline void term_vars(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Const: return;
    case Term::Kind::Var: out.insert(t->name); return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      term_vars(t->a, out);
      term_vars(t->b, out);
      return;
    case Term::Kind::Neg:
    case Term::Kind::Pow:
      term_vars(t->a, out);
      return;
  }
}

inline void free_vars_into(const FormulaPtr& f, std::set<std::string>& bound,
                           std::set<std::string>& out) {
  switch (f->kind) {
    case Formula::Kind::Atom: {
      std::set<std::string> vs;
      term_vars(f->lhs, vs);
      term_vars(f->rhs, vs);
      for (const auto& v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case Formula::Kind::True:
    case Formula::Kind::False:
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      free_vars_into(f->a, bound, out);
      free_vars_into(f->b, bound, out);
      return;
    case Formula::Kind::Not:
      free_vars_into(f->a, bound, out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      bool inserted = bound.insert(f->var).second;
      free_vars_into(f->a, bound, out);
      if (inserted) bound.erase(f->var);
      return;
    }
  }
}

inline std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  free_vars_into(f, bound, out);
  return out;
}

inline void all_vars_into(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      term_vars(f->lhs, out);
      term_vars(f->rhs, out);
      return;
    case Formula::Kind::True:
    case Formula::Kind::False:
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      all_vars_into(f->a, out);
      all_vars_into(f->b, out);
      return;
    case Formula::Kind::Not:
      all_vars_into(f->a, out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out.insert(f->var);
      all_vars_into(f->a, out);
      return;
  }
}

inline std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  if (!used.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!used.count(cand)) return cand;
  }
}

inline TermPtr term_rename(const TermPtr& t, const std::string& from,
                           const TermPtr& to) {
  switch (t->kind) {
    case Term::Kind::Const: return t;
    case Term::Kind::Var: return t->name == from ? to : t;
    case Term::Kind::Add: return t_add(term_rename(t->a, from, to), term_rename(t->b, from, to));
    case Term::Kind::Mul: return t_mul(term_rename(t->a, from, to), term_rename(t->b, from, to));
    case Term::Kind::Neg: return t_neg(term_rename(t->a, from, to));
    case Term::Kind::Pow: return t_pow(term_rename(t->a, from, to), t->exponent);
  }
  return t;
}

/// Capture-avoiding substitution of a term for a free variable.
inline FormulaPtr substitute(const FormulaPtr& f, const std::string& var,
                             const TermPtr& replacement) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      return f_atom(term_rename(f->lhs, var, replacement), f->rel,
                    term_rename(f->rhs, var, replacement));
    case Formula::Kind::True:
    case Formula::Kind::False:
      return f;
    case Formula::Kind::And:
      return f_and(substitute(f->a, var, replacement), substitute(f->b, var, replacement));
    case Formula::Kind::Or:
      return f_or(substitute(f->a, var, replacement), substitute(f->b, var, replacement));
    case Formula::Kind::Not:
      return f_not(substitute(f->a, var, replacement));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      if (f->var == var) return f;  // var is shadowed, nothing free below
      std::set<std::string> repl_vars;
      term_vars(replacement, repl_vars);
      std::string binder = f->var;
      FormulaPtr body = f->a;
      if (repl_vars.count(binder)) {
        std::set<std::string> used = repl_vars;
        all_vars_into(f, used);
        used.insert(var);
        std::string nb = fresh_name(binder, used);
        body = substitute(body, binder, t_var(nb));
        binder = nb;
      }
      body = substitute(body, var, replacement);
      return f->kind == Formula::Kind::Exists ? f_exists(binder, body)
                                              : f_forall(binder, body);
    }
  }
  return f;
}

/// Rename binders so that bound variables are pairwise distinct and distinct
/// from every free variable.
inline FormulaPtr normalize_bound(const FormulaPtr& f) {
  std::set<std::string> used = free_vars(f);
  struct Walk {
    std::set<std::string>& used;
    FormulaPtr go(const FormulaPtr& g) {
      switch (g->kind) {
        case Formula::Kind::Atom:
        case Formula::Kind::True:
        case Formula::Kind::False:
          return g;
        case Formula::Kind::And: return f_and(go(g->a), go(g->b));
        case Formula::Kind::Or: return f_or(go(g->a), go(g->b));
        case Formula::Kind::Not: return f_not(go(g->a));
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
          std::string binder = g->var;
          FormulaPtr body = g->a;
          if (used.count(binder)) {
            std::string nb = fresh_name(binder, used);
            body = substitute(body, binder, t_var(nb));
            binder = nb;
          }
          used.insert(binder);
          body = go(body);
          return g->kind == Formula::Kind::Exists ? f_exists(binder, body)
                                                  : f_forall(binder, body);
        }
      }
      return g;
    }
  };
  Walk w{used};
  return w.go(f);
}

// ---------------------------------------------------------------------------
// Structural and alpha equality

inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Const: return a->value == b->value;
    case Term::Kind::Var: return a->name == b->name;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      return term_equal(a->a, b->a) && term_equal(a->b, b->b);
    case Term::Kind::Neg: return term_equal(a->a, b->a);
    case Term::Kind::Pow: return a->exponent == b->exponent && term_equal(a->a, b->a);
  }
  return false;
}

inline bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Atom:
      return a->rel == b->rel && term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
    case Formula::Kind::True:
    case Formula::Kind::False:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return formula_equal(a->a, b->a) && formula_equal(a->b, b->b);
    case Formula::Kind::Not:
      return formula_equal(a->a, b->a);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return a->var == b->var && formula_equal(a->a, b->a);
  }
  return false;
}

/// Equality up to bound-variable renaming.
inline bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
  struct Cmp {
    std::map<std::string, std::string> l2r, r2l;
    bool term(const TermPtr& x, const TermPtr& y) {
      if (x->kind != y->kind) return false;
      switch (x->kind) {
        case Term::Kind::Const: return x->value == y->value;
        case Term::Kind::Var: {
          auto it = l2r.find(x->name);
          std::string mapped = it == l2r.end() ? x->name : it->second;
          return mapped == y->name;
        }
        case Term::Kind::Add:
        case Term::Kind::Mul:
          return term(x->a, y->a) && term(x->b, y->b);
        case Term::Kind::Neg: return term(x->a, y->a);
        case Term::Kind::Pow: return x->exponent == y->exponent && term(x->a, y->a);
      }
      return false;
    }
    bool go(const FormulaPtr& x, const FormulaPtr& y) {
      if (x->kind != y->kind) return false;
      switch (x->kind) {
        case Formula::Kind::Atom:
          return x->rel == y->rel && term(x->lhs, y->lhs) && term(x->rhs, y->rhs);
        case Formula::Kind::True:
        case Formula::Kind::False:
          return true;
        case Formula::Kind::And:
        case Formula::Kind::Or:
          return go(x->a, y->a) && go(x->b, y->b);
        case Formula::Kind::Not:
          return go(x->a, y->a);
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
          auto sl = l2r.find(x->var);
          auto sr = r2l.find(y->var);
          std::optional<std::string> saved_l =
              sl == l2r.end() ? std::nullopt : std::make_optional(sl->second);
          std::optional<std::string> saved_r =
              sr == r2l.end() ? std::nullopt : std::make_optional(sr->second);
          l2r[x->var] = y->var;
          r2l[y->var] = x->var;
          bool ok = go(x->a, y->a);
          if (saved_l) l2r[x->var] = *saved_l; else l2r.erase(x->var);
          if (saved_r) r2l[y->var] = *saved_r; else r2l.erase(y->var);
          return ok;
        }
      }
      return false;
    }
  };
  Cmp c;
  return c.go(a, b);
}

// ---------------------------------------------------------------------------
// Printer. Output conforms to the input grammar, so parse(print(f)) == f
// up to bound-variable normalization.

inline std::string print_term(const TermPtr& t, int parent_prec = 0) {
  // precedence: add 1, mul 2, neg 2, pow 3, primary 4
  switch (t->kind) {
    case Term::Kind::Const: {
      std::string s = t->value.str();
      if (t->value.sign() < 0 && parent_prec > 1) return "(" + s + ")";
      return s;
    }
    case Term::Kind::Var:
      return t->name;
    case Term::Kind::Add: {
      std::string rhs;
      if (t->b->kind == Term::Kind::Neg)
        rhs = " - " + print_term(t->b->a, 2);
      else
        rhs = " + " + print_term(t->b, 2);
      std::string s = print_term(t->a, 1) + rhs;
      if (parent_prec > 1) return "(" + s + ")";
      return s;
    }
    case Term::Kind::Mul: {
      std::string s = print_term(t->a, 2) + " * " + print_term(t->b, 2);
      if (parent_prec > 2) return "(" + s + ")";
      return s;
    }
    case Term::Kind::Neg: {
      std::string s = "-" + print_term(t->a, 3);
      if (parent_prec > 2) return "(" + s + ")";
      return s;
    }
    case Term::Kind::Pow:
      return print_term(t->a, 4) + "^" + std::to_string(t->exponent);
  }
  return "";
}

inline std::string print_formula(const FormulaPtr& f, int parent_prec = 0) {
  // precedence: quantifier 0, or 1, and 2, neg/atom 3
  switch (f->kind) {
    case Formula::Kind::Atom:
      return print_term(f->lhs, 1) + " " + rel_text(f->rel) + " " + print_term(f->rhs, 1);
    case Formula::Kind::True:
      return "true";
    case Formula::Kind::False:
      return "false";
    case Formula::Kind::And: {
      std::string s = print_formula(f->a, 2) + " /\\ " + print_formula(f->b, 2);
      if (parent_prec > 2) return "(" + s + ")";
      return s;
    }
    case Formula::Kind::Or: {
      std::string s = print_formula(f->a, 1) + " \\/ " + print_formula(f->b, 1);
      if (parent_prec > 1) return "(" + s + ")";
      return s;
    }
    case Formula::Kind::Not:
      return "~" + print_formula(f->a, 3);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      std::string head = f->kind == Formula::Kind::Exists ? "exists " : "forall ";
      std::string s = head + f->var + ". " + print_formula(f->a, 0);
      if (parent_prec > 0) return "(" + s + ")";
      return s;
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// Parser for the formula grammar:
//   formula := ('exists'|'forall') IDENT '.' formula | disj
//   disj    := conj ( '\/' conj )*
//   conj    := neg ( '/\' neg )*
//   neg     := '~' neg | '(' formula ')' | atom
//   atom    := poly REL poly
//   poly    := sums/products of RATIONAL and IDENT with '^' powers
// Whitespace-insensitive. 'true'/'false' are accepted as literal formulas.

namespace parser_detail {

enum class Tok {
  Ident, Number, LParen, RParen, Plus, Minus, Star, Caret, AndOp, OrOp,
  NotOp, Eq, Ne, Lt, Le, Gt, Ge, Exists, Forall, Dot, TrueLit, FalseLit, End
};

struct Token {
  Tok kind;
  std::string text;
  Rat number;
  int line = 1, col = 1;
};

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto bump = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (src[i + k] == '\n') { ++line; col = 1; } else { ++col; }
    }
    i += n;
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) { bump(1); continue; }
    Token tok;
    tok.line = line;
    tok.col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      // a '/' continues the literal only when followed by a digit;
      // otherwise it belongs to the '/\' connective
      if (j < src.size() && src[j] == '/' && j + 1 < src.size() &&
          std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      tok.kind = Tok::Number;
      tok.text = src.substr(i, j - i);
      tok.number = Rat::parse(tok.text);
      out.push_back(tok);
      bump(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
      tok.text = src.substr(i, j - i);
      if (tok.text == "exists") tok.kind = Tok::Exists;
      else if (tok.text == "forall") tok.kind = Tok::Forall;
      else if (tok.text == "true") tok.kind = Tok::TrueLit;
      else if (tok.text == "false") tok.kind = Tok::FalseLit;
      else tok.kind = Tok::Ident;
      out.push_back(tok);
      bump(j - i);
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < src.size() && src[i + 1] == b;
    };
    if (two('/', '\\')) { tok.kind = Tok::AndOp; out.push_back(tok); bump(2); continue; }
    if (two('\\', '/')) { tok.kind = Tok::OrOp; out.push_back(tok); bump(2); continue; }
    if (two('!', '=')) { tok.kind = Tok::Ne; out.push_back(tok); bump(2); continue; }
    if (two('<', '=')) { tok.kind = Tok::Le; out.push_back(tok); bump(2); continue; }
    if (two('>', '=')) { tok.kind = Tok::Ge; out.push_back(tok); bump(2); continue; }
    switch (c) {
      case '(': tok.kind = Tok::LParen; break;
      case ')': tok.kind = Tok::RParen; break;
      case '+': tok.kind = Tok::Plus; break;
      case '-': tok.kind = Tok::Minus; break;
      case '*': tok.kind = Tok::Star; break;
      case '^': tok.kind = Tok::Caret; break;
      case '~': tok.kind = Tok::NotOp; break;
      case '=': tok.kind = Tok::Eq; break;
      case '<': tok.kind = Tok::Lt; break;
      case '>': tok.kind = Tok::Gt; break;
      case '.': tok.kind = Tok::Dot; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(tok);
    bump(1);
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

// signals a recoverable failure while trying the atom alternative
struct TryFail {
  std::string msg;
  int line, col;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::optional<std::vector<std::string>> declared)
      : toks_(std::move(toks)), declared_(std::move(declared)) {}

  FormulaPtr parse_all() {
    FormulaPtr f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  std::vector<std::string> seen_order() const { return seen_order_; }

 private:
  const Token& cur() const { return toks_[pos_]; }
  void advance() { if (toks_[pos_].kind != Tok::End) ++pos_; }
  bool accept(Tok k) {
    if (cur().kind == k) { advance(); return true; }
    return false;
  }
  void expect(Tok k, const std::string& what) {
    if (!accept(k))
      throw ParseError("expected " + what, cur().line, cur().col);
  }

  void note_var(const std::string& name, int line, int col) {
    for (const auto& b : binders_)
      if (b == name) return;
    if (declared_) {
      for (const auto& d : *declared_)
        if (d == name) return;
      (void)line; (void)col;
      throw UnknownVariable(name);
    }
    for (const auto& s : seen_order_)
      if (s == name) return;
    seen_order_.push_back(name);
  }

  FormulaPtr formula() {
    if (cur().kind == Tok::Exists || cur().kind == Tok::Forall) {
      bool ex = cur().kind == Tok::Exists;
      advance();
      if (cur().kind != Tok::Ident)
        throw ParseError("expected variable after quantifier", cur().line, cur().col);
      std::string v = cur().text;
      advance();
      expect(Tok::Dot, "'.' after quantified variable");
      binders_.push_back(v);
      FormulaPtr body = formula();
      binders_.pop_back();
      return ex ? f_exists(v, body) : f_forall(v, body);
    }
    return disj();
  }

  FormulaPtr disj() {
    FormulaPtr f = conj();
    while (accept(Tok::OrOp)) f = f_or(f, conj());
    return f;
  }

  FormulaPtr conj() {
    FormulaPtr f = neg();
    while (accept(Tok::AndOp)) f = f_and(f, neg());
    return f;
  }

  FormulaPtr neg() {
    if (accept(Tok::NotOp)) return f_not(neg());
    if (cur().kind == Tok::TrueLit) { advance(); return f_true(); }
    if (cur().kind == Tok::FalseLit) { advance(); return f_false(); }
    // try an atom first; on failure reparse as a parenthesized formula
    size_t save = pos_;
    try {
      return atom();
    } catch (const TryFail&) {
      pos_ = save;
    }
    if (accept(Tok::LParen)) {
      FormulaPtr f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    throw ParseError("expected atom, '~', or '('", cur().line, cur().col);
  }

  FormulaPtr atom() {
    TermPtr l = poly();
    Rel r;
    switch (cur().kind) {
      case Tok::Eq: r = Rel::Eq; break;
      case Tok::Ne: r = Rel::Ne; break;
      case Tok::Lt: r = Rel::Lt; break;
      case Tok::Le: r = Rel::Le; break;
      case Tok::Gt: r = Rel::Gt; break;
      case Tok::Ge: r = Rel::Ge; break;
      default:
        throw TryFail{"expected relation", cur().line, cur().col};
    }
    advance();
    TermPtr rr = poly();
    return f_atom(l, r, rr);
  }

  TermPtr poly() {
    TermPtr t = prod();
    while (true) {
      if (accept(Tok::Plus)) t = t_add(t, prod());
      else if (accept(Tok::Minus)) t = t_add(t, t_neg(prod()));
      else break;
    }
    return t;
  }

  TermPtr prod() {
    TermPtr t = factor();
    while (accept(Tok::Star)) t = t_mul(t, factor());
    return t;
  }

  TermPtr factor() {
    if (accept(Tok::Minus)) return t_neg(factor());
    TermPtr base = primary();
    if (accept(Tok::Caret)) {
      if (cur().kind != Tok::Number || !cur().number.is_integer() ||
          cur().number.sign() <= 0)
        throw ParseError("exponent must be a positive integer", cur().line, cur().col);
      int e = static_cast<int>(cur().number.num().get_si());
      advance();
      return t_pow(base, e);
    }
    return base;
  }

  TermPtr primary() {
    if (cur().kind == Tok::Number) {
      Rat v = cur().number;
      advance();
      return t_const(v);
    }
    if (cur().kind == Tok::Ident) {
      std::string name = cur().text;
      note_var(name, cur().line, cur().col);
      advance();
      return t_var(name);
    }
    if (accept(Tok::LParen)) {
      TermPtr t = poly();
      if (!accept(Tok::RParen))
        throw TryFail{"expected ')'", cur().line, cur().col};
      return t;
    }
    throw TryFail{"expected term", cur().line, cur().col};
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::optional<std::vector<std::string>> declared_;
  std::vector<std::string> binders_;
  std::vector<std::string> seen_order_;
};

}  // namespace parser_detail

/// Parse against a declared variable list; free identifiers outside the list
/// raise UnknownVariable. Binders may introduce any name.
inline FormulaPtr parse_formula(const std::string& text,
                                const std::vector<std::string>& variables) {
  parser_detail::Parser p(parser_detail::lex(text), variables);
  try {
    return normalize_bound(p.parse_all());
  } catch (const parser_detail::TryFail& t) {
    throw ParseError(t.msg, t.line, t.col);
  }
}

/// Parse with the variable list inferred from free identifiers in order of
/// first appearance; returns the inferred order through `order`.
inline FormulaPtr parse_formula_infer(const std::string& text,
                                      std::vector<std::string>* order = nullptr) {
  parser_detail::Parser p(parser_detail::lex(text), std::nullopt);
  try {
    FormulaPtr f = normalize_bound(p.parse_all());
    if (order) *order = p.seen_order();
    return f;
  } catch (const parser_detail::TryFail& t) {
    throw ParseError(t.msg, t.line, t.col);
  }
}

}  // namespace sperkit

#endif
