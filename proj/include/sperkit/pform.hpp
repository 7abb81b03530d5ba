#ifndef SPERKIT_PFORM_HPP
#define SPERKIT_PFORM_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sperkit/formula.hpp"
#include "sperkit/mpoly.hpp"

namespace sperkit {

// ---------------------------------------------------------------------------
// Poly-atom normal form: boolean structure in negation normal form whose
// atoms are sign conditions p REL 0 with REL in {=, !=, >, >=}; quantifier
// structure is preserved. Variables are indices into a declared order.

struct PFormula;
using PFormulaPtr = std::shared_ptr<const PFormula>;

struct PFormula {
  enum class Kind { Atom, True, False, And, Or, Exists, Forall };
  Kind kind;
  MPoly poly;  // Atom
  Rel rel = Rel::Eq;
  PFormulaPtr a, b;
  int var = -1;  // quantifiers
};

inline PFormulaPtr pf_atom(MPoly p, Rel rel) {
  auto f = std::make_shared<PFormula>();
  f->kind = PFormula::Kind::Atom;
  f->poly = std::move(p);
  f->rel = rel;
  return f;
}
inline PFormulaPtr pf_true() {
  auto f = std::make_shared<PFormula>();
  f->kind = PFormula::Kind::True;
  return f;
}
inline PFormulaPtr pf_false() {
  auto f = std::make_shared<PFormula>();
  f->kind = PFormula::Kind::False;
  return f;
}
inline PFormulaPtr pf_and(PFormulaPtr a, PFormulaPtr b) {
  if (a->kind == PFormula::Kind::False || b->kind == PFormula::Kind::False)
    return pf_false();
  if (a->kind == PFormula::Kind::True) return b;
  if (b->kind == PFormula::Kind::True) return a;
  auto f = std::make_shared<PFormula>();
  f->kind = PFormula::Kind::And;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}
inline PFormulaPtr pf_or(PFormulaPtr a, PFormulaPtr b) {
  if (a->kind == PFormula::Kind::True || b->kind == PFormula::Kind::True)
    return pf_true();
  if (a->kind == PFormula::Kind::False) return b;
  if (b->kind == PFormula::Kind::False) return a;
  auto f = std::make_shared<PFormula>();
  f->kind = PFormula::Kind::Or;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}
inline PFormulaPtr pf_exists(int var, PFormulaPtr a) {
  auto f = std::make_shared<PFormula>();
  f->kind = PFormula::Kind::Exists;
  f->var = var;
  f->a = std::move(a);
  return f;
}
inline PFormulaPtr pf_forall(int var, PFormulaPtr a) {
  auto f = std::make_shared<PFormula>();
  f->kind = PFormula::Kind::Forall;
  f->var = var;
  f->a = std::move(a);
  return f;
}

/// Negation in negation normal form.
inline PFormulaPtr pf_negate(const PFormulaPtr& f) {
  switch (f->kind) {
    case PFormula::Kind::Atom:
      switch (f->rel) {
        case Rel::Eq: return pf_atom(f->poly, Rel::Ne);
        case Rel::Ne: return pf_atom(f->poly, Rel::Eq);
        case Rel::Gt: return pf_atom(-f->poly, Rel::Ge);  // not(p>0) is -p>=0
        case Rel::Ge: return pf_atom(-f->poly, Rel::Gt);
        default: throw InternalError("pf_negate: unnormalized relation");
      }
    case PFormula::Kind::True: return pf_false();
    case PFormula::Kind::False: return pf_true();
    case PFormula::Kind::And: return pf_or(pf_negate(f->a), pf_negate(f->b));
    case PFormula::Kind::Or: return pf_and(pf_negate(f->a), pf_negate(f->b));
    case PFormula::Kind::Exists: return pf_forall(f->var, pf_negate(f->a));
    case PFormula::Kind::Forall: return pf_exists(f->var, pf_negate(f->a));
  }
  return f;
}

struct PolyAtomForm {
  std::vector<std::string> vars;  // declared order; index = variable id
  PFormulaPtr root;
};

namespace pform_detail {

inline PFormulaPtr convert(const FormulaPtr& f, const std::map<std::string, int>& idx,
                           bool positive) {
  switch (f->kind) {
    case Formula::Kind::Atom: {
      MPoly p = term_to_mpoly(f->lhs, idx) - term_to_mpoly(f->rhs, idx);
      Rel r = positive ? f->rel : rel_negate(f->rel);
      switch (r) {
        case Rel::Eq: return pf_atom(std::move(p), Rel::Eq);
        case Rel::Ne: return pf_atom(std::move(p), Rel::Ne);
        case Rel::Gt: return pf_atom(std::move(p), Rel::Gt);
        case Rel::Ge: return pf_atom(std::move(p), Rel::Ge);
        case Rel::Lt: return pf_atom(-p, Rel::Gt);
        case Rel::Le: return pf_atom(-p, Rel::Ge);
      }
      return pf_true();
    }
    case Formula::Kind::True: return positive ? pf_true() : pf_false();
    case Formula::Kind::False: return positive ? pf_false() : pf_true();
    case Formula::Kind::And: {
      auto a = convert(f->a, idx, positive), b = convert(f->b, idx, positive);
      return positive ? pf_and(a, b) : pf_or(a, b);
    }
    case Formula::Kind::Or: {
      auto a = convert(f->a, idx, positive), b = convert(f->b, idx, positive);
      return positive ? pf_or(a, b) : pf_and(a, b);
    }
    case Formula::Kind::Not:
      return convert(f->a, idx, !positive);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      auto it = idx.find(f->var);
      if (it == idx.end()) throw UnknownVariable(f->var);
      auto body = convert(f->a, idx, positive);
      bool ex = (f->kind == Formula::Kind::Exists) == positive;
      return ex ? pf_exists(it->second, body) : pf_forall(it->second, body);
    }
  }
  return pf_true();
}

}  // namespace pform_detail

/// Convert to poly-atom normal form over the given order of the free
/// variables. Bound variables get indices above the declared ones, innermost
/// quantifiers highest along each branch.
inline PolyAtomForm to_poly_atoms(const FormulaPtr& f,
                                  const std::vector<std::string>& var_order) {
  FormulaPtr n = normalize_bound(f);
  PolyAtomForm out;
  out.vars = var_order;
  std::map<std::string, int> idx;
  for (size_t i = 0; i < var_order.size(); ++i)
    idx[var_order[i]] = static_cast<int>(i);
  // collect binders in order of appearance so each gets a stable index
  struct Binders {
    std::map<std::string, int>& idx;
    std::vector<std::string>& names;
    void walk(const FormulaPtr& g) {
      switch (g->kind) {
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
          if (!idx.count(g->var)) {
            idx[g->var] = static_cast<int>(names.size());
            names.push_back(g->var);
          }
          walk(g->a);
          return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
          walk(g->a);
          walk(g->b);
          return;
        case Formula::Kind::Not:
          walk(g->a);
          return;
        default:
          return;
      }
    }
  };
  Binders binders{idx, out.vars};
  binders.walk(n);
  out.root = pform_detail::convert(n, idx, true);
  return out;
}

/// Convert back to an ordinary formula; atoms become p REL 0.
inline FormulaPtr pformula_to_formula(const PFormulaPtr& f,
                                      const std::vector<std::string>& names) {
  switch (f->kind) {
    case PFormula::Kind::Atom:
      return f_atom(mpoly_to_term(f->poly, names), f->rel, t_const(Rat(0)));
    case PFormula::Kind::True: return f_true();
    case PFormula::Kind::False: return f_false();
    case PFormula::Kind::And:
      return f_and(pformula_to_formula(f->a, names), pformula_to_formula(f->b, names));
    case PFormula::Kind::Or:
      return f_or(pformula_to_formula(f->a, names), pformula_to_formula(f->b, names));
    case PFormula::Kind::Exists:
      return f_exists(names[static_cast<size_t>(f->var)],
                      pformula_to_formula(f->a, names));
    case PFormula::Kind::Forall:
      return f_forall(names[static_cast<size_t>(f->var)],
                      pformula_to_formula(f->a, names));
  }
  return f_true();
}

inline bool pf_is_quantifier_free(const PFormulaPtr& f) {
  switch (f->kind) {
    case PFormula::Kind::Atom:
    case PFormula::Kind::True:
    case PFormula::Kind::False:
      return true;
    case PFormula::Kind::And:
    case PFormula::Kind::Or:
      return pf_is_quantifier_free(f->a) && pf_is_quantifier_free(f->b);
    case PFormula::Kind::Exists:
    case PFormula::Kind::Forall:
      return false;
  }
  return true;
}

inline void pf_free_vars(const PFormulaPtr& f, std::set<int>& bound, std::set<int>& out) {
  switch (f->kind) {
    case PFormula::Kind::Atom: {
      // every variable appearing in the polynomial
      struct Vars {
        std::set<int>& bound;
        std::set<int>& out;
        void walk(const MPoly& p) {
          if (p.is_const()) return;
          if (!bound.count(p.top_var())) out.insert(p.top_var());
          for (const auto& c : p.coeffs()) walk(c);
        }
      };
      Vars v{bound, out};
      v.walk(f->poly);
      return;
    }
    case PFormula::Kind::True:
    case PFormula::Kind::False:
      return;
    case PFormula::Kind::And:
    case PFormula::Kind::Or:
      pf_free_vars(f->a, bound, out);
      pf_free_vars(f->b, bound, out);
      return;
    case PFormula::Kind::Exists:
    case PFormula::Kind::Forall: {
      bool ins = bound.insert(f->var).second;
      pf_free_vars(f->a, bound, out);
      if (ins) bound.erase(f->var);
      return;
    }
  }
}

inline std::set<int> pf_free_vars(const PFormulaPtr& f) {
  std::set<int> bound, out;
  pf_free_vars(f, bound, out);
  return out;
}

inline bool rel_holds(Rel r, int sign) {
  switch (r) {
    case Rel::Eq: return sign == 0;
    case Rel::Ne: return sign != 0;
    case Rel::Lt: return sign < 0;
    case Rel::Le: return sign <= 0;
    case Rel::Gt: return sign > 0;
    case Rel::Ge: return sign >= 0;
  }
  return false;
}

/// Evaluate a quantifier-free poly-atom formula at a rational point.
inline bool pf_eval_rational(const PFormulaPtr& f, const std::vector<Rat>& env) {
  switch (f->kind) {
    case PFormula::Kind::Atom:
      return rel_holds(f->rel, f->poly.eval(env).sign());
    case PFormula::Kind::True: return true;
    case PFormula::Kind::False: return false;
    case PFormula::Kind::And: return pf_eval_rational(f->a, env) && pf_eval_rational(f->b, env);
    case PFormula::Kind::Or: return pf_eval_rational(f->a, env) || pf_eval_rational(f->b, env);
    default:
      throw InternalError("pf_eval_rational: quantifier present");
  }
}

/// Evaluate a quantifier-free formula at a rational assignment by name.
inline bool eval_formula_rational(const FormulaPtr& f,
                                  const std::map<std::string, Rat>& env) {
  switch (f->kind) {
    case Formula::Kind::Atom: {
      struct Eval {
        const std::map<std::string, Rat>& env;
        Rat term(const TermPtr& t) {
          switch (t->kind) {
            case Term::Kind::Const: return t->value;
            case Term::Kind::Var: {
              auto it = env.find(t->name);
              if (it == env.end()) throw MissingAssignment(t->name);
              return it->second;
            }
            case Term::Kind::Add: return term(t->a) + term(t->b);
            case Term::Kind::Mul: return term(t->a) * term(t->b);
            case Term::Kind::Neg: return -term(t->a);
            case Term::Kind::Pow: return term(t->a).pow(static_cast<unsigned>(t->exponent));
          }
          return Rat(0);
        }
      };
      Eval e{env};
      Rat d = e.term(f->lhs) - e.term(f->rhs);
      return rel_holds(f->rel, d.sign());
    }
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::And:
      return eval_formula_rational(f->a, env) && eval_formula_rational(f->b, env);
    case Formula::Kind::Or:
      return eval_formula_rational(f->a, env) || eval_formula_rational(f->b, env);
    case Formula::Kind::Not:
      return !eval_formula_rational(f->a, env);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      throw InternalError("eval_formula_rational: quantifier present");
  }
  return false;
}

}  // namespace sperkit

#endif
