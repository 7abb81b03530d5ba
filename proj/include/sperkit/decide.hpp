#ifndef SPERKIT_DECIDE_HPP
#define SPERKIT_DECIDE_HPP

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sperkit/pform.hpp"
#include "sperkit/realalg.hpp"

namespace sperkit {

struct Limits {
  int max_degree = 8;
  int max_atoms = 64;
  int max_depth = 32;
};

// ---------------------------------------------------------------------------
// Sign tables over the exact algebraic kernel: the sign-invariant cell
// decomposition of the line induced by a family of univariate polynomials.

struct SignCell {
  bool is_point = false;
  RealAlg point;                 // when is_point
  std::optional<RealAlg> lo, hi; // open interval bounds; empty = unbounded
  std::vector<int> signs;        // one sign per input polynomial
};

struct SignTable {
  std::vector<UPoly> polys;
  std::vector<SignCell> cells;  // interval, point, interval, ..., interval
};

inline SignTable sign_table(const std::vector<UPoly>& polys) {
  SignTable t;
  t.polys = polys;
  std::vector<RealAlg> roots;
  for (const auto& p : polys) {
    if (p.is_zero() || p.degree() < 1) continue;
    for (auto& r : isolate_roots(p)) roots.push_back(std::move(r));
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealAlg& a, const RealAlg& b) { return ralg_cmp(a, b) == Ord::LT; });
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](const RealAlg& a, const RealAlg& b) { return ralg_eq(a, b); }),
              roots.end());

  auto interval_signs = [&](const Rat& sample) {
    std::vector<int> s;
    s.reserve(polys.size());
    for (const auto& p : polys) s.push_back(p.eval(sample).sign());
    return s;
  };
  auto point_signs = [&](const RealAlg& r) {
    std::vector<int> s;
    s.reserve(polys.size());
    for (const auto& p : polys) s.push_back(sign_at(p, r));
    return s;
  };

  if (roots.empty()) {
    SignCell all;
    all.signs = interval_signs(Rat(0));
    t.cells.push_back(std::move(all));
    return t;
  }
  for (size_t i = 0; i <= roots.size(); ++i) {
    SignCell iv;
    Rat sample;
    if (i == 0) {
      iv.hi = roots[0];
      sample = rational_beside(roots[0], -1) - Rat(1);
    } else if (i == roots.size()) {
      iv.lo = roots.back();
      sample = rational_beside(roots.back(), 1) + Rat(1);
    } else {
      iv.lo = roots[i - 1];
      iv.hi = roots[i];
      sample = rational_between(roots[i - 1], roots[i]);
    }
    iv.signs = interval_signs(sample);
    t.cells.push_back(std::move(iv));
    if (i < roots.size()) {
      SignCell pt;
      pt.is_point = true;
      pt.point = roots[i];
      pt.signs = point_signs(roots[i]);
      t.cells.push_back(std::move(pt));
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Quantifier elimination for real closed fields by recursive sign-diagram
// computation. Polynomials in the eliminated variable are processed dense,
// with parameter coefficients; unknown parameter signs cause case splits
// recorded as guard literals, and each case computes a full sign matrix of
// the family over the line by reduction to derivatives and signed
// pseudo-remainders.

namespace qe_detail {

// dense polynomial in the eliminated variable; c[i] multiplies v^i
struct XP {
  std::vector<MPoly> c;
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  const MPoly& head() const { return c.back(); }
  XP behead() const {
    XP r = *this;
    r.c.pop_back();
    r.trim();
    return r;
  }
  XP deriv() const {
    XP r;
    for (size_t i = 1; i < c.size(); ++i)
      r.c.push_back(c[i] * MPoly::constant(Rat(static_cast<long>(i))));
    r.trim();
    return r;
  }
  XP negated() const {
    XP r = *this;
    for (auto& m : r.c) m = -m;
    return r;
  }
};

// Signed pseudo-remainder: r with deg r < deg q and sign(r(c)) = sign(p(c))
// at every root c of q, valid where sign(head(q)) == eps (nonzero).
inline XP prem_signed(XP p, const XP& q, int eps) {
  if (q.deg() < 1) throw InternalError("prem_signed: divisor degree < 1");
  const MPoly& l = q.head();
  int k = 0;
  while (!p.zero() && p.deg() >= q.deg()) {
    int shift = p.deg() - q.deg();
    MPoly hp = p.head();
    XP next;
    next.c.assign(static_cast<size_t>(p.deg()), MPoly());
    // l*p - hp * v^shift * q  (head terms cancel)
    for (int i = 0; i < p.deg(); ++i) next.c[static_cast<size_t>(i)] = p.c[static_cast<size_t>(i)] * l;
    for (int i = 0; i < q.deg(); ++i) {
      size_t at = static_cast<size_t>(i + shift);
      next.c[at] = next.c[at] - hp * q.c[static_cast<size_t>(i)];
    }
    next.trim();
    p = std::move(next);
    ++k;
  }
  if (eps < 0 && k % 2 == 1) return p.negated();
  return p;
}

using SRow = std::vector<int>;

struct GuardLit {
  MPoly p;   // sign-normalized
  int sign;  // -1, 0, +1
};

inline bool guard_lt(const GuardLit& a, const GuardLit& b) {
  int c = MPoly::cmp(a.p, b.p);
  if (c != 0) return c < 0;
  return a.sign < b.sign;
}
inline bool guard_eq(const GuardLit& a, const GuardLit& b) {
  return a.sign == b.sign && MPoly::cmp(a.p, b.p) == 0;
}

class Engine {
 public:
  Engine(const Limits& lim) : lim_(lim) {}

  // Case analysis for the family `polys` in the eliminated variable: invokes
  // `leaf` once per parameter-sign case with the sign matrix of the family
  // over the line (rows alternate interval, point, ..., interval).
  void run(std::vector<XP> polys,
           const std::function<void(const std::vector<SRow>&)>& leaf) {
    leaf_ = &leaf;
    std::deque<XP> todo(polys.begin(), polys.end());
    casesplit({}, std::move(todo), [this](const std::vector<SRow>& rows) { (*leaf_)(rows); });
  }

  const std::vector<GuardLit>& path() const { return path_; }

 private:
  using Cont = std::function<void(const std::vector<SRow>&)>;

  int const_sign_known(const MPoly& c) {
    if (c.is_zero()) return 0;
    if (c.is_const()) return c.const_value().sign();
    bool flip = false;
    MPoly n = c.sign_normal(&flip);
    auto it = ctx_.find(n);
    if (it == ctx_.end()) throw InternalError("sign of parameter coefficient unknown");
    return flip ? -it->second : it->second;
  }

  // Trichotomy on a parameter polynomial. Invokes k with the sign of c,
  // splitting into guarded cases when the context does not determine it.
  void split3(const MPoly& c, const std::function<void(int)>& k) {
    if (c.is_zero()) { k(0); return; }
    if (c.is_const()) { k(c.const_value().sign()); return; }
    bool flip = false;
    MPoly n = c.sign_normal(&flip);
    auto it = ctx_.find(n);
    if (it != ctx_.end()) { k(flip ? -it->second : it->second); return; }
    for (int s : {1, -1, 0}) {
      ctx_[n] = s;
      path_.push_back({n, s});
      k(flip ? -s : s);
      path_.pop_back();
      ctx_.erase(n);
    }
  }

  void casesplit(std::vector<XP> done, std::deque<XP> todo, Cont cont) {
    if (todo.empty()) {
      matrix_phase(std::move(done), std::move(cont));
      return;
    }
    XP p = std::move(todo.front());
    todo.pop_front();
    size_t pos = done.size();
    if (p.deg() <= 0) {
      MPoly c = p.zero() ? MPoly() : p.c[0];
      split3(c, [&, this](int s) {
        Cont wrapped = [cont, pos, s](const std::vector<SRow>& rows) {
          std::vector<SRow> out;
          out.reserve(rows.size());
          for (const auto& r : rows) {
            SRow x = r;
            x.insert(x.begin() + static_cast<long>(pos), s);
            out.push_back(std::move(x));
          }
          cont(out);
        };
        casesplit(done, todo, wrapped);
      });
      return;
    }
    split3(p.head(), [&, this](int s) {
      if (s == 0) {
        std::deque<XP> t2 = todo;
        t2.push_front(p.behead());  // same column: p coincides with its tail here
        casesplit(done, std::move(t2), cont);
      } else {
        std::vector<XP> d2 = done;
        d2.push_back(p);
        casesplit(std::move(d2), todo, cont);
      }
    });
  }

  void matrix_phase(std::vector<XP> done, Cont cont) {
    if (done.empty()) {
      cont({SRow{}});
      return;
    }
    if (++depth_ > lim_.max_depth) {
      --depth_;
      throw ResourceLimit("sign-diagram recursion exceeded max depth");
    }
    size_t pi = 0;
    for (size_t i = 1; i < done.size(); ++i)
      if (done[i].deg() > done[pi].deg()) pi = i;
    XP p = done[pi];
    const int p_deg = p.deg();
    const int p_head = const_sign_known(p.head());

    std::vector<XP> qs;
    qs.push_back(p.deriv());
    for (size_t i = 0; i < done.size(); ++i)
      if (i != pi) qs.push_back(done[i]);
    std::vector<int> remof(qs.size(), -1);
    std::vector<XP> fam = qs;
    for (size_t i = 0; i < qs.size(); ++i) {
      if (qs[i].deg() < 1) continue;
      int eps = const_sign_known(qs[i].head());
      remof[i] = static_cast<int>(fam.size());
      fam.push_back(prem_signed(p, qs[i], eps));
    }

    const size_t nq = qs.size();
    Cont deduce = [this, cont, remof, nq, pi, p_deg, p_head,
                   ncols = done.size()](const std::vector<SRow>& rows) {
      // signs of p at the points, dropping points no tracked poly vanishes at
      struct TRow {
        bool point;
        SRow qsigns;
        int psign;  // meaningful on points; filled later on intervals
      };
      std::vector<TRow> tmp;
      auto qpart = [nq](const SRow& r) { return SRow(r.begin(), r.begin() + static_cast<long>(nq)); };
      tmp.push_back({false, qpart(rows[0]), 9});
      for (size_t k = 1; k + 1 < rows.size(); k += 2) {
        const SRow& prow = rows[k];
        int j = -1;
        for (size_t t = 0; t < nq; ++t)
          if (remof[t] >= 0 && prow[t] == 0) { j = static_cast<int>(t); break; }
        if (j < 0) continue;  // merge: neighbors carry identical tracked signs
        tmp.push_back({true, qpart(prow), prow[static_cast<size_t>(remof[static_cast<size_t>(j)])]});
        tmp.push_back({false, qpart(rows[k + 1]), 9});
      }

      // p's sign on intervals, inserting roots forced by endpoint signs
      const int at_minf = (p_deg % 2 == 0) ? p_head : -p_head;
      const int at_pinf = p_head;
      std::vector<TRow> full;
      for (size_t k = 0; k < tmp.size(); ++k) {
        if (tmp[k].point) {
          full.push_back(tmp[k]);
          continue;
        }
        int a = (k == 0) ? at_minf : tmp[k - 1].psign;
        int b = (k + 1 == tmp.size()) ? at_pinf : tmp[k + 1].psign;
        int d = tmp[k].qsigns[0];  // sign of the derivative on this interval
        int isign;
        if (a == 0 && b == 0) isign = d;
        else if (a == 0) isign = d != 0 ? d : b;
        else if (b == 0) isign = d != 0 ? -d : a;
        else if (a == b) isign = a;
        else {
          full.push_back({false, tmp[k].qsigns, a});
          full.push_back({true, tmp[k].qsigns, 0});
          full.push_back({false, tmp[k].qsigns, b});
          continue;
        }
        full.push_back({false, tmp[k].qsigns, isign});
      }

      // drop the derivative column, restore the caller's column order, and
      // remove points where nothing vanishes
      std::vector<SRow> out;
      auto emit = [&](const TRow& r) {
        SRow row(ncols);
        size_t t = 1;  // qs[1..] are the non-selected polynomials in order
        for (size_t i = 0; i < ncols; ++i) {
          if (i == pi) row[i] = r.psign;
          else row[i] = r.qsigns[t++];
        }
        out.push_back(std::move(row));
      };
      emit(full[0]);
      for (size_t k = 1; k + 1 < full.size(); k += 2) {
        bool vanish = full[k].psign == 0;
        for (size_t t = 1; !vanish && t < nq; ++t) vanish = full[k].qsigns[t] == 0;
        if (!vanish) continue;
        emit(full[k]);
        emit(full[k + 1]);
      }
      cont(out);
    };

    casesplit({}, std::deque<XP>(fam.begin(), fam.end()), deduce);
    --depth_;
  }

  Limits lim_;
  int depth_ = 0;
  std::map<MPoly, int> ctx_;
  std::vector<GuardLit> path_;
  const std::function<void(const std::vector<SRow>&)>* leaf_ = nullptr;
};

// Atom columns: distinct sign-normalized polynomials of a quantifier-free
// formula, with per-atom sign flips.
struct AtomTable {
  std::vector<MPoly> cols;          // normalized
  std::map<MPoly, size_t> index;
  // per-formula-node resolution happens through lookup()
  size_t lookup(const MPoly& p, bool* flip) {
    MPoly n = p.sign_normal(flip);
    auto it = index.find(n);
    if (it != index.end()) return it->second;
    size_t id = cols.size();
    index.emplace(n, id);
    cols.push_back(n);
    return id;
  }
};

inline void collect_atoms(const PFormulaPtr& f, AtomTable& table) {
  switch (f->kind) {
    case PFormula::Kind::Atom: {
      bool flip = false;
      table.lookup(f->poly, &flip);
      return;
    }
    case PFormula::Kind::And:
    case PFormula::Kind::Or:
      collect_atoms(f->a, table);
      collect_atoms(f->b, table);
      return;
    default:
      return;
  }
}

inline bool row_satisfies(const PFormulaPtr& f, AtomTable& table, const SRow& row) {
  switch (f->kind) {
    case PFormula::Kind::Atom: {
      bool flip = false;
      size_t id = table.lookup(f->poly, &flip);
      int s = row[id];
      if (flip) s = -s;
      return rel_holds(f->rel, s);
    }
    case PFormula::Kind::True: return true;
    case PFormula::Kind::False: return false;
    case PFormula::Kind::And:
      return row_satisfies(f->a, table, row) && row_satisfies(f->b, table, row);
    case PFormula::Kind::Or:
      return row_satisfies(f->a, table, row) || row_satisfies(f->b, table, row);
    default:
      throw InternalError("row_satisfies: quantifier present");
  }
}

}  // namespace qe_detail

// ---------------------------------------------------------------------------
// Quantifier elimination driver

class QuantifierEliminator {
 public:
  explicit QuantifierEliminator(const Limits& lim = Limits()) : lim_(lim) {}

  /// Eliminate every quantifier, innermost first.
  PFormulaPtr eliminate_all(const PFormulaPtr& f) { return qe(f, true); }

  /// Quantifier-free equivalent of ∃var.f for quantifier-free f.
  PFormulaPtr exists_qf(const PFormulaPtr& f, int var, bool prune) {
    check_input(f);
    if (!pf_free_vars(f).count(var)) return f;

    qe_detail::AtomTable table;
    qe_detail::collect_atoms(f, table);
    if (static_cast<int>(table.cols.size()) > lim_.max_atoms)
      throw ResourceLimit("too many distinct atoms");

    std::vector<qe_detail::XP> polys;
    polys.reserve(table.cols.size());
    for (const auto& m : table.cols) {
      qe_detail::XP xp;
      xp.c = mpoly_coeffs_in(m, var);
      xp.trim();
      polys.push_back(std::move(xp));
    }

    std::vector<std::vector<qe_detail::GuardLit>> cases;
    qe_detail::Engine engine(lim_);
    std::function<void(const std::vector<qe_detail::SRow>&)> leaf =
        [&](const std::vector<qe_detail::SRow>& rows) {
          for (const auto& row : rows) {
            if (qe_detail::row_satisfies(f, table, row)) {
              cases.push_back(engine.path());
              return;
            }
          }
        };
    engine.run(std::move(polys), leaf);

    // normalize the case list: dedupe literals and whole cases
    for (auto& c : cases) {
      std::sort(c.begin(), c.end(), qe_detail::guard_lt);
      c.erase(std::unique(c.begin(), c.end(), qe_detail::guard_eq), c.end());
    }
    std::sort(cases.begin(), cases.end(),
              [](const auto& a, const auto& b) {
                return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                    b.end(), qe_detail::guard_lt);
              });
    cases.erase(std::unique(cases.begin(), cases.end(),
                            [](const auto& a, const auto& b) {
                              return a.size() == b.size() &&
                                     std::equal(a.begin(), a.end(), b.begin(),
                                                qe_detail::guard_eq);
                            }),
                cases.end());

    PFormulaPtr result = pf_false();
    bool any_unconditional = false;
    std::vector<PFormulaPtr> disjuncts;
    for (const auto& c : cases) {
      if (c.empty()) { any_unconditional = true; break; }
      PFormulaPtr conj = pf_true();
      for (const auto& lit : c) conj = pf_and(conj, literal(lit));
      if (prune && !case_feasible(conj)) continue;
      disjuncts.push_back(conj);
    }
    if (any_unconditional) return pf_true();
    for (const auto& d : disjuncts) result = pf_or(result, d);
    return result;
  }

  /// Truth value of a closed poly-atom formula.
  bool decide(const PFormulaPtr& f) {
    PFormulaPtr qf = qe(f, false);
    return ground_eval(qf);
  }

 private:
  PFormulaPtr qe(const PFormulaPtr& f, bool prune) {
    switch (f->kind) {
      case PFormula::Kind::Atom:
      case PFormula::Kind::True:
      case PFormula::Kind::False:
        return f;
      case PFormula::Kind::And:
        return pf_and(qe(f->a, prune), qe(f->b, prune));
      case PFormula::Kind::Or:
        return pf_or(qe(f->a, prune), qe(f->b, prune));
      case PFormula::Kind::Exists:
        return exists_qf(qe(f->a, prune), f->var, prune);
      case PFormula::Kind::Forall:
        return pf_negate(exists_qf(pf_negate(qe(f->a, prune)), f->var, prune));
    }
    return f;
  }

  static PFormulaPtr literal(const qe_detail::GuardLit& lit) {
    if (lit.sign == 0) return pf_atom(lit.p, Rel::Eq);
    if (lit.sign > 0) return pf_atom(lit.p, Rel::Gt);
    return pf_atom(-lit.p, Rel::Gt);
  }

  bool case_feasible(const PFormulaPtr& conj) {
    PFormulaPtr closed = conj;
    for (int v : pf_free_vars(conj)) closed = pf_exists(v, closed);
    QuantifierEliminator sub(lim_);
    return sub.decide(closed);
  }

  bool ground_eval(const PFormulaPtr& f) {
    switch (f->kind) {
      case PFormula::Kind::Atom:
        if (!f->poly.is_const())
          throw InternalError("ground_eval: free variable left after elimination");
        return rel_holds(f->rel, f->poly.const_value().sign());
      case PFormula::Kind::True: return true;
      case PFormula::Kind::False: return false;
      case PFormula::Kind::And: return ground_eval(f->a) && ground_eval(f->b);
      case PFormula::Kind::Or: return ground_eval(f->a) || ground_eval(f->b);
      default:
        throw InternalError("ground_eval: quantifier left after elimination");
    }
  }

  void check_input(const PFormulaPtr& f) {
    struct Walk {
      const Limits& lim;
      void go(const PFormulaPtr& g) {
        switch (g->kind) {
          case PFormula::Kind::Atom:
            if (g->poly.total_degree() > lim.max_degree)
              throw ResourceLimit("atom polynomial exceeds max total degree");
            return;
          case PFormula::Kind::And:
          case PFormula::Kind::Or:
            go(g->a);
            go(g->b);
            return;
          case PFormula::Kind::Exists:
          case PFormula::Kind::Forall:
            go(g->a);
            return;
          default:
            return;
        }
      }
    };
    Walk w{lim_};
    w.go(f);
  }

  Limits lim_;
};

// ---------------------------------------------------------------------------
// Formula-level operations

/// Exact value of a polynomial at a real algebraic assignment (Horner over
/// the recursive coefficient structure).
inline RealAlg eval_mpoly_algebraic(const MPoly& p, const std::map<int, RealAlg>& env) {
  if (p.is_const()) return RealAlg(p.const_value());
  auto it = env.find(p.top_var());
  if (it == env.end()) throw MissingAssignment("#" + std::to_string(p.top_var()));
  RealAlg acc(0);
  const auto& cs = p.coeffs();
  for (size_t i = cs.size(); i-- > 0;)
    acc = ralg_add(ralg_mul(acc, it->second), eval_mpoly_algebraic(cs[i], env));
  return acc;
}

/// Exact truth of a quantifier-free poly-atom formula at an algebraic point.
inline bool eval_pformula_algebraic(const PFormulaPtr& f,
                                    const std::map<int, RealAlg>& env) {
  switch (f->kind) {
    case PFormula::Kind::Atom:
      return rel_holds(f->rel, eval_mpoly_algebraic(f->poly, env).sign());
    case PFormula::Kind::True: return true;
    case PFormula::Kind::False: return false;
    case PFormula::Kind::And:
      return eval_pformula_algebraic(f->a, env) && eval_pformula_algebraic(f->b, env);
    case PFormula::Kind::Or:
      return eval_pformula_algebraic(f->a, env) || eval_pformula_algebraic(f->b, env);
    default:
      throw InternalError("eval_pformula_algebraic: quantifier present");
  }
}

/// Truth of a closed sentence over the real algebraic numbers (equivalently,
/// any real closed field).
inline bool decide_sentence(const FormulaPtr& f, const Limits& lim = Limits()) {
  auto fv = free_vars(f);
  if (!fv.empty())
    throw NotClosed("sentence has free variables (first: '" + *fv.begin() + "')");
  PolyAtomForm paf = to_poly_atoms(f, {});
  QuantifierEliminator q(lim);
  return q.decide(paf.root);
}

/// Quantifier-free formula equivalent to ∃var.f over real closed fields.
/// var must be free in f or bound in f's outermost existential block.
inline FormulaPtr eliminate(const FormulaPtr& f, const std::string& var,
                            const std::vector<std::string>& var_order,
                            const Limits& lim = Limits()) {
  PolyAtomForm paf = to_poly_atoms(f, var_order);
  int vid = -1;
  for (size_t i = 0; i < paf.vars.size(); ++i)
    if (paf.vars[i] == var) { vid = static_cast<int>(i); break; }
  if (vid < 0)
    throw PreconditionError("variable '" + var + "' does not occur in the formula");

  QuantifierEliminator q(lim);
  std::function<PFormulaPtr(const PFormulaPtr&)> elim =
      [&](const PFormulaPtr& pf) -> PFormulaPtr {
    if (pf->kind == PFormula::Kind::Exists && pf->var == vid)
      return q.exists_qf(q.eliminate_all(pf->a), vid, true);
    if (pf->kind == PFormula::Kind::Exists)
      return pf_exists(pf->var, elim(pf->a));
    if (pf_free_vars(pf).count(vid))
      return q.exists_qf(q.eliminate_all(pf), vid, true);
    throw PreconditionError("variable '" + var +
                            "' is neither free nor in the outermost existential block");
  };
  return pformula_to_formula(elim(paf.root), paf.vars);
}

/// Truth of f under an assignment of real algebraic values to its free
/// variables. Rational assignments substitute directly; algebraic values are
/// evaluated exactly against a quantifier-free equivalent.
inline bool decide_with_params(const FormulaPtr& f,
                               const std::map<std::string, RealAlg>& assignment,
                               const std::vector<std::string>& var_order,
                               const Limits& lim = Limits()) {
  for (const auto& v : free_vars(f))
    if (!assignment.count(v)) throw MissingAssignment(v);

  bool all_rational = true;
  for (const auto& [name, val] : assignment)
    if (!val.is_exact()) { all_rational = false; break; }

  if (all_rational) {
    FormulaPtr g = f;
    for (const auto& [name, val] : assignment)
      g = substitute(g, name, t_const(val.rat_value()));
    return decide_sentence(g, lim);
  }

  PolyAtomForm paf = to_poly_atoms(f, var_order);
  QuantifierEliminator q(lim);
  PFormulaPtr qf = q.eliminate_all(paf.root);

  std::map<int, RealAlg> env;
  for (size_t i = 0; i < paf.vars.size(); ++i) {
    auto it = assignment.find(paf.vars[i]);
    if (it != assignment.end()) env.emplace(static_cast<int>(i), it->second);
  }
  return eval_pformula_algebraic(qf, env);
}

}  // namespace sperkit

#endif
