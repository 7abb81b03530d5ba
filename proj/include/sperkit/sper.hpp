#ifndef SPERKIT_SPER_HPP
#define SPERKIT_SPER_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sperkit/decide.hpp"

namespace sperkit {

// ---------------------------------------------------------------------------
// Representable points of the real spectrum of Q[x]: evaluation at a real
// algebraic number, the two infinitesimal cuts beside one, and the two
// infinite ends. Transcendental cuts never separate constructible sets, so
// they stay out of the data model.

struct SperPoint1 {
  enum class Kind { Closed, LeftCut, RightCut, MinusInf, PlusInf };
  Kind kind = Kind::Closed;
  RealAlg value;  // base point for Closed/LeftCut/RightCut

  static SperPoint1 closed(RealAlg a) { return {Kind::Closed, std::move(a)}; }
  static SperPoint1 left_cut(RealAlg a) { return {Kind::LeftCut, std::move(a)}; }
  static SperPoint1 right_cut(RealAlg a) { return {Kind::RightCut, std::move(a)}; }
  static SperPoint1 minus_inf() { return {Kind::MinusInf, RealAlg(0)}; }
  static SperPoint1 plus_inf() { return {Kind::PlusInf, RealAlg(0)}; }

  bool has_value() const {
    return kind == Kind::Closed || kind == Kind::LeftCut || kind == Kind::RightCut;
  }
};

inline bool point_eq(const SperPoint1& a, const SperPoint1& b) {
  if (a.kind != b.kind) return false;
  if (!a.has_value()) return true;
  return ralg_eq(a.value, b.value);
}

/// Sign of p at a point, with one-sided signs at cuts computed by the first
/// nonvanishing derivative and the leading-coefficient rule at the ends.
inline int sign_at_point(const UPoly& p, const SperPoint1& pt) {
  if (p.is_zero()) return 0;
  switch (pt.kind) {
    case SperPoint1::Kind::Closed:
      return sign_at(p, pt.value);
    case SperPoint1::Kind::RightCut:
    case SperPoint1::Kind::LeftCut: {
      UPoly q = p;
      int k = 0;
      while (true) {
        int s = sign_at(q, pt.value);
        if (s != 0) {
          if (pt.kind == SperPoint1::Kind::RightCut) return s;
          return k % 2 == 0 ? s : -s;
        }
        q = q.derivative();
        ++k;
        if (q.is_zero()) return 0;  // unreachable for nonzero p
      }
    }
    case SperPoint1::Kind::MinusInf:
      return sign_at_inf(p, false);
    case SperPoint1::Kind::PlusInf:
      return sign_at_inf(p, true);
  }
  return 0;
}

/// Membership in the positive cone: p(pt) >= 0.
inline bool cone_contains(const SperPoint1& pt, const UPoly& p) {
  return sign_at_point(p, pt) >= 0;
}

// ---------------------------------------------------------------------------
// Supports

struct SupportIdeal {
  bool zero = true;
  UPoly generator;  // square-free, nonconstant when principal

  static SupportIdeal zero_ideal() { return {}; }
  static SupportIdeal principal(UPoly g) { return {false, std::move(g)}; }
};

inline SupportIdeal supp(const SperPoint1& pt) {
  if (pt.kind == SperPoint1::Kind::Closed)
    return SupportIdeal::principal(pt.value.defining());
  return SupportIdeal::zero_ideal();
}

/// Spot check of the positive-cone axioms on a finite sample: 0 is in the
/// cone, the cone is closed under + and *, contains p or -p for every p, and
/// membership of both p and -p forces sign 0.
inline bool cone_axioms_spotcheck(const SperPoint1& pt, const std::vector<UPoly>& sample) {
  if (!cone_contains(pt, UPoly())) return false;
  for (const auto& p : sample) {
    bool inp = cone_contains(pt, p), inn = cone_contains(pt, -p);
    if (!inp && !inn) return false;
    if (inp && inn && sign_at_point(p, pt) != 0) return false;
  }
  for (const auto& p : sample) {
    if (!cone_contains(pt, p)) continue;
    for (const auto& q : sample) {
      if (!cone_contains(pt, q)) continue;
      if (!cone_contains(pt, p + q)) return false;
      if (!cone_contains(pt, p * q)) return false;
    }
  }
  return true;
}

enum class CoeffCmp { LE, GE, EQ, INCOMPARABLE };

/// Comparison in the coefficientwise cone, a partial order only.
inline CoeffCmp coefficient_cone_compare(const UPoly& p, const UPoly& q) {
  auto nonneg = [](const UPoly& d) {
    for (const auto& c : d.coeffs())
      if (c.sign() < 0) return false;
    return true;
  };
  bool le = nonneg(q - p), ge = nonneg(p - q);
  if (le && ge) return CoeffCmp::EQ;
  if (le) return CoeffCmp::LE;
  if (ge) return CoeffCmp::GE;
  return CoeffCmp::INCOMPARABLE;
}

// ---------------------------------------------------------------------------
// Constructible subsets of Sper Q[x] in canonical cell form: strictly
// increasing breakpoints b_1 < ... < b_k and 2k+1 membership flags for
// (-inf,b_1), {b_1}, (b_1,b_2), ..., {b_k}, (b_k,+inf). Cuts and the ends are
// not stored; their membership equals the adjacent open cell's.

class CellSet {
 public:
  CellSet() : membership_{false} {}

  static CellSet empty() { return CellSet(); }
  static CellSet whole_line() {
    CellSet s;
    s.membership_ = {true};
    return s;
  }
  static CellSet make(std::vector<RealAlg> breakpoints, std::vector<bool> membership) {
    if (membership.size() != 2 * breakpoints.size() + 1)
      throw InternalError("CellSet: membership length mismatch");
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
      if (ralg_cmp(breakpoints[i], breakpoints[i + 1]) != Ord::LT)
        throw InternalError("CellSet: breakpoints not increasing");
    CellSet s;
    s.breakpoints_ = std::move(breakpoints);
    s.membership_ = std::move(membership);
    s.canonicalize();
    return s;
  }

  const std::vector<RealAlg>& breakpoints() const { return breakpoints_; }
  const std::vector<bool>& membership() const { return membership_; }

  bool is_empty() const {
    for (bool b : membership_)
      if (b) return false;
    return true;
  }
  bool is_whole_line() const {
    for (bool b : membership_)
      if (!b) return false;
    return true;
  }

  friend CellSet set_union(const CellSet& a, const CellSet& b);
  friend CellSet set_intersect(const CellSet& a, const CellSet& b);

  CellSet complemented() const {
    CellSet s = *this;
    for (size_t i = 0; i < s.membership_.size(); ++i)
      s.membership_[i] = !s.membership_[i];
    s.canonicalize();
    return s;
  }

  /// Adds each breakpoint whose adjacent open cell is present; unbounded
  /// cells contribute no new points.
  CellSet closure() const {
    CellSet s = *this;
    for (size_t i = 0; i < s.breakpoints_.size(); ++i) {
      if (s.membership_[2 * i] || s.membership_[2 * i + 2])
        s.membership_[2 * i + 1] = true;
    }
    s.canonicalize();
    return s;
  }

  bool contains(const SperPoint1& pt) const {
    const size_t k = breakpoints_.size();
    switch (pt.kind) {
      case SperPoint1::Kind::MinusInf:
        return membership_.front();
      case SperPoint1::Kind::PlusInf:
        return membership_.back();
      default:
        break;
    }
    for (size_t i = 0; i < k; ++i) {
      Ord c = ralg_cmp(pt.value, breakpoints_[i]);
      if (c == Ord::LT) return membership_[2 * i];
      if (c == Ord::EQ) {
        switch (pt.kind) {
          case SperPoint1::Kind::Closed: return membership_[2 * i + 1];
          case SperPoint1::Kind::LeftCut: return membership_[2 * i];
          case SperPoint1::Kind::RightCut: return membership_[2 * i + 2];
          default: break;
        }
      }
    }
    return membership_.back();
  }

  friend bool operator==(const CellSet& a, const CellSet& b) {
    if (a.membership_ != b.membership_) return false;
    if (a.breakpoints_.size() != b.breakpoints_.size()) return false;
    for (size_t i = 0; i < a.breakpoints_.size(); ++i)
      if (!ralg_eq(a.breakpoints_[i], b.breakpoints_[i])) return false;
    return true;
  }
  friend bool operator!=(const CellSet& a, const CellSet& b) { return !(a == b); }

 private:
  void canonicalize() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < breakpoints_.size(); ++i) {
        if (membership_[2 * i] == membership_[2 * i + 1] &&
            membership_[2 * i + 1] == membership_[2 * i + 2]) {
          breakpoints_.erase(breakpoints_.begin() + static_cast<long>(i));
          membership_.erase(membership_.begin() + static_cast<long>(2 * i),
                            membership_.begin() + static_cast<long>(2 * i + 2));
          changed = true;
          break;
        }
      }
    }
  }

  static void refine_pair(const CellSet& a, const CellSet& b,
                          std::vector<RealAlg>& bps, std::vector<bool>& ma,
                          std::vector<bool>& mb);

  std::vector<RealAlg> breakpoints_;
  std::vector<bool> membership_;  // size 2k+1
};

inline void CellSet::refine_pair(const CellSet& a, const CellSet& b,
                                 std::vector<RealAlg>& bps, std::vector<bool>& ma,
                                 std::vector<bool>& mb) {
  size_t ia = 0, ib = 0;
  // walk the merged breakpoint sequence, tracking the current cell of each set
  auto cell_of = [](const CellSet& s, size_t i) { return s.membership_[2 * i]; };
  auto point_of = [](const CellSet& s, size_t i) { return s.membership_[2 * i + 1]; };
  while (ia < a.breakpoints_.size() || ib < b.breakpoints_.size()) {
    int which;  // -1: a's breakpoint first, 1: b's, 0: shared
    if (ia == a.breakpoints_.size()) which = 1;
    else if (ib == b.breakpoints_.size()) which = -1;
    else {
      Ord c = ralg_cmp(a.breakpoints_[ia], b.breakpoints_[ib]);
      which = c == Ord::LT ? -1 : (c == Ord::EQ ? 0 : 1);
    }
    ma.push_back(cell_of(a, ia));
    mb.push_back(cell_of(b, ib));
    if (which <= 0) {
      bps.push_back(a.breakpoints_[ia]);
      ma.push_back(point_of(a, ia));
      ++ia;
    } else {
      bps.push_back(b.breakpoints_[ib]);
      ma.push_back(cell_of(a, ia));
    }
    if (which >= 0) {
      mb.push_back(point_of(b, ib));
      ++ib;
    } else {
      mb.push_back(cell_of(b, ib));
    }
  }
  ma.push_back(cell_of(a, ia));
  mb.push_back(cell_of(b, ib));
}

inline CellSet set_union(const CellSet& a, const CellSet& b) {
  std::vector<RealAlg> bps;
  std::vector<bool> ma, mb;
  CellSet::refine_pair(a, b, bps, ma, mb);
  std::vector<bool> m(ma.size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] || mb[i];
  return CellSet::make(std::move(bps), std::move(m));
}

inline CellSet set_intersect(const CellSet& a, const CellSet& b) {
  std::vector<RealAlg> bps;
  std::vector<bool> ma, mb;
  CellSet::refine_pair(a, b, bps, ma, mb);
  std::vector<bool> m(ma.size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] && mb[i];
  return CellSet::make(std::move(bps), std::move(m));
}

inline CellSet set_difference(const CellSet& a, const CellSet& b) {
  return set_intersect(a, b.complemented());
}

inline bool subset_of(const CellSet& a, const CellSet& b) {
  return set_difference(a, b).is_empty();
}

/// alpha specializes to beta: beta lies in the closure of alpha. In Sper Q[x]
/// this happens only trivially or from a cut to its base closed point.
inline bool specializes(const SperPoint1& a, const SperPoint1& b) {
  if (point_eq(a, b)) return true;
  bool a_cut = a.kind == SperPoint1::Kind::LeftCut || a.kind == SperPoint1::Kind::RightCut;
  if (a_cut && b.kind == SperPoint1::Kind::Closed) return ralg_eq(a.value, b.value);
  return false;
}

// ---------------------------------------------------------------------------
// Constructible sets from sign data

inline CellSet cellset_from_sign_table(const SignTable& t,
                                       const std::function<bool(const std::vector<int>&)>& keep) {
  std::vector<RealAlg> bps;
  std::vector<bool> mem;
  for (const auto& cell : t.cells) {
    if (cell.is_point) bps.push_back(cell.point);
    mem.push_back(keep(cell.signs));
  }
  return CellSet::make(std::move(bps), std::move(mem));
}

/// D(p_1, ..., p_n): every polynomial strictly positive.
inline CellSet basic_open(const std::vector<UPoly>& polys) {
  SignTable t = sign_table(polys);
  return cellset_from_sign_table(t, [](const std::vector<int>& signs) {
    for (int s : signs)
      if (s <= 0) return false;
    return true;
  });
}

/// P(p) = {a : p(a) >= 0}, the complement of D(-p).
inline CellSet nonneg_set(const UPoly& p) {
  return basic_open({-p}).complemented();
}

inline UPoly mpoly_to_upoly(const MPoly& p) {
  std::vector<MPoly> cs = mpoly_coeffs_in(p, 0);
  std::vector<Rat> out;
  out.reserve(cs.size());
  for (const auto& c : cs) {
    if (!c.is_const()) throw InternalError("mpoly_to_upoly: not univariate");
    out.push_back(c.const_value());
  }
  return UPoly(std::move(out));
}

/// Points satisfying a formula with at most one free variable; quantifiers
/// are eliminated internally.
inline CellSet from_formula(const FormulaPtr& f, const std::string& var = "x",
                            const Limits& lim = Limits()) {
  auto fv = free_vars(f);
  if (fv.size() > 1 || (fv.size() == 1 && !fv.count(var)))
    throw PreconditionError("expected a formula in the single variable '" + var + "'");
  PolyAtomForm paf = to_poly_atoms(f, {var});
  QuantifierEliminator q(lim);
  PFormulaPtr qf = q.eliminate_all(paf.root);

  qe_detail::AtomTable table;
  qe_detail::collect_atoms(qf, table);
  std::vector<UPoly> polys;
  polys.reserve(table.cols.size());
  for (const auto& m : table.cols) polys.push_back(mpoly_to_upoly(m));

  SignTable t = sign_table(polys);
  return cellset_from_sign_table(t, [&](const std::vector<int>& signs) {
    return qe_detail::row_satisfies(qf, table, signs);
  });
}

/// Image of the solution set of f(x, y) under projection to the x-line.
inline CellSet project(const FormulaPtr& f, const std::string& keep = "x",
                       const std::string& drop = "y", const Limits& lim = Limits()) {
  for (const auto& v : free_vars(f))
    if (v != keep && v != drop)
      throw PreconditionError("projection expects free variables in {" + keep + ", " +
                              drop + "}");
  FormulaPtr elim = eliminate(f, drop, {keep, drop}, lim);
  return from_formula(elim, keep, lim);
}

/// Preimage of D(r_1, ..., r_n) under the map induced by u -> g(x):
/// substitution into the defining polynomials.
inline CellSet pullback_basic_open(const std::vector<UPoly>& image_polys,
                                   const UPoly& g) {
  std::vector<UPoly> pulled;
  pulled.reserve(image_polys.size());
  for (const auto& r : image_polys) pulled.push_back(r.composed(g));
  return basic_open(pulled);
}

// ---------------------------------------------------------------------------
// A quantifier-free formula with one free variable describing a CellSet;
// algebraic breakpoints are pinned by their defining polynomial and a sign
// condition inside the isolating interval.

inline TermPtr upoly_to_term(const UPoly& p, const std::string& var) {
  TermPtr sum;
  TermPtr v = t_var(var);
  const auto& cs = p.coeffs();
  for (size_t i = cs.size(); i-- > 0;) {
    if (cs[i].is_zero()) continue;
    TermPtr piece;
    const Rat& r = cs[i];
    if (i == 0) {
      piece = r.sign() < 0 ? t_neg(t_const(-r)) : t_const(r);
    } else {
      TermPtr vp = i == 1 ? v : t_pow(v, static_cast<int>(i));
      if (r == Rat(1)) piece = vp;
      else if (r == Rat(-1)) piece = t_neg(vp);
      else if (r.sign() < 0) piece = t_neg(t_mul(t_const(-r), vp));
      else piece = t_mul(t_const(r), vp);
    }
    sum = sum ? t_add(sum, piece) : piece;
  }
  return sum ? sum : t_const(Rat(0));
}

namespace cellform_detail {

inline FormulaPtr pin_equal(const RealAlg& b, const std::string& var) {
  TermPtr x = t_var(var);
  if (b.is_exact()) return f_atom(x, Rel::Eq, t_const(b.rat_value()));
  FormulaPtr root = f_atom(upoly_to_term(b.defining(), var), Rel::Eq, t_const(Rat(0)));
  FormulaPtr in_lo = f_atom(x, Rel::Gt, t_const(b.lower()));
  FormulaPtr in_hi = f_atom(x, Rel::Lt, t_const(b.upper()));
  return f_and(root, f_and(in_lo, in_hi));
}

inline FormulaPtr side_of(const RealAlg& b, const std::string& var, bool greater) {
  TermPtr x = t_var(var);
  if (b.is_exact())
    return f_atom(x, greater ? Rel::Gt : Rel::Lt, t_const(b.rat_value()));
  const UPoly d = b.defining();
  TermPtr dx = upoly_to_term(d, var);
  if (greater) {
    int s_plus = d.eval(b.upper()).sign();
    FormulaPtr beyond = f_atom(x, Rel::Ge, t_const(b.upper()));
    FormulaPtr inside =
        f_and(f_atom(x, Rel::Gt, t_const(b.lower())),
              f_atom(dx, s_plus > 0 ? Rel::Gt : Rel::Lt, t_const(Rat(0))));
    return f_or(beyond, inside);
  }
  int s_minus = d.eval(b.lower()).sign();
  FormulaPtr beyond = f_atom(x, Rel::Le, t_const(b.lower()));
  FormulaPtr inside =
      f_and(f_atom(x, Rel::Lt, t_const(b.upper())),
            f_atom(dx, s_minus > 0 ? Rel::Gt : Rel::Lt, t_const(Rat(0))));
  return f_or(beyond, inside);
}

}  // namespace cellform_detail

inline FormulaPtr cellset_to_formula(const CellSet& s, const std::string& var = "x") {
  if (s.is_empty()) return f_false();
  if (s.is_whole_line()) return f_true();
  const auto& bps = s.breakpoints();
  const auto& mem = s.membership();
  FormulaPtr out;
  auto add = [&](FormulaPtr piece) { out = out ? f_or(out, piece) : piece; };
  const size_t k = bps.size();
  for (size_t i = 0; i < 2 * k + 1; ++i) {
    if (!mem[i]) continue;
    if (i % 2 == 1) {
      add(cellform_detail::pin_equal(bps[i / 2], var));
      continue;
    }
    size_t cell = i / 2;
    if (cell == 0) {
      add(cellform_detail::side_of(bps[0], var, false));
    } else if (cell == k) {
      add(cellform_detail::side_of(bps[k - 1], var, true));
    } else {
      add(f_and(cellform_detail::side_of(bps[cell - 1], var, true),
                cellform_detail::side_of(bps[cell], var, false)));
    }
  }
  return out ? out : f_false();
}

}  // namespace sperkit

#endif
