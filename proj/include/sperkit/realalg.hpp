#ifndef SPERKIT_REALALG_HPP
#define SPERKIT_REALALG_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sperkit/upoly.hpp"

namespace sperkit {

enum class Ord { LT = -1, EQ = 0, GT = 1 };

/// Exact real algebraic number. Either a rational (fast path) or the unique
/// root of a square-free primitive integer polynomial inside an isolating
/// interval (lo, hi) whose endpoints are not roots.
class RealAlg {
 public:
  RealAlg() : exact_(true), rat_(0) {}
  RealAlg(const Rat& r) : exact_(true), rat_(r) {}  // NOLINT
  RealAlg(int n) : exact_(true), rat_(n) {}         // NOLINT

  /// Unique root of p in (lo, hi). p is replaced by its square-free part;
  /// the interval is checked to isolate exactly one root.
  static RealAlg make(const UPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw ZeroPolynomial("defining polynomial is zero");
    UPoly s = p.squarefree_part();
    if (s.degree() < 1) throw InternalError("defining polynomial has no roots");
    if (!(lo < hi)) throw InternalError("isolating interval is empty");
    if (s.eval(lo).is_zero() || s.eval(hi).is_zero())
      throw InternalError("isolating interval endpoint is a root");
    auto seq = sturm_sequence(s);
    if (count_roots_between(seq, lo, hi) != 1)
      throw InternalError("interval does not isolate exactly one root");
    return collapse(std::move(s), lo, hi);
  }

  bool is_exact() const { return exact_; }
  const Rat& rat_value() const {
    if (!exact_) throw InternalError("rat_value on algebraic number");
    return rat_;
  }

  /// Square-free primitive defining polynomial (x - r cleared of denominators
  /// for the rational fast path).
  UPoly defining() const {
    if (!exact_) return p_;
    return UPoly({-rat_, Rat(1)}).primitive_normal();
  }

  Rat lower() const { return exact_ ? rat_ : lo_; }
  Rat upper() const { return exact_ ? rat_ : hi_; }

  int sign() const {
    if (exact_) return rat_.sign();
    return cmp_with_rat(Rat(0));
  }

  /// Sign of (this - r).
  int cmp_with_rat(const Rat& r) const {
    if (exact_) return rat_ == r ? 0 : (rat_ < r ? -1 : 1);
    if (r <= lo_) return 1;
    if (r >= hi_) return -1;
    int sr = p_.eval(r).sign();
    if (sr == 0) return 0;  // r is the isolated root
    // exactly one simple root inside, so the sign flips across it
    return sr == p_.eval(lo_).sign() ? 1 : -1;
  }

  double approx() const;

  std::string str() const {
    if (exact_) return rat_.str();
    return "root(" + p_.str() + ", [" + lo_.str() + ", " + hi_.str() + "])";
  }

  friend Ord ralg_cmp(const RealAlg& a, const RealAlg& b);
  friend int sign_at(const UPoly& q, const RealAlg& a);
  friend RealAlg ralg_add(const RealAlg& a, const RealAlg& b);
  friend RealAlg ralg_mul(const RealAlg& a, const RealAlg& b);
  friend RealAlg ralg_neg(const RealAlg& a);
  friend RealAlg ralg_inv(const RealAlg& a);
  friend RealAlg ralg_sqrt(const RealAlg& a);
  friend std::vector<RealAlg> isolate_roots(const UPoly& p);
  friend Rat rational_between(const RealAlg& a, const RealAlg& b);

 private:
  RealAlg(UPoly p, Rat lo, Rat hi)
      : exact_(false), p_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {}

  // Degree-one and root-zero representations collapse to the rational path.
  static RealAlg collapse(UPoly s, const Rat& lo, const Rat& hi) {
    if (s.degree() == 1) return RealAlg(-s.coeff(0) / s.coeff(1));
    if (s.coeff(0).is_zero() && lo.sign() < 0 && hi.sign() > 0) return RealAlg(Rat(0));
    return RealAlg(std::move(s), lo, hi);
  }

  // One bisection step on a local copy of the interval; the value is
  // immutable so refinement always works on boxes.
  struct Box {
    const RealAlg* a;
    Rat lo, hi;
    bool settled;  // exact value hit during refinement
    Rat val;
    explicit Box(const RealAlg& x)
        : a(&x), lo(x.lower()), hi(x.upper()), settled(x.is_exact()),
          val(x.is_exact() ? x.rat_value() : Rat(0)) {}
    void step() {
      if (settled) return;
      Rat m = dyadic_between(lo, hi);
      int sm = a->p_.eval(m).sign();
      if (sm == 0) {
        settled = true;
        val = m;
        lo = hi = m;
        return;
      }
      if (sm == a->p_.eval(lo).sign()) lo = m; else hi = m;
    }
    Rat lower() const { return settled ? val : lo; }
    Rat upper() const { return settled ? val : hi; }
  };

  static RealAlg select_root(const UPoly& res, Box& ba, Box& bb,
                             Rat (*combine_lo)(const Box&, const Box&),
                             Rat (*combine_hi)(const Box&, const Box&));

  bool exact_;
  Rat rat_;
  UPoly p_;
  Rat lo_, hi_;
};

// ---------------------------------------------------------------------------

inline std::vector<RealAlg> isolate_roots(const UPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("isolate_roots of the zero polynomial");
  UPoly s = p.squarefree_part();
  std::vector<RealAlg> out;
  if (s.degree() < 1) return out;
  if (s.degree() == 1) {
    out.emplace_back(-s.coeff(0) / s.coeff(1));
    return out;
  }
  auto seq = sturm_sequence(s);
  Rat bound = s.root_bound();
  Rat lo = -bound, hi = bound;

  struct Rec {
    const UPoly& s;
    const std::vector<UPoly>& seq;
    std::vector<RealAlg>& out;
    void run(const Rat& a, const Rat& b, int va, int vb) {
      int n = va - vb;
      if (n <= 0) return;
      if (n == 1) {
        out.push_back(RealAlg::collapse(s, a, b));
        return;
      }
      Rat m = dyadic_between(a, b);
      if (s.eval(m).is_zero()) {
        // the midpoint is itself a root; carve out a gap around it
        Rat delta = (b - a) * Rat(1, 4);
        while (true) {
          Rat l = m - delta, r = m + delta;
          if (!s.eval(l).is_zero() && !s.eval(r).is_zero() &&
              count_roots_between(seq, l, r) == 1) {
            run(a, l, va, sturm_variations_at(seq, l));
            out.emplace_back(m);
            run(r, b, sturm_variations_at(seq, r), vb);
            return;
          }
          delta = delta * Rat(1, 2);
        }
      }
      int vm = sturm_variations_at(seq, m);
      run(a, m, va, vm);
      run(m, b, vm, vb);
    }
  };

  Rec rec{s, seq, out};
  rec.run(lo, hi, sturm_variations_at(seq, lo), sturm_variations_at(seq, hi));

  // separate adjacent isolating intervals so they do not even share endpoints
  auto narrowed = [](const RealAlg& v) {
    if (v.is_exact()) return v;
    RealAlg::Box b(v);
    b.step();
    if (b.settled) return RealAlg(b.val);
    return RealAlg::collapse(v.p_, b.lower(), b.upper());
  };
  for (size_t i = 0; i + 1 < out.size(); ++i) {
    while (!(out[i].upper() < out[i + 1].lower())) {
      if (out[i].is_exact() && out[i + 1].is_exact()) break;
      out[i] = narrowed(out[i]);
      out[i + 1] = narrowed(out[i + 1]);
    }
  }
  return out;
}

inline int sign_at(const UPoly& q, const RealAlg& a) {
  if (q.is_zero()) return 0;
  if (q.is_constant()) return q.coeff(0).sign();
  if (a.is_exact()) return q.eval(a.rat_value()).sign();
  UPoly g = UPoly::gcd(q, a.p_);
  if (g.degree() >= 1) {
    auto gseq = sturm_sequence(g);
    if (count_roots_between(gseq, a.lo_, a.hi_) >= 1) return 0;
  }
  // a is not a root of q: shrink the box away from every root of q
  UPoly qs = q.squarefree_part();
  std::vector<RealAlg> roots = isolate_roots(qs);
  RealAlg::Box box(a);
  std::vector<RealAlg::Box> rboxes;
  rboxes.reserve(roots.size());
  for (const auto& r : roots) rboxes.emplace_back(r);
  for (int guard = 0; guard < 100000; ++guard) {
    bool clear = true;
    for (const auto& rb : rboxes) {
      if (!(rb.upper() < box.lower() || box.upper() < rb.lower())) {
        clear = false;
        break;
      }
    }
    if (clear) {
      Rat m = box.settled ? box.val : dyadic_between(box.lower(), box.upper());
      return q.eval(m).sign();
    }
    box.step();
    for (auto& rb : rboxes) rb.step();
  }
  throw InternalError("sign_at: refinement did not converge");
}

inline Ord ralg_cmp(const RealAlg& a, const RealAlg& b) {
  auto of_int = [](int s) { return s < 0 ? Ord::LT : (s == 0 ? Ord::EQ : Ord::GT); };
  if (a.is_exact() && b.is_exact())
    return of_int(a.rat_value() == b.rat_value() ? 0
                  : (a.rat_value() < b.rat_value() ? -1 : 1));
  if (b.is_exact()) return of_int(a.cmp_with_rat(b.rat_value()));
  if (a.is_exact()) return of_int(-b.cmp_with_rat(a.rat_value()));
  // equality: a common factor with a root in the overlap of the intervals
  Rat il = std::max(a.lo_, b.lo_, [](const Rat& x, const Rat& y) { return x < y; });
  Rat ih = std::min(a.hi_, b.hi_, [](const Rat& x, const Rat& y) { return x < y; });
  if (il < ih) {
    UPoly g = UPoly::gcd(a.p_, b.p_);
    if (g.degree() >= 1) {
      auto gseq = sturm_sequence(g);
      if (count_roots_between(gseq, il, ih) >= 1) return Ord::EQ;
    }
  }
  RealAlg::Box ba(a), bb(b);
  for (int guard = 0; guard < 100000; ++guard) {
    if (ba.upper() < bb.lower() || (ba.settled && bb.settled && ba.val < bb.val))
      return Ord::LT;
    if (bb.upper() < ba.lower() || (ba.settled && bb.settled && bb.val < ba.val))
      return Ord::GT;
    if (ba.settled && bb.settled) return of_int(ba.val == bb.val ? 0 : (ba.val < bb.val ? -1 : 1));
    ba.step();
    bb.step();
  }
  throw InternalError("ralg_cmp: refinement did not converge");
}

inline bool ralg_eq(const RealAlg& a, const RealAlg& b) {
  return ralg_cmp(a, b) == Ord::EQ;
}

inline RealAlg RealAlg::select_root(const UPoly& res, Box& ba, Box& bb,
                                    Rat (*combine_lo)(const Box&, const Box&),
                                    Rat (*combine_hi)(const Box&, const Box&)) {
  UPoly r = res.squarefree_part();
  if (r.degree() < 1) throw InternalError("select_root: constant resultant");
  std::vector<RealAlg> cands = isolate_roots(r);
  std::vector<Box> cboxes;
  for (const auto& c : cands) cboxes.emplace_back(c);
  std::vector<bool> alive(cands.size(), true);
  for (int guard = 0; guard < 100000; ++guard) {
    Rat L = combine_lo(ba, bb), H = combine_hi(ba, bb);
    size_t count = 0, last = 0;
    for (size_t i = 0; i < cands.size(); ++i) {
      if (!alive[i]) continue;
      if (cboxes[i].upper() < L || H < cboxes[i].lower()) {
        alive[i] = false;
        continue;
      }
      ++count;
      last = i;
    }
    if (count == 0) throw InternalError("select_root: no candidate left");
    if (count == 1) {
      // narrow the winning representation to the current enclosure
      const RealAlg& c = cands[last];
      if (c.is_exact()) return c;
      return collapse(c.p_, cboxes[last].lower(), cboxes[last].upper());
    }
    ba.step();
    bb.step();
    for (size_t i = 0; i < cands.size(); ++i)
      if (alive[i]) cboxes[i].step();
  }
  throw InternalError("select_root: refinement did not converge");
}

inline RealAlg ralg_neg(const RealAlg& a) {
  if (a.is_exact()) return RealAlg(-a.rat_value());
  return RealAlg::collapse(a.p_.reflected().primitive_normal(), -a.hi_, -a.lo_);
}

inline RealAlg ralg_add(const RealAlg& a, const RealAlg& b) {
  if (a.is_exact() && b.is_exact()) return RealAlg(a.rat_value() + b.rat_value());
  if (a.is_exact() || b.is_exact()) {
    const RealAlg& alg = a.is_exact() ? b : a;
    const Rat& r = (a.is_exact() ? a : b).rat_value();
    if (r.is_zero()) return alg;
    UPoly q = alg.p_.shifted(-r).primitive_normal();
    return RealAlg::collapse(std::move(q), alg.lo_ + r, alg.hi_ + r);
  }
  // Res_y(pa(y), pb(x - y)) vanishes at x = a + b
  BiPoly pa;
  for (const auto& c : a.p_.coeffs()) pa.push_back(UPoly::constant(c));
  BiPoly x_minus_y = {UPoly::x(), UPoly::constant(Rat(-1))};
  BiPoly pbxy;
  {
    const auto& cs = b.p_.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
      pbxy = bipoly_mul(pbxy, x_minus_y);
      if (!it->is_zero())
        pbxy = bipoly_add(pbxy, BiPoly{UPoly::constant(*it)});
    }
  }
  UPoly res = bipoly_resultant(pa, pbxy);
  RealAlg::Box ba(a), bb(b);
  return RealAlg::select_root(
      res, ba, bb,
      [](const RealAlg::Box& x, const RealAlg::Box& y) { return x.lower() + y.lower(); },
      [](const RealAlg::Box& x, const RealAlg::Box& y) { return x.upper() + y.upper(); });
}

inline RealAlg ralg_sub(const RealAlg& a, const RealAlg& b) {
  return ralg_add(a, ralg_neg(b));
}

namespace detail {
// Shrink the interval of an algebraic value until it excludes zero, and strip
// factors of x from the defining polynomial. Requires a != 0. If refinement
// happens to land on the root, the value is rational and is returned instead.
inline std::optional<Rat> make_sign_definite(const RealAlg& a, UPoly& p, Rat& lo,
                                             Rat& hi) {
  p = a.defining();
  lo = a.lower();
  hi = a.upper();
  if (a.is_exact()) return std::nullopt;
  while (lo.sign() <= 0 && hi.sign() >= 0) {
    Rat m = dyadic_between(lo, hi);
    int sm = p.eval(m).sign();
    if (sm == 0) return m;
    if (sm == p.eval(lo).sign()) lo = m; else hi = m;
  }
  while (p.coeff(0).is_zero()) p = UPoly::divexact(p, UPoly::x());
  return std::nullopt;
}
}  // namespace detail

inline RealAlg ralg_mul(const RealAlg& a, const RealAlg& b) {
  if (a.is_exact() && b.is_exact()) return RealAlg(a.rat_value() * b.rat_value());
  if (a.is_exact() || b.is_exact()) {
    const RealAlg& alg = a.is_exact() ? b : a;
    const Rat& r = (a.is_exact() ? a : b).rat_value();
    if (r.is_zero()) return RealAlg(Rat(0));
    // q(x) = pb(x/r) * r^deg
    int d = alg.p_.degree();
    std::vector<Rat> cs(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) cs[i] = alg.p_.coeff(i) * r.pow(static_cast<unsigned>(d - i));
    UPoly q = UPoly(std::move(cs)).primitive_normal();
    Rat l = alg.lo_ * r, h = alg.hi_ * r;
    if (r.sign() < 0) std::swap(l, h);
    return RealAlg::collapse(std::move(q), l, h);
  }
  if (a.sign() == 0 || b.sign() == 0) return RealAlg(Rat(0));
  UPoly pa, pb;
  Rat alo, ahi, blo, bhi;
  if (auto ra = detail::make_sign_definite(a, pa, alo, ahi))
    return ralg_mul(RealAlg(*ra), b);
  if (auto rb = detail::make_sign_definite(b, pb, blo, bhi))
    return ralg_mul(a, RealAlg(*rb));
  // Res_y(pa(y), y^db * pb(x/y)) vanishes at x = a * b
  BiPoly A;
  for (const auto& c : pa.coeffs()) A.push_back(UPoly::constant(c));
  int db = pb.degree();
  BiPoly B(static_cast<size_t>(db) + 1);
  for (int j = 0; j <= db; ++j)
    B[static_cast<size_t>(db - j)] = UPoly::monomial(pb.coeff(j), j);
  bipoly_trim(B);
  UPoly res = bipoly_resultant(A, B);

  RealAlg an = a, bn = b;  // boxes must reflect the sign-definite intervals
  an.lo_ = alo; an.hi_ = ahi; an.p_ = pa;
  bn.lo_ = blo; bn.hi_ = bhi; bn.p_ = pb;
  RealAlg::Box ba(an), bb(bn);
  auto prod_lo = [](const RealAlg::Box& x, const RealAlg::Box& y) {
    Rat v = x.lower() * y.lower();
    for (const Rat& c : {x.lower() * y.upper(), x.upper() * y.lower(), x.upper() * y.upper()})
      if (c < v) v = c;
    return v;
  };
  auto prod_hi = [](const RealAlg::Box& x, const RealAlg::Box& y) {
    Rat v = x.lower() * y.lower();
    for (const Rat& c : {x.lower() * y.upper(), x.upper() * y.lower(), x.upper() * y.upper()})
      if (c > v) v = c;
    return v;
  };
  return RealAlg::select_root(res, ba, bb, prod_lo, prod_hi);
}

inline RealAlg ralg_inv(const RealAlg& a) {
  if (a.sign() == 0) throw DivisionByZero("inverse of zero");
  if (a.is_exact()) return RealAlg(a.rat_value().inv());
  UPoly p;
  Rat lo, hi;
  if (auto r = detail::make_sign_definite(a, p, lo, hi))
    return RealAlg(r->inv());
  UPoly q = p.reversed().primitive_normal();
  Rat l = hi.inv(), h = lo.inv();
  return RealAlg::collapse(std::move(q), l, h);
}

inline RealAlg ralg_sqrt(const RealAlg& a) {
  int s = a.sign();
  if (s < 0) throw NegativeRadicand("square root of a negative number");
  if (s == 0) return RealAlg(Rat(0));
  if (a.is_exact()) {
    Rat root;
    if (rat_is_perfect_square(a.rat_value(), &root)) return RealAlg(root);
    UPoly q({-a.rat_value(), Rat(0), Rat(1)});
    for (const auto& c : isolate_roots(q))
      if (c.sign() > 0) return c;
    throw InternalError("ralg_sqrt: no positive root");
  }
  UPoly q = a.p_.composed(UPoly::monomial(Rat(1), 2));
  std::vector<RealAlg> cands = isolate_roots(q);
  for (const auto& c : cands) {
    if (c.sign() < 0) continue;
    if (ralg_eq(ralg_mul(c, c), a)) return c;
  }
  throw InternalError("ralg_sqrt: no candidate squares to the input");
}

inline double RealAlg::approx() const {
  if (exact_) return rat_.approx();
  Box b(*this);
  for (int i = 0; i < 80 && !b.settled; ++i) b.step();
  return ((b.lower() + b.upper()) * Rat(1, 2)).approx();
}

/// A rational strictly between a and b (requires a < b).
inline Rat rational_between(const RealAlg& a, const RealAlg& b) {
  RealAlg::Box ba(a), bb(b);
  for (int guard = 0; guard < 100000; ++guard) {
    if (ba.upper() < bb.lower()) return dyadic_between(ba.upper(), bb.lower());
    if (ba.settled && bb.settled) {
      if (!(ba.val < bb.val)) throw InternalError("rational_between: not ordered");
      return dyadic_between(ba.val, bb.val);
    }
    ba.step();
    bb.step();
  }
  throw InternalError("rational_between: refinement did not converge");
}

/// A rational strictly below (dir < 0) or above (dir > 0) the value.
inline Rat rational_beside(const RealAlg& a, int dir) {
  if (a.is_exact()) return dir < 0 ? a.rat_value() - Rat(1) : a.rat_value() + Rat(1);
  return dir < 0 ? a.lower() : a.upper();
}

}  // namespace sperkit

#endif
