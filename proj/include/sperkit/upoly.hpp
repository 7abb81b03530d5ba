#ifndef SPERKIT_UPOLY_HPP
#define SPERKIT_UPOLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "sperkit/rat.hpp"

namespace sperkit {

/// Univariate polynomial over Rat, coefficients lowest degree first.
/// The empty coefficient list is the zero polynomial; otherwise the last
/// entry is nonzero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> cs) : c_(std::move(cs)) { trim(); }
  static UPoly constant(const Rat& r) {
    return r.is_zero() ? UPoly() : UPoly(std::vector<Rat>{r});
  }
  static UPoly x() { return UPoly({Rat(0), Rat(1)}); }
  // c * x^k
  static UPoly monomial(const Rat& c, int k) {
    if (c.is_zero()) return UPoly();
    std::vector<Rat> cs(static_cast<size_t>(k) + 1, Rat(0));
    cs.back() = c;
    return UPoly(std::move(cs));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& lc() const { return c_.back(); }
  const Rat& coeff(int i) const {
    static const Rat kZero(0);
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : kZero;
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_constant() const { return c_.size() <= 1; }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UPoly(std::move(d));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return UPoly(std::move(r));
  }
  UPoly operator-() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  UPoly scaled(const Rat& s) const {
    if (s.is_zero()) return UPoly();
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return UPoly(std::move(r));
  }
  // p(x) -> p(x + s)
  UPoly shifted(const Rat& s) const { return composed(UPoly({s, Rat(1)})); }
  // p(x) -> p(-x)
  UPoly reflected() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (i % 2 == 0) ? c_[i] : -c_[i];
    return UPoly(std::move(r));
  }
  // p(x) -> p(g(x))
  UPoly composed(const UPoly& g) const {
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * g + UPoly::constant(*it);
    return acc;
  }
  // x^deg * p(1/x)
  UPoly reversed() const {
    std::vector<Rat> r(c_.rbegin(), c_.rend());
    return UPoly(std::move(r));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // quotient/remainder; divisor must be nonzero
  static std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    UPoly r = a;
    std::vector<Rat> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1,
                       Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int k = r.degree() - b.degree();
      Rat f = r.lc() / b.lc();
      q[k] = q[k] + f;
      r = r - UPoly::monomial(f, k) * b;
    }
    return {UPoly(std::move(q)), r};
  }

  // exact division; throws if b does not divide a
  static UPoly divexact(const UPoly& a, const UPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw InternalError("divexact: nonzero remainder");
    return q;
  }

  // monic gcd (1 for coprime, 0 only if both zero)
  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divrem(a, b).second;
      if (!r.is_zero()) r = r.scaled(r.lc().abs().inv());
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.lc().inv());
  }

  /// p / gcd(p, p'); same real roots, all simple. Result in primitive
  /// integer form with positive leading coefficient.
  UPoly squarefree_part() const {
    if (is_zero()) return UPoly();
    if (degree() == 0) return UPoly::constant(Rat(1));
    UPoly g = gcd(*this, derivative());
    UPoly s = g.degree() <= 0 ? *this : divexact(*this, g);
    return s.primitive_normal();
  }

  /// Integer coefficients with content 1 and positive leading coefficient.
  UPoly primitive_normal() const {
    if (is_zero()) return UPoly();
    Int l(1);
    for (const auto& c : c_) {
      Int d = c.den();
      Int g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    Int content(0);
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
      r[i] = c_[i] * Rat(l);
      Int n = r[i].num();
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
    if (content == 0) content = 1;
    if (r.back().sign() < 0) content = -content;
    Rat inv = Rat(Int(1), content);
    for (auto& c : r) c = c * inv;
    return UPoly(std::move(r));
  }

  /// Cauchy bound: every real root has absolute value < this.
  Rat root_bound() const {
    if (is_zero() || degree() == 0) return Rat(1);
    Rat m(0);
    for (int i = 0; i < degree(); ++i) {
      Rat q = (coeff(i) / lc()).abs();
      if (q > m) m = q;
    }
    return Rat(1) + m;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rat& c = coeff(i);
      if (c.is_zero()) continue;
      Rat a = c.abs();
      if (out.empty()) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? "-" : "+";
      }
      bool unit = (a == Rat(1));
      if (i == 0) {
        out += a.str();
      } else {
        if (!unit) out += a.str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// ---------------------------------------------------------------------------
// Sturm sequences and root counting

/// Sturm sequence p, p', -rem(...), ... with positive rescaling per step.
inline std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    const UPoly& a = seq[seq.size() - 2];
    const UPoly& b = seq[seq.size() - 1];
    UPoly r = UPoly::divrem(a, b).second;
    if (r.is_zero()) break;
    r = (-r).scaled(r.lc().abs().inv());
    seq.push_back(std::move(r));
  }
  return seq;
}

inline int sign_at_inf(const UPoly& p, bool plus) {
  if (p.is_zero()) return 0;
  int s = p.lc().sign();
  if (!plus && p.degree() % 2 == 1) s = -s;
  return s;
}

inline int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

inline int sturm_variations_at(const std::vector<UPoly>& seq, const Rat& x) {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const auto& q : seq) s.push_back(q.eval(x).sign());
  return variations(s);
}

inline int sturm_variations_inf(const std::vector<UPoly>& seq, bool plus) {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const auto& q : seq) s.push_back(sign_at_inf(q, plus));
  return variations(s);
}

/// Number of distinct real roots in the open interval (a, b).
/// Requires p(a) != 0 and p(b) != 0.
inline int count_roots_between(const std::vector<UPoly>& seq, const Rat& a,
                               const Rat& b) {
  return sturm_variations_at(seq, a) - sturm_variations_at(seq, b);
}

inline int count_real_roots(const std::vector<UPoly>& seq) {
  return sturm_variations_inf(seq, false) - sturm_variations_inf(seq, true);
}

// ---------------------------------------------------------------------------
// Resultants of bivariate polynomials, used to produce defining polynomials
// for sums, products and specializations of algebraic numbers.

/// Polynomial in a main variable whose coefficients are UPoly in a second
/// variable; index = power of the main variable.
using BiPoly = std::vector<UPoly>;

inline void bipoly_trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline BiPoly bipoly_add(const BiPoly& a, const BiPoly& b) {
  BiPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  bipoly_trim(r);
  return r;
}

inline BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b) {
  if (a.empty() || b.empty()) return {};
  BiPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  bipoly_trim(r);
  return r;
}

/// Fraction-free (Bareiss) determinant over the ring of UPoly.
inline UPoly bareiss_det(std::vector<std::vector<UPoly>> m) {
  const size_t n = m.size();
  if (n == 0) return UPoly::constant(Rat(1));
  int sign = 1;
  UPoly prev = UPoly::constant(Rat(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return UPoly();
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = UPoly::divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = UPoly();
    }
    prev = m[k][k];
  }
  UPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

/// Resultant of a and b with respect to the main variable; the result is a
/// UPoly in the coefficient variable.
inline UPoly bipoly_resultant(const BiPoly& a, const BiPoly& b) {
  if (a.empty() || b.empty()) return UPoly();
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  if (m == 0 && n == 0) return UPoly::constant(Rat(1));
  if (m == 0) {
    UPoly r = UPoly::constant(Rat(1));
    for (int i = 0; i < n; ++i) r = r * a[0];
    return r;
  }
  if (n == 0) {
    UPoly r = UPoly::constant(Rat(1));
    for (int i = 0; i < m; ++i) r = r * b[0];
    return r;
  }
  const size_t dim = static_cast<size_t>(m + n);
  std::vector<std::vector<UPoly>> s(dim, std::vector<UPoly>(dim));
  for (int row = 0; row < n; ++row)
    for (int j = 0; j <= m; ++j) s[row][row + j] = a[static_cast<size_t>(m - j)];
  for (int row = 0; row < m; ++row)
    for (int j = 0; j <= n; ++j) s[n + row][row + j] = b[static_cast<size_t>(n - j)];
  return bareiss_det(std::move(s));
}

}  // namespace sperkit

#endif
