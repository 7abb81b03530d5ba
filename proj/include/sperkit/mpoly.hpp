#ifndef SPERKIT_MPOLY_HPP
#define SPERKIT_MPOLY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sperkit/formula.hpp"
#include "sperkit/rat.hpp"

namespace sperkit {

/// Multivariate polynomial in recursive dense form over a fixed variable
/// order: either a rational constant, or a dense coefficient vector in the
/// highest variable present, with coefficients over strictly lower variables.
class MPoly {
 public:
  MPoly() : const_(true), k_(0) {}
  static MPoly constant(const Rat& r) {
    MPoly m;
    m.k_ = r;
    return m;
  }
  static MPoly variable(int v) {
    MPoly m;
    m.const_ = false;
    m.var_ = v;
    m.cs_ = {MPoly::constant(Rat(0)), MPoly::constant(Rat(1))};
    return m;
  }
  static MPoly from_coeffs(int var, std::vector<MPoly> cs) {
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
    if (cs.empty()) return MPoly();
    if (cs.size() == 1) return cs[0];
    MPoly m;
    m.const_ = false;
    m.var_ = var;
    m.cs_ = std::move(cs);
    return m;
  }

  bool is_const() const { return const_; }
  bool is_zero() const { return const_ && k_.is_zero(); }
  const Rat& const_value() const {
    if (!const_) throw InternalError("const_value on non-constant polynomial");
    return k_;
  }
  int top_var() const { return const_ ? -1 : var_; }
  const std::vector<MPoly>& coeffs() const { return cs_; }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.const_ && b.const_) return constant(a.k_ + b.k_);
    if (a.const_ || (!b.const_ && a.var_ < b.var_)) {
      std::vector<MPoly> cs = b.cs_;
      cs[0] = cs[0] + a;
      return from_coeffs(b.var_, std::move(cs));
    }
    if (b.const_ || a.var_ > b.var_) {
      std::vector<MPoly> cs = a.cs_;
      cs[0] = cs[0] + b;
      return from_coeffs(a.var_, std::move(cs));
    }
    std::vector<MPoly> cs(std::max(a.cs_.size(), b.cs_.size()));
    for (size_t i = 0; i < cs.size(); ++i) {
      if (i < a.cs_.size()) cs[i] = cs[i] + a.cs_[i];
      if (i < b.cs_.size()) cs[i] = cs[i] + b.cs_[i];
    }
    return from_coeffs(a.var_, std::move(cs));
  }

  MPoly operator-() const {
    if (const_) return constant(-k_);
    std::vector<MPoly> cs(cs_.size());
    for (size_t i = 0; i < cs_.size(); ++i) cs[i] = -cs_[i];
    return from_coeffs(var_, std::move(cs));
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    if (a.const_ && b.const_) return constant(a.k_ * b.k_);
    if (a.const_ || (!b.const_ && a.var_ < b.var_)) {
      std::vector<MPoly> cs(b.cs_.size());
      for (size_t i = 0; i < b.cs_.size(); ++i) cs[i] = b.cs_[i] * a;
      return from_coeffs(b.var_, std::move(cs));
    }
    if (b.const_ || a.var_ > b.var_) {
      std::vector<MPoly> cs(a.cs_.size());
      for (size_t i = 0; i < a.cs_.size(); ++i) cs[i] = a.cs_[i] * b;
      return from_coeffs(a.var_, std::move(cs));
    }
    std::vector<MPoly> cs(a.cs_.size() + b.cs_.size() - 1);
    for (size_t i = 0; i < a.cs_.size(); ++i)
      for (size_t j = 0; j < b.cs_.size(); ++j)
        cs[i + j] = cs[i + j] + a.cs_[i] * b.cs_[j];
    return from_coeffs(a.var_, std::move(cs));
  }

  MPoly pow(int e) const {
    MPoly r = constant(Rat(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  int total_degree() const {
    if (const_) return 0;
    int d = 0;
    for (size_t i = 0; i < cs_.size(); ++i) {
      if (cs_[i].is_zero()) continue;
      d = std::max(d, static_cast<int>(i) + cs_[i].total_degree());
    }
    return d;
  }

  int degree_in(int v) const {
    if (const_) return 0;
    if (var_ == v) return static_cast<int>(cs_.size()) - 1;
    if (var_ < v) return 0;
    int d = 0;
    for (const auto& c : cs_) d = std::max(d, c.degree_in(v));
    return d;
  }

  MPoly subst(int v, const Rat& val) const {
    if (const_ || var_ < v) return *this;
    if (var_ == v) {
      MPoly acc;
      for (auto it = cs_.rbegin(); it != cs_.rend(); ++it)
        acc = acc * constant(val) + *it;
      return acc;
    }
    std::vector<MPoly> cs(cs_.size());
    for (size_t i = 0; i < cs_.size(); ++i) cs[i] = cs_[i].subst(v, val);
    return from_coeffs(var_, std::move(cs));
  }

  Rat eval(const std::vector<Rat>& env) const {
    if (const_) return k_;
    if (var_ >= static_cast<int>(env.size()))
      throw InternalError("MPoly::eval: environment too small");
    Rat acc(0);
    for (auto it = cs_.rbegin(); it != cs_.rend(); ++it)
      acc = acc * env[static_cast<size_t>(var_)] + it->eval(env);
    return acc;
  }

  static int cmp(const MPoly& a, const MPoly& b) {
    if (a.const_ != b.const_) return a.const_ ? -1 : 1;
    if (a.const_) return cmp_rat(a.k_, b.k_);
    if (a.var_ != b.var_) return a.var_ < b.var_ ? -1 : 1;
    if (a.cs_.size() != b.cs_.size()) return a.cs_.size() < b.cs_.size() ? -1 : 1;
    for (size_t i = a.cs_.size(); i-- > 0;) {
      int c = cmp(a.cs_[i], b.cs_[i]);
      if (c != 0) return c;
    }
    return 0;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return cmp(a, b) == 0; }
  friend bool operator<(const MPoly& a, const MPoly& b) { return cmp(a, b) < 0; }

  int leading_sign() const {
    if (const_) return k_.sign();
    return cs_.back().leading_sign();
  }

  /// Scale to integer coefficients with content 1 and positive recursive
  /// leading coefficient; `flipped` reports whether the sign was reversed.
  MPoly sign_normal(bool* flipped = nullptr) const {
    if (is_zero()) {
      if (flipped) *flipped = false;
      return *this;
    }
    Int den_lcm(1), num_gcd(0);
    gather_content(den_lcm, num_gcd);
    bool flip = leading_sign() < 0;
    if (flipped) *flipped = flip;
    Rat scale = Rat(den_lcm, num_gcd);
    if (flip) scale = -scale;
    return *this * constant(scale);
  }

 private:
  void gather_content(Int& den_lcm, Int& num_gcd) const {
    if (const_) {
      if (k_.is_zero()) return;
      Int d = k_.den(), n = k_.num();
      Int g;
      mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
      den_lcm = den_lcm / g * d;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
      return;
    }
    for (const auto& c : cs_) c.gather_content(den_lcm, num_gcd);
  }

  bool const_;
  Rat k_;
  int var_ = -1;
  std::vector<MPoly> cs_;
};

// ---------------------------------------------------------------------------
// Conversions between terms and polynomials

inline MPoly term_to_mpoly(const TermPtr& t, const std::map<std::string, int>& index) {
  switch (t->kind) {
    case Term::Kind::Const:
      return MPoly::constant(t->value);
    case Term::Kind::Var: {
      auto it = index.find(t->name);
      if (it == index.end()) throw UnknownVariable(t->name);
      return MPoly::variable(it->second);
    }
    case Term::Kind::Add:
      return term_to_mpoly(t->a, index) + term_to_mpoly(t->b, index);
    case Term::Kind::Mul:
      return term_to_mpoly(t->a, index) * term_to_mpoly(t->b, index);
    case Term::Kind::Neg:
      return -term_to_mpoly(t->a, index);
    case Term::Kind::Pow:
      return term_to_mpoly(t->a, index).pow(t->exponent);
  }
  return MPoly();
}

inline TermPtr mpoly_to_term(const MPoly& p, const std::vector<std::string>& names) {
  if (p.is_const()) {
    const Rat& r = p.const_value();
    if (r.sign() < 0) return t_neg(t_const(-r));
    return t_const(r);
  }
  int v = p.top_var();
  if (v >= static_cast<int>(names.size()))
    throw InternalError("mpoly_to_term: missing variable name");
  TermPtr var = t_var(names[static_cast<size_t>(v)]);
  TermPtr sum;
  const auto& cs = p.coeffs();
  for (size_t i = cs.size(); i-- > 0;) {
    if (cs[i].is_zero()) continue;
    TermPtr piece;
    if (i == 0) {
      piece = mpoly_to_term(cs[0], names);
    } else {
      TermPtr vp = i == 1 ? var : t_pow(var, static_cast<int>(i));
      if (cs[i].is_const()) {
        const Rat& r = cs[i].const_value();
        if (r == Rat(1)) piece = vp;
        else if (r == Rat(-1)) piece = t_neg(vp);
        else if (r.sign() < 0) piece = t_neg(t_mul(t_const(-r), vp));
        else piece = t_mul(t_const(r), vp);
      } else {
        piece = t_mul(mpoly_to_term(cs[i], names), vp);
      }
    }
    sum = sum ? t_add(sum, piece) : piece;
  }
  return sum ? sum : t_const(Rat(0));
}

/// Coefficients of `var` with entries over strictly lower variables.
/// `var` must be at least the polynomial's top variable.
inline std::vector<MPoly> mpoly_coeffs_in(const MPoly& p, int var) {
  if (p.is_zero()) return {};
  if (p.is_const() || p.top_var() < var) return {p};
  if (p.top_var() == var) return p.coeffs();
  throw InternalError("mpoly_coeffs_in: variable is not the highest");
}

}  // namespace sperkit

#endif
