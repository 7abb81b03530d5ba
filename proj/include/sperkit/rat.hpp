#ifndef SPERKIT_RAT_HPP
#define SPERKIT_RAT_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "sperkit/errors.hpp"

namespace sperkit {

using Int = mpz_class;

/// Exact rational number. Always canonical: gcd(|num|, den) = 1 and den > 0.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}                // NOLINT: implicit on purpose
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(const Int& n) : v_(n) {}
  Rat(const Int& n, const Int& d) : v_(n, d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    v_.canonicalize();
  }
  Rat(int n, int d) : Rat(Int(n), Int(d)) {}
  explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "n", "n/d", optional leading '-'.
  static Rat parse(const std::string& s) {
    try {
      mpq_class q(s);
      if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
      q.canonicalize();
      return Rat(std::move(q));
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed rational literal '" + s + "'");
    }
  }

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  Rat inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rat(mpq_class(1 / v_));
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return Rat(n, d);
  }

  // Largest integer <= value.
  Int floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }

  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  double approx() const { return v_.get_d(); }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline int cmp_rat(const Rat& a, const Rat& b) {
  return cmp(a.raw(), b.raw());
}

/// A dyadic rational in the middle half of (lo, hi) (requires lo < hi), so
/// repeated splitting shrinks intervals geometrically while keeping endpoint
/// denominators small.
inline Rat dyadic_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw InternalError("dyadic_between: empty interval");
  Rat w = hi - lo;
  Int two_k = 1;
  // smallest power of two with 2^k * (hi-lo) > 4
  Rat scaled = w;
  while (!(scaled > Rat(4))) {
    two_k *= 2;
    scaled = scaled * Rat(2);
  }
  Rat mid = (lo + hi) * Rat(1, 2);
  Int n = (mid * Rat(two_k)).floor();
  Rat cand(n, two_k);
  if (!(lo < cand)) cand = Rat(n + 1, two_k);
  if (!(lo < cand && cand < hi)) throw InternalError("dyadic_between: no candidate");
  return cand;
}

inline bool rat_is_perfect_square(const Rat& r, Rat* root) {
  if (r.sign() < 0) return false;
  Int n = r.num(), d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return false;
  Int sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  if (root) *root = Rat(sn, sd);
  return true;
}

}  // namespace sperkit

#endif
