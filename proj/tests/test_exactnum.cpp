#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "sperkit/realalg.hpp"

using namespace sperkit;

namespace {

UPoly upoly(std::initializer_list<int> lowest_first) {
  std::vector<Rat> cs;
  for (int c : lowest_first) cs.emplace_back(c);
  return UPoly(std::move(cs));
}

RealAlg sqrt2() { return RealAlg::make(upoly({-2, 0, 1}), Rat(1), Rat(2)); }
RealAlg sqrt3() { return RealAlg::make(upoly({-3, 0, 1}), Rat(1), Rat(2)); }

// independent root-counting oracle: sign changes of p on a fine dyadic grid
std::vector<std::pair<Rat, Rat>> grid_sign_change_intervals(const UPoly& p) {
  UPoly s = p.squarefree_part();
  Rat b = s.root_bound();
  std::vector<std::pair<Rat, Rat>> brackets;
  const int steps = 1 << 10;
  Rat width = (b + b) / Rat(steps);
  Rat x = -b;
  int prev = s.eval(x).sign();
  Rat prev_x = x;
  for (int i = 1; i <= steps; ++i) {
    x = -b + width * Rat(i);
    int cur = s.eval(x).sign();
    if (cur == 0) {
      brackets.emplace_back(x, x);
      prev = 0;
      prev_x = x;
      continue;
    }
    if (prev != 0 && cur != prev) brackets.emplace_back(prev_x, x);
    prev = cur;
    prev_x = x;
  }
  return brackets;
}

std::mt19937_64 rng(20260811);

Rat random_rat(int bound = 8) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rat(num(rng), den(rng));
}

RealAlg random_realalg() {
  std::uniform_int_distribution<int> kind(0, 3);
  int k = kind(rng);
  if (k <= 1) return RealAlg(random_rat());
  int deg = (k == 2) ? 2 : 3;
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Rat> cs(static_cast<size_t>(deg) + 1);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (auto& c : cs) c = Rat(coeff(rng));
    UPoly p{std::move(cs)};
    if (p.degree() < 1) continue;
    auto roots = isolate_roots(p);
    if (roots.empty()) continue;
    std::uniform_int_distribution<size_t> pick(0, roots.size() - 1);
    return roots[pick(rng)];
  }
  return RealAlg(random_rat());
}

}  // namespace

TEST_CASE("root isolation matches the grid oracle on x^2-2", "[exactnum]") {
  UPoly p = upoly({-2, 0, 1});
  auto roots = isolate_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(ralg_eq(roots[0], ralg_neg(sqrt2())));
  CHECK(ralg_eq(roots[1], sqrt2()));

  auto brackets = grid_sign_change_intervals(p);
  REQUIRE(brackets.size() == roots.size());
  for (size_t i = 0; i < roots.size(); ++i) {
    CHECK(roots[i].cmp_with_rat(brackets[i].first) >= 0);
    CHECK(roots[i].cmp_with_rat(brackets[i].second) <= 0);
  }
}

TEST_CASE("polynomials without real roots isolate to nothing", "[exactnum]") {
  CHECK(isolate_roots(upoly({1, 0, 1})).empty());
  CHECK_THROWS_AS(isolate_roots(UPoly()), ZeroPolynomial);
}

TEST_CASE("isolate_roots on x^3-x", "[exactnum]") {
  auto roots = isolate_roots(upoly({0, -1, 0, 1}));
  REQUIRE(roots.size() == 3);
  CHECK(ralg_eq(roots[0], RealAlg(-1)));
  CHECK(ralg_eq(roots[1], RealAlg(0)));
  CHECK(ralg_eq(roots[2], RealAlg(1)));
}

TEST_CASE("non-square-free input is reduced before isolation", "[exactnum]") {
  // (x-1)^2 * (x+2)
  UPoly p = upoly({-1, 1}) * upoly({-1, 1}) * upoly({2, 1});
  auto roots = isolate_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(ralg_eq(roots[0], RealAlg(-2)));
  CHECK(ralg_eq(roots[1], RealAlg(1)));
}

TEST_CASE("isolating intervals are certified and pairwise disjoint", "[exactnum]") {
  UPoly p = upoly({-2, 0, 1}) * upoly({0, 1}) * upoly({-9, 0, 1});
  auto roots = isolate_roots(p);
  REQUIRE(roots.size() == 5);
  UPoly s = p.squarefree_part();
  for (size_t i = 0; i + 1 < roots.size(); ++i)
    CHECK(roots[i].upper() < roots[i + 1].lower());
  for (const auto& r : roots) {
    if (r.is_exact()) {
      CHECK(s.eval(r.rat_value()).is_zero());
    } else {
      CHECK(s.eval(r.lower()).sign() * s.eval(r.upper()).sign() < 0);
    }
  }
}

TEST_CASE("addition: inverse, rational fast path, sqrt2+sqrt3", "[exactnum]") {
  CHECK(ralg_eq(ralg_add(sqrt2(), ralg_neg(sqrt2())), RealAlg(0)));

  RealAlg r = ralg_add(RealAlg(Rat(1, 2)), RealAlg(Rat(1, 3)));
  REQUIRE(r.is_exact());
  CHECK(r.rat_value() == Rat(5, 6));

  // resultant oracle gives x^4 - 10x^2 + 1 with the root in [3, 4]
  UPoly quartic = upoly({1, 0, -10, 0, 1});
  RealAlg expect = RealAlg::make(quartic, Rat(3), Rat(4));
  RealAlg got = ralg_add(sqrt2(), sqrt3());
  CHECK(ralg_eq(got, expect));
  CHECK(got.defining() == quartic.primitive_normal());
}

TEST_CASE("multiplication and inverse", "[exactnum]") {
  RealAlg p = ralg_mul(sqrt2(), sqrt3());  // sqrt(6)
  CHECK(sign_at(upoly({-6, 0, 1}), p) == 0);
  CHECK(p.sign() > 0);

  CHECK(ralg_eq(ralg_mul(sqrt2(), sqrt2()), RealAlg(2)));
  CHECK(ralg_eq(ralg_mul(sqrt2(), ralg_inv(sqrt2())), RealAlg(1)));
  CHECK_THROWS_AS(ralg_inv(RealAlg(0)), DivisionByZero);
}

TEST_CASE("comparison", "[exactnum]") {
  CHECK(ralg_cmp(sqrt2(), RealAlg(Rat(3, 2))) == Ord::LT);
  RealAlg other_interval = RealAlg::make(upoly({-2, 0, 1}), Rat(11, 10), Rat(19, 10));
  CHECK(ralg_cmp(sqrt2(), other_interval) == Ord::EQ);
  CHECK(ralg_cmp(RealAlg(0), RealAlg(-1)) == Ord::GT);
}

TEST_CASE("square roots", "[exactnum]") {
  RealAlg two = ralg_sqrt(RealAlg(4));
  REQUIRE(two.is_exact());
  CHECK(two.rat_value() == Rat(2));

  CHECK(ralg_eq(ralg_sqrt(RealAlg(2)), sqrt2()));
  CHECK(ralg_eq(ralg_sqrt(RealAlg(0)), RealAlg(0)));
  CHECK_THROWS_AS(ralg_sqrt(RealAlg(-1)), NegativeRadicand);
}

TEST_CASE("sign evaluation", "[exactnum]") {
  CHECK(sign_at(upoly({-2, 0, 1}), sqrt2()) == 0);
  CHECK(sign_at(upoly({0, 1}), ralg_neg(sqrt2())) == -1);

  // exact-arithmetic oracle: Horner with RealAlg operations
  UPoly p = upoly({1, -2, 0, 1});
  RealAlg acc(0);
  for (int i = p.degree(); i >= 0; --i)
    acc = ralg_add(ralg_mul(acc, sqrt2()), RealAlg(p.coeff(i)));
  CHECK(acc.sign() == 1);
  CHECK(sign_at(p, sqrt2()) == 1);
}

TEST_CASE("field axioms hold exactly on random triples", "[exactnum]") {
  for (int i = 0; i < 60; ++i) {
    RealAlg a = random_realalg(), b = random_realalg(), c = random_realalg();
    CHECK(ralg_eq(ralg_add(a, b), ralg_add(b, a)));
    CHECK(ralg_eq(ralg_add(ralg_add(a, b), c), ralg_add(a, ralg_add(b, c))));
    CHECK(ralg_eq(ralg_mul(a, b), ralg_mul(b, a)));
    CHECK(ralg_eq(ralg_mul(ralg_mul(a, b), c), ralg_mul(a, ralg_mul(b, c))));
    CHECK(ralg_eq(ralg_mul(a, ralg_add(b, c)),
                  ralg_add(ralg_mul(a, b), ralg_mul(a, c))));
    CHECK(ralg_eq(ralg_add(a, ralg_neg(a)), RealAlg(0)));
    if (a.sign() != 0) CHECK(ralg_eq(ralg_mul(a, ralg_inv(a)), RealAlg(1)));
  }
}

TEST_CASE("order is total and respects the cone conditions", "[exactnum]") {
  for (int i = 0; i < 80; ++i) {
    RealAlg a = random_realalg(), b = random_realalg();
    Ord ab = ralg_cmp(a, b), ba = ralg_cmp(b, a);
    CHECK(static_cast<int>(ab) == -static_cast<int>(ba));
    if (ab != Ord::GT && ba != Ord::GT) CHECK(ab == Ord::EQ);
    if (a.sign() >= 0 && b.sign() >= 0) {
      CHECK(ralg_add(a, b).sign() >= 0);
      CHECK(ralg_mul(a, b).sign() >= 0);
    }
  }
}

TEST_CASE("sqrt round trip on random nonnegative values", "[exactnum]") {
  for (int i = 0; i < 30; ++i) {
    RealAlg a = random_realalg();
    if (a.sign() < 0) a = ralg_neg(a);
    RealAlg r = ralg_sqrt(a);
    CHECK(r.sign() >= 0);
    CHECK(ralg_eq(ralg_mul(r, r), a));
  }
}

TEST_CASE("monic odd-degree polynomials always have a real root", "[exactnum]") {
  std::uniform_int_distribution<int> degpick(0, 2);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int i = 0; i < 60; ++i) {
    int deg = 2 * degpick(rng) + 1;
    std::vector<Rat> cs(static_cast<size_t>(deg) + 1);
    for (int j = 0; j < deg; ++j) cs[static_cast<size_t>(j)] = Rat(coeff(rng));
    cs.back() = Rat(1);
    auto roots = isolate_roots(UPoly(std::move(cs)));
    CHECK(!roots.empty());
  }
}

TEST_CASE("rationals stay canonical", "[exactnum]") {
  Rat r(Int(4), Int(-6));
  CHECK(r.num() == -2);
  CHECK(r.den() == 3);
  CHECK(Rat::parse("5/6").str() == "5/6");
  CHECK(Rat::parse("-14/7").str() == "-2");
  CHECK_THROWS_AS(Rat(Int(1), Int(0)), DivisionByZero);
  Rat d = dyadic_between(Rat(1, 3), Rat(1, 2));
  CHECK(Rat(1, 3) < d);
  CHECK(d < Rat(1, 2));
}
