#include "weyl/weyl_element.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace weyl;

namespace {

WeylMonomial mono1(int a, int b) { return {MultiIndex{a}, MultiIndex{b}}; }
WeylMonomial mono2(int a1, int a2, int b1, int b2) {
  return {MultiIndex{a1, a2}, MultiIndex{b1, b2}};
}

const WeylElement kX = WeylElement::monomial(mono1(1, 0));
const WeylElement kD = WeylElement::monomial(mono1(0, 1));
const WeylElement kXD = WeylElement::monomial(mono1(1, 1));

MultiPoly x_power(int m) { return MultiPoly::monomial(MultiIndex{m}, BigRat(1)); }

}  // namespace

TEST_CASE("monom_compose defining cases") {
  // d o x = x d + 1, the generator relation.
  WeylElement expected = kXD + WeylElement::one(1);
  CHECK(monom_compose(mono1(0, 1), mono1(1, 0)) == expected);
  // x o d = x d (gamma forced to zero).
  CHECK(monom_compose(mono1(1, 0), mono1(0, 1)) == kXD);
  // (x d) o (x d) = x^2 d^2 + x d.
  const WeylElement sq = WeylElement::monomial(mono1(2, 2)) + kXD;
  CHECK(monom_compose(mono1(1, 1), mono1(1, 1)) == sq);
  // Apply-oracle: (x d)^2 acts on x^m as m^2.
  for (int m = 0; m <= 6; ++m)
    CHECK(apply(sq, x_power(m)) == BigRat(m) * BigRat(m) * x_power(m));
  CHECK_THROWS_AS(monom_compose(mono1(1, 0), mono2(1, 0, 0, 0)), std::invalid_argument);
}

TEST_CASE("compose bilinear cases") {
  testers::Rng rng(0xabc);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform(1, 2);
    const WeylElement x = testers::random_element(rng, n, 4, 3, 5);
    CHECK(compose(x, WeylElement::one(n)) == x);
    CHECK(compose(WeylElement::one(n), x) == x);
  }
  CHECK(compose(kD, kX) - compose(kX, kD) == WeylElement::one(1));

  // x1 d2 o x2 d1 = x1 x2 d1 d2 + x1 d1, checked against the apply oracle.
  const WeylElement lhs = compose(WeylElement::monomial(mono2(1, 0, 0, 1)),
                                  WeylElement::monomial(mono2(0, 1, 1, 0)));
  const WeylElement expected =
      WeylElement::monomial(mono2(1, 1, 1, 1)) + WeylElement::monomial(mono2(1, 0, 1, 0));
  CHECK(lhs == expected);
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const MultiPoly f = MultiPoly::monomial(MultiIndex{a, b}, BigRat(1));
      const MultiPoly via_pair =
          apply(WeylElement::monomial(mono2(1, 0, 0, 1)),
                apply(WeylElement::monomial(mono2(0, 1, 1, 0)), f));
      CHECK(apply(lhs, f) == via_pair);
    }
  }
}

TEST_CASE("addition and scaling") {
  testers::Rng rng(0xadd);
  const WeylElement x = testers::random_element(rng, 2, 4, 3, 5);
  CHECK(x + WeylElement(2) == x);
  CHECK((BigRat(0) * x).is_zero());
  CHECK((kXD + WeylElement::one(1)) + (kXD - WeylElement::one(1)) == BigRat(2) * kXD);
}

TEST_CASE("weights and gradings") {
  CHECK(multiweight(mono1(2, 1)) == std::vector<int>{1});
  CHECK(weight(mono1(2, 1)) == 1);
  CHECK(weight(mono2(2, 1, 2, 1)) == 0);
  CHECK(multiweight(mono2(2, 1, 2, 1)) == std::vector<int>{0, 0});
  CHECK(multiweight(mono2(1, 0, 0, 1)) == std::vector<int>{1, -1});
  CHECK(weight(mono2(1, 0, 0, 1)) == 0);
}

TEST_CASE("grading is additive under composition") {
  testers::Rng rng(0x9add);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(1, 2);
    const WeylMonomial m1 = testers::random_monomial(rng, n, 3);
    const WeylMonomial m2 = testers::random_monomial(rng, n, 3);
    std::vector<int> expected(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      expected[static_cast<size_t>(i)] = multiweight(m1)[static_cast<size_t>(i)] +
                                         multiweight(m2)[static_cast<size_t>(i)];
    const WeylElement prod = monom_compose(m1, m2);
    CHECK_FALSE(prod.is_zero());  // all gamma-sum coefficients are positive
    for (const auto& [m, c] : prod.terms()) {
      CHECK(multiweight(m) == expected);
      CHECK(weight(m) == weight(m1) + weight(m2));
    }
  }
}

TEST_CASE("projections partition the element") {
  const WeylElement mix = kXD + WeylElement::monomial(mono1(2, 0));
  CHECK(project_weight(mix, 0) == kXD);
  CHECK(project_weight(mix, 2) == WeylElement::monomial(mono1(2, 0)));
  CHECK(project_weight(mix, 5).is_zero());

  const WeylElement two = WeylElement::monomial(mono2(1, 0, 0, 1)) +
                          WeylElement::monomial(mono2(0, 1, 1, 0));
  CHECK(project_multiweight(two, {1, -1}) == WeylElement::monomial(mono2(1, 0, 0, 1)));

  testers::Rng rng(0x9a7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform(1, 2);
    const WeylElement x = testers::random_element(rng, n, 5, 3, 5);
    WeylElement rebuilt(n);
    for (const auto& [w, part] : multiweight_components(x)) {
      CHECK(project_multiweight(x, w) == part);
      rebuilt = rebuilt + part;
    }
    CHECK(rebuilt == x);
  }
}

TEST_CASE("homogeneity queries") {
  CHECK(homogeneous_weight(WeylElement(1)) == std::nullopt);
  CHECK(homogeneous_weight(kXD + WeylElement::one(1)) == 0);
  CHECK(homogeneous_weight(kX + kD) == std::nullopt);
  const WeylElement two = WeylElement::monomial(mono2(1, 0, 0, 1)) +
                          WeylElement::monomial(mono2(0, 1, 1, 0));
  CHECK(homogeneous_weight(two) == 0);
  CHECK(homogeneous_multiweight(two) == std::nullopt);
  CHECK(homogeneous_multiweight(kX) == std::vector<int>{1});
}

TEST_CASE("bar is an anti-involution") {
  CHECK(bar(WeylElement::monomial(mono1(2, 1))) == WeylElement::monomial(mono1(1, 2)));
  // Both sides computed independently: bar(d o x) and bar(x) o bar(d).
  CHECK(bar(compose(kD, kX)) == compose(bar(kX), bar(kD)));
  CHECK(bar(compose(kD, kX)) == kXD + WeylElement::one(1));

  testers::Rng rng(0xbae);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(1, 2);
    const WeylElement x = testers::random_element(rng, n, 4, 3, 5);
    const WeylElement y = testers::random_element(rng, n, 4, 3, 5);
    CHECK(bar(bar(x)) == x);
    CHECK(bar(compose(x, y)) == compose(bar(y), bar(x)));
    CHECK(bar(x + y) == bar(x) + bar(y));
  }
}

TEST_CASE("self and skew parts") {
  CHECK(self_part(kX) == BigRat(1, 2) * (kX + kD));
  CHECK(skew_part(WeylElement::monomial(mono1(2, 1))) ==
        BigRat(1, 2) * (WeylElement::monomial(mono1(2, 1)) - WeylElement::monomial(mono1(1, 2))));
  CHECK(self_part(kXD) == kXD);

  testers::Rng rng(0x5e1f);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(1, 2);
    const WeylElement x = testers::random_element(rng, n, 4, 3, 5);
    const WeylElement s = self_part(x);
    const WeylElement k = skew_part(x);
    CHECK(s + k == x);
    CHECK(bar(s) == s);
    CHECK(bar(k) == -k);
    CHECK(self_part(s) == s);
    CHECK(skew_part(k) == k);
    CHECK(self_part(k).is_zero());
  }
}

TEST_CASE("apply acts as differential operators") {
  CHECK(apply(kD, x_power(3)) == BigRat(3) * x_power(2));
  for (int m = 0; m <= 6; ++m) CHECK(apply(kXD, x_power(m)) == BigRat(m) * x_power(m));
  CHECK(apply(WeylElement::monomial(mono1(2, 2)), x_power(3)) == BigRat(6) * x_power(3));
  CHECK(apply(kD, x_power(0)).is_zero());
  CHECK_THROWS_AS(apply(kD, MultiPoly(2)), std::invalid_argument);
}

TEST_CASE("composition associates exactly") {
  testers::Rng rng(0xa550c);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(1, 2);
    const WeylElement x = testers::random_element(rng, n, 3, 3, 5);
    const WeylElement y = testers::random_element(rng, n, 3, 3, 5);
    const WeylElement z = testers::random_element(rng, n, 3, 3, 5);
    CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
  }
}

TEST_CASE("composition matches the operator-action oracle") {
  // Independent validation of the gamma-sum law: composing then applying
  // equals applying twice.
  testers::Rng rng(0x0ac1e);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(1, 2);
    const WeylElement x = testers::random_element(rng, n, 4, 3, 5);
    const WeylElement y = testers::random_element(rng, n, 4, 3, 5);
    const MultiPoly f = testers::random_poly(rng, n, 3, 5, 5);
    CHECK(apply(compose(x, y), f) == apply(x, apply(y, f)));
  }
}

TEST_CASE("factor_monomial splits by variable slot") {
  const WeylMonomial m = mono2(2, 1, 0, 3);  // x1^2 x2 d2^3
  const auto factors = factor_monomial(m);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0] == mono1(2, 0));
  CHECK(factors[1] == mono1(1, 3));

  const auto units = factor_monomial(WeylMonomial::one(3));
  for (const auto& f : units) CHECK(f == WeylMonomial::one(1));

  CHECK(factor_monomial(mono1(2, 1)) == std::vector<WeylMonomial>{mono1(2, 1)});

  // Composing the factors embedded back into slots reconstructs m.
  testers::Rng rng(0xfac);
  for (int trial = 0; trial < 50; ++trial) {
    const WeylMonomial random = testers::random_monomial(rng, 2, 3);
    const auto fs = factor_monomial(random);
    WeylElement rebuilt = WeylElement::one(2);
    for (size_t slot = 0; slot < fs.size(); ++slot) {
      MultiIndex alpha(2), beta(2);
      alpha.set(static_cast<int>(slot), fs[slot].alpha[0]);
      beta.set(static_cast<int>(slot), fs[slot].beta[0]);
      rebuilt = compose(rebuilt, WeylElement::monomial({alpha, beta}));
    }
    CHECK(rebuilt == WeylElement::monomial(random));
  }
}
