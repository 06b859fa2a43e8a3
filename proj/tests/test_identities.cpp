#include "weyl/identities.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace weyl;

TEST_CASE("lemma 1 polynomial identity") {
  CHECK(lemma1_check(0));  // both sides 1
  CHECK(lemma1_check(1));  // LHS enumerates to 1 + (1+x)(y+z+yz)
  for (int n = 2; n <= 5; ++n) CHECK(lemma1_check(n));
}

TEST_CASE("corollary 2 binomial symmetry") {
  for (int n = 0; n <= 5; ++n)
    for (int a = 0; a <= n; ++a) CHECK(corollary2_check(n, a, a));
  CHECK(corollary2_check(2, 0, 1));  // both sides 4 by direct enumeration
  for (int n = 0; n <= 8; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) CHECK(corollary2_check(n, a, b));
}

TEST_CASE("lemma 3 cleared two-sided gamma sum") {
  CHECK(lemma3_check(MultiIndex{2}, MultiIndex{2}, MultiIndex{3}));
  CHECK(lemma3_check(MultiIndex{1}, MultiIndex{2}, MultiIndex{3}));
  for (int arity = 1; arity <= 2; ++arity) {
    MultiIndex bound(arity);
    for (int i = 0; i < arity; ++i) bound.set(i, 3);
    const auto values = all_upto(bound);
    for (const auto& alpha : values)
      for (const auto& beta : values)
        for (const auto& theta : values) CHECK(lemma3_check(alpha, beta, theta));
  }
  CHECK_THROWS_AS(lemma3_check(MultiIndex{1}, MultiIndex{1, 1}, MultiIndex{1}),
                  std::invalid_argument);
}

TEST_CASE("lemma 100 generating-polynomial identity") {
  CHECK(lemma100_check(3, 1, 4));  // b < c: both sides vanish
  CHECK(lemma100_check(0, 5, 2));  // a = 0: single constant term C(b,c)
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c) CHECK(lemma100_check(a, b, c));
}

TEST_CASE("d and d-tilde polynomials") {
  // a=1, b=1, c=0: both sides are 2xy + z.
  MultiIndex exy(3);
  exy.set(0, 1);
  exy.set(1, 1);
  MultiIndex ez(3);
  ez.set(2, 1);
  const MultiPoly expected =
      MultiPoly::monomial(exy, BigRat(2)) + MultiPoly::monomial(ez, BigRat(1));
  CHECK(d_poly(1, 1, 0) == expected);
  CHECK(d_tilde_poly(1, 1, 0) == expected);

  // c > a+b: every binomial vanishes.
  CHECK(d_poly(2, 1, 4).is_zero());
  CHECK(d_tilde_poly(2, 1, 4).is_zero());

  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      for (int c = 0; c <= 5; ++c) CHECK(lemma101_check(a, b, c));
}

TEST_CASE("mu polynomial") {
  for (int a = 0; a <= 3; ++a)
    for (int j = 0; j <= 3; ++j)
      CHECK(mu_poly(a, 0, j) == MultiPoly::constant(1, BigRat(binom(a + j, a))));
  // a=1, i=1, j=1: C(1,0)C(2,1) + C(1,1)C(2,2) t = 2 + t.
  CHECK(mu_poly(1, 1, 1) ==
        MultiPoly::constant(1, BigRat(2)) + MultiPoly::variable(1, 0));
  // a=0, i=1, j=0: the t coefficient C(1,1)C(0,1) vanishes.
  CHECK(mu_poly(0, 1, 0) == MultiPoly::constant(1, BigRat(1)));
}

TEST_CASE("eta sums") {
  for (int a = 0; a <= 6; ++a) CHECK(eta(a, 0, 0, 0) == factorial(a));
  CHECK(eta(0, 0, 1, 1) == 3);  // 2! + 1
  CHECK(eta(0, 0, 0, 1) == 1);  // single term 0!*1!
  CHECK(eta(1, 0, 1, 1) == 8);
}

TEST_CASE("eta matches its factored rewriting") {
  // eta(a,0,i,j) = (a+i)! j! sum_{i1} C(i,i1) C(a+i+j-i1, a+i).
  for (int a = 0; a <= 3; ++a) {
    for (int i = 0; i <= 4; ++i) {
      for (int j = 0; j <= 4; ++j) {
        BigInt sum(0);
        for (int i1 = 0; i1 <= i; ++i1) sum += binom(i, i1) * binom(a + i + j - i1, a + i);
        CHECK(eta(a, 0, i, j) == factorial(a + i) * factorial(j) * sum);
      }
    }
  }
}
