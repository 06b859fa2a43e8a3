#include "weyl/identities.hpp"

namespace weyl {

namespace {

// prod_i binom(top_i - g_i, bottom_i); differences may go negative, in
// which case the factor is zero by the out-of-range convention.
BigInt binom_diff_prod(const MultiIndex& top, const MultiIndex& g, const MultiIndex& bottom) {
  BigInt r(1);
  for (int i = 0; i < top.arity(); ++i) {
    r *= binom(top[i] - g[i], bottom[i]);
    if (r == 0) return r;
  }
  return r;
}

}  // namespace

bool lemma1_check(int n) {
  if (n < 0) throw std::invalid_argument("lemma1_check: n must be non-negative");
  const int arity = 3;  // variables x, y, z
  const MultiPoly x = MultiPoly::variable(arity, 0);
  const MultiPoly y = MultiPoly::variable(arity, 1);
  const MultiPoly z = MultiPoly::variable(arity, 2);
  const MultiPoly one = MultiPoly::constant(arity, BigRat(1));

  std::vector<MultiPoly> x_plus_1_pow;  // (x+1)^a for a <= n
  x_plus_1_pow.push_back(one);
  for (int a = 1; a <= n; ++a) x_plus_1_pow.push_back(x_plus_1_pow.back() * (x + one));

  MultiPoly lhs(arity);
  for (int b = 0; b <= n; ++b) {
    for (int i = 0; i <= b; ++i) {
      for (int a = 0; a <= n - i; ++a) {
        const BigInt c = binom(n, b) * binom(b, i) * binom(n - i, a);
        if (c == 0) continue;
        MultiIndex e(arity);
        e.set(0, i);
        e.set(1, a);
        e.set(2, b);
        lhs = lhs + MultiPoly::monomial(e, BigRat(c)) * x_plus_1_pow[static_cast<size_t>(a)];
      }
    }
  }
  const MultiPoly rhs = pow(one + (one + x) * (y + z + y * z), n);
  return lhs == rhs;
}

bool corollary2_check(int n, int a, int b) {
  if (n < 0 || a < 0 || b < 0)
    throw std::invalid_argument("corollary2_check: arguments must be non-negative");
  BigInt lhs(0), rhs(0);
  for (int i = 0; i <= n; ++i) {
    lhs += (BigInt(1) << a) * binom(n, b) * binom(b, i) * binom(n - i, a);
    rhs += (BigInt(1) << b) * binom(n, a) * binom(a, i) * binom(n - i, b);
  }
  return lhs == rhs;
}

bool lemma3_check(const MultiIndex& alpha, const MultiIndex& beta, const MultiIndex& theta) {
  if (alpha.arity() != beta.arity() || alpha.arity() != theta.arity())
    throw std::invalid_argument("lemma3_check: arity mismatch");
  BigInt lhs_sum(0);
  for_each_upto(beta, [&](const MultiIndex& g) {
    lhs_sum += binom_diff_prod(theta, g, alpha) * multi_binom(beta, g);
  });
  BigInt rhs_sum(0);
  for_each_upto(alpha, [&](const MultiIndex& g) {
    rhs_sum += binom_diff_prod(theta, g, beta) * multi_binom(alpha, g);
  });
  const BigInt lhs = (BigInt(1) << alpha.sum()) * multi_binom(theta, beta) * lhs_sum;
  const BigInt rhs = (BigInt(1) << beta.sum()) * multi_binom(theta, alpha) * rhs_sum;
  return lhs == rhs;
}

bool lemma100_check(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("lemma100_check: arguments must be non-negative");
  const MultiPoly t = MultiPoly::variable(1, 0);
  const MultiPoly one = MultiPoly::constant(1, BigRat(1));
  MultiPoly lhs(1);
  for (int j = 0; j <= a; ++j)
    lhs = lhs + BigRat(binom(a, j) * binom(a + b - j, a + c)) * pow(t, j);
  MultiPoly rhs(1);
  for (int i = 0; i <= a; ++i)
    rhs = rhs + BigRat(binom(a, i) * binom(b, i + c)) * pow(t + one, i);
  return lhs == rhs;
}

MultiPoly d_poly(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("d_poly: arguments must be non-negative");
  MultiPoly out(3);
  for (int i = 0; i <= b; ++i) {
    const BigInt coeff = binom(b, i) * binom(a + b - i, b + c);
    if (coeff == 0) continue;  // nonzero coefficient forces i <= a - c, so a - i >= 0
    MultiIndex e(3);
    e.set(0, a - i);
    e.set(1, b - i);
    e.set(2, i);
    out.add_term(e, BigRat(coeff));
  }
  return out;
}

MultiPoly d_tilde_poly(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("d_tilde_poly: arguments must be non-negative");
  const MultiPoly x = MultiPoly::variable(3, 0);
  const MultiPoly y = MultiPoly::variable(3, 1);
  const MultiPoly z = MultiPoly::variable(3, 2);
  const MultiPoly z_plus_xy = z + x * y;
  MultiPoly out(3);
  for (int i = 0; i <= b; ++i) {
    const BigInt coeff = binom(b, i) * binom(a, i + c);
    if (coeff == 0) continue;  // nonzero coefficient forces i + c <= a, so a - i >= 0
    MultiIndex e(3);
    e.set(0, a - i);
    e.set(1, b - i);
    out = out + BigRat(coeff) * (MultiPoly::monomial(e, BigRat(1)) * pow(z_plus_xy, i));
  }
  return out;
}

bool lemma101_check(int a, int b, int c) { return d_poly(a, b, c) == d_tilde_poly(a, b, c); }

MultiPoly mu_poly(int a, int i, int j) {
  if (a < 0 || i < 0 || j < 0)
    throw std::invalid_argument("mu_poly: arguments must be non-negative");
  MultiPoly out(1);
  for (int i1 = 0; i1 <= i; ++i1)
    out.add_term(MultiIndex{i1}, BigRat(binom(i, i1) * binom(a + j, a + i1)));
  return out;
}

BigInt eta(int a, int b, int i, int j) {
  if (a < 0 || b < 0 || i < 0 || j < 0)
    throw std::invalid_argument("eta: arguments must be non-negative");
  BigInt total(0);
  for (int i1 = 0; i1 <= b + i; ++i1)
    total += binom(b + i, i1) * binom(b + j, i1) * factorial(i1) *
             factorial(a + b + i + j - i1);
  return total;
}

}  // namespace weyl
