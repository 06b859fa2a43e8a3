#include "weyl/forms.hpp"

#include "weyl/combinatorics.hpp"
#include "weyl/identities.hpp"

#include <set>

namespace weyl {

BigRat trace(const WeylElement& x) {
  BigRat total(0);
  for (const auto& [m, c] : x.terms())
    if (m.alpha == m.beta) total += c * BigRat(multi_factorial(m.alpha));
  return total;
}

BigRat frob(const WeylElement& x, const WeylElement& y) { return trace(compose(x, y)); }

BigRat frob_pair_closed(const MultiIndex& alpha, const MultiIndex& beta,
                        const MultiIndex& alpha2, const MultiIndex& beta2) {
  if (alpha.arity() != beta.arity() || alpha.arity() != alpha2.arity() ||
      alpha.arity() != beta2.arity())
    throw std::invalid_argument("frob_pair_closed: arity mismatch");
  const MultiIndex theta = alpha.plus(alpha2);
  if (!(theta == beta.plus(beta2))) return BigRat(0);
  // theta >= alpha, so C(theta, alpha) >= 1 and the division is safe.
  BigInt sum(0);
  for_each_upto(beta, [&](const MultiIndex& g) {
    sum += multi_binom(theta.minus(g), alpha) * multi_binom(beta, g);
  });
  return BigRat(multi_factorial(theta) * sum, multi_binom(theta, alpha));
}

namespace {

int weight_of(const std::vector<int>& w) {
  int total = 0;
  for (int v : w) total += v;
  return total;
}

}  // namespace

QSqrt2 euclid(const WeylElement& x, const WeylElement& y) {
  if (x.arity() != y.arity()) throw std::invalid_argument("euclid: arity mismatch");
  // Distinct multi-weight components are orthogonal; only common components
  // contribute sqrt(2)^{l(w)} (X_w, bar(Y_w)).
  const auto xs = multiweight_components(x);
  const auto ys = multiweight_components(y);
  QSqrt2 total;
  for (const auto& [w, xw] : xs) {
    const auto it = ys.find(w);
    if (it == ys.end()) continue;
    total += sqrt2_power(weight_of(w)) * QSqrt2(frob(xw, bar(it->second)));
  }
  return total;
}

QSqrt2 norm2(const WeylElement& x) { return euclid(x, x); }

bool is_orthogonal(const WeylElement& x, const WeylElement& y) {
  return euclid(x, y).is_zero();
}

Matrix<QSqrt2> gram_euclid(const std::vector<WeylMonomial>& basis) {
  if (basis.empty()) throw std::invalid_argument("gram_euclid: empty basis");
  const int arity = basis.front().arity();
  std::set<WeylMonomial, WeylTermLess> seen;
  for (const auto& m : basis) {
    if (m.arity() != arity) throw std::invalid_argument("gram_euclid: mixed arity basis");
    if (!seen.insert(m).second)
      throw std::invalid_argument("gram_euclid: duplicate basis monomial");
  }
  const int n = static_cast<int>(basis.size());
  Matrix<QSqrt2> g(n, n, QSqrt2());
  for (int i = 0; i < n; ++i) {
    const WeylElement bi = WeylElement::monomial(basis[static_cast<size_t>(i)]);
    for (int j = 0; j < n; ++j)
      g.at(i, j) = euclid(bi, WeylElement::monomial(basis[static_cast<size_t>(j)]));
  }
  return g;
}

Matrix<BigInt> build_N(int a, int k) {
  if (a < 0 || k < 0) throw std::invalid_argument("build_N: arguments must be non-negative");
  Matrix<BigInt> m(k + 1, k + 1, BigInt(0));
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) m.at(i, j) = eta(a, 0, i, j);
  return m;
}

Matrix<MultiPoly> build_M(int a, int k) {
  if (a < 0 || k < 0) throw std::invalid_argument("build_M: arguments must be non-negative");
  Matrix<MultiPoly> m(k + 1, k + 1, MultiPoly(1));
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) m.at(i, j) = mu_poly(a, i, j);
  return m;
}

Matrix<MultiPoly> build_Mtilde(int a, int k) {
  if (a < 0 || k < 0)
    throw std::invalid_argument("build_Mtilde: arguments must be non-negative");
  Matrix<MultiPoly> m(k + 1, k + 1, MultiPoly(3));
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) m.at(i, j) = d_tilde_poly(a + j, i, a);
  return m;
}

}  // namespace weyl
