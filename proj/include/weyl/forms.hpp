#pragma once

#include "weyl/matrix.hpp"
#include "weyl/polynomial.hpp"
#include "weyl/scalars.hpp"
#include "weyl/weyl_element.hpp"

#include <vector>

namespace weyl {

/// Trace functional: alpha! on diagonal monomials x^alpha d^alpha, zero on
/// everything else; linear.
BigRat trace(const WeylElement& x);

/// Frobenius pairing (X, Y) = trace(compose(X, Y)). Associative, with the
/// twisted symmetry (X,Y) = 2^{l(Y)} (Y,X) on weight-homogeneous elements.
BigRat frob(const WeylElement& x, const WeylElement& y);

/// Closed form of frob on basis monomials: theta! sum_g C(theta-g,alpha)
/// C(beta,g) / C(theta,alpha) when alpha+alpha' = beta+beta' = theta, and
/// zero when no such theta exists.
BigRat frob_pair_closed(const MultiIndex& alpha, const MultiIndex& beta,
                        const MultiIndex& alpha2, const MultiIndex& beta2);

/// Euclid scalar product <X,Y> = sqrt(2)^{l(X)} (X, bar(Y)) on homogeneous
/// arguments, extended by summing over the common multi-weight components.
/// Symmetric and positive definite; values live in Q[sqrt 2].
QSqrt2 euclid(const WeylElement& x, const WeylElement& y);

/// <X,X>; strictly positive for X != 0.
QSqrt2 norm2(const WeylElement& x);

/// Exact test euclid(x, y) == 0.
bool is_orthogonal(const WeylElement& x, const WeylElement& y);

/// Gram matrix G[i][j] = <b_i, b_j> of a list of distinct monomials.
Matrix<QSqrt2> gram_euclid(const std::vector<WeylMonomial>& basis);

/// (k+1)x(k+1) integer matrix with entries eta(a, 0, i, j); equals the
/// Euclid Gram of {x^{a+i} d^i : i <= k} divided by sqrt(2)^a.
Matrix<BigInt> build_N(int a, int k);

/// (k+1)x(k+1) matrix of mu_poly(a, i, j), univariate in t;
/// det = t^{C(k+1,2)}.
Matrix<MultiPoly> build_M(int a, int k);

/// (k+1)x(k+1) matrix with (i,j) entry d_tilde_poly(a+j, i, a) in x,y,z;
/// det = x^{a(k+1)} (xy+z)^{C(k+1,2)}.
Matrix<MultiPoly> build_Mtilde(int a, int k);

}  // namespace weyl
