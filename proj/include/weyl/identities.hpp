#pragma once

#include "weyl/combinatorics.hpp"
#include "weyl/multi_index.hpp"
#include "weyl/polynomial.hpp"

namespace weyl {

// Executable checkers for the combinatorial identities behind the forms.
// Each builds both sides exactly (as big integers or sparse polynomials)
// and returns structural equality. Numbering matches the CLI `check` ids.

/// sum_{b<=n, i<=b, a<=n-i} C(n,b)C(b,i)C(n-i,a) (x+1)^a x^i y^a z^b
/// == (1 + (1+x)(y+z+yz))^n, in Q[x,y,z].
bool lemma1_check(int n);

/// sum_i 2^a C(n,b)C(b,i)C(n-i,a) == sum_i 2^b C(n,a)C(a,i)C(n-i,b).
bool corollary2_check(int n, int a, int b);

/// Denominator-cleared form of the two-sided gamma sum:
/// 2^||alpha|| C(theta,beta) sum_g C(theta-g,alpha)C(beta,g)
/// == 2^||beta|| C(theta,alpha) sum_g C(theta-g,beta)C(alpha,g).
bool lemma3_check(const MultiIndex& alpha, const MultiIndex& beta, const MultiIndex& theta);

/// sum_{j<=a} C(a,j)C(a+b-j,a+c) t^j == sum_{i<=a} C(a,i)C(b,i+c) (t+1)^i.
bool lemma100_check(int a, int b, int c);

/// d_{a,b}^{(c)} = sum_i C(b,i)C(a+b-i,b+c) x^{a-i}y^{b-i}z^i.
MultiPoly d_poly(int a, int b, int c);
/// dtilde_{a,b}^{(c)} = sum_i C(b,i)C(a,i+c) x^{a-i}y^{b-i}(z+xy)^i.
MultiPoly d_tilde_poly(int a, int b, int c);
/// d == dtilde as arity-3 polynomials.
bool lemma101_check(int a, int b, int c);

/// mu_{i,j}^{(a)}(t) = sum_{i1<=i} C(i,i1)C(a+j,a+i1) t^{i1}, univariate.
MultiPoly mu_poly(int a, int i, int j);

/// eta_{i,j}^{(a,b)} = sum_{i1<=b+i} C(b+i,i1)C(b+j,i1) i1! (a+b+i+j-i1)!.
BigInt eta(int a, int b, int i, int j);

}  // namespace weyl
