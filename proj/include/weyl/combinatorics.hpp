#pragma once

#include "weyl/multi_index.hpp"
#include "weyl/scalars.hpp"

namespace weyl {

BigInt factorial(long n);

/// Binomial coefficient with the out-of-range convention:
/// zero unless 0 <= k <= n.
BigInt binom(long n, long k);

/// Componentwise products over multi-indices:
/// alpha! = prod alpha_i!, C(alpha,beta) = prod C(alpha_i,beta_i).
BigInt multi_factorial(const MultiIndex& a);
BigInt multi_binom(const MultiIndex& a, const MultiIndex& b);

/// Stirling numbers of the second kind, s(k,j) = j*s(k-1,j) + s(k-1,j-1).
BigInt stirling2(int k, int j);

/// Number of ordered set partitions of a k-set: sum_j s(k,j)*j!.
BigInt fubini(int k);

}  // namespace weyl
