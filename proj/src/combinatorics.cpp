#include "weyl/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace weyl {

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r(1);
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

BigInt multi_factorial(const MultiIndex& a) {
  BigInt r(1);
  for (int i = 0; i < a.arity(); ++i) r *= factorial(a[i]);
  return r;
}

BigInt multi_binom(const MultiIndex& a, const MultiIndex& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("multi_binom: arity mismatch");
  BigInt r(1);
  for (int i = 0; i < a.arity(); ++i) {
    r *= binom(a[i], b[i]);
    if (r == 0) return r;
  }
  return r;
}

BigInt stirling2(int k, int j) {
  if (k < 0 || j < 0) throw std::invalid_argument("stirling2: negative argument");
  if (j > k) return BigInt(0);
  // Row-by-row recurrence; no shared state.
  std::vector<BigInt> row(static_cast<size_t>(j) + 1, BigInt(0));
  row[0] = 1;  // s(0,0)
  for (int kk = 1; kk <= k; ++kk) {
    for (int jj = std::min(kk, j); jj >= 1; --jj)
      row[static_cast<size_t>(jj)] =
          jj * row[static_cast<size_t>(jj)] + row[static_cast<size_t>(jj) - 1];
    row[0] = 0;  // s(kk, 0) = 0 for kk >= 1
  }
  return row[static_cast<size_t>(j)];
}

BigInt fubini(int k) {
  if (k < 0) throw std::invalid_argument("fubini: negative argument");
  BigInt total(0);
  for (int j = 0; j <= k; ++j) total += stirling2(k, j) * factorial(j);
  return total;
}

}  // namespace weyl
