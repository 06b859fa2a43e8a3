#pragma once

// Shared test helpers: deterministic random generators and independent
// brute-force oracles. Everything here is test-only and stays independent
// of the library code paths it is used to check.

#include "weyl/forms.hpp"
#include "weyl/matrix.hpp"
#include "weyl/polynomial.hpp"
#include "weyl/weyl_element.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace testers {

struct Rng {
  explicit Rng(uint64_t seed) : eng(seed) {}

  // Inclusive range; modulo keeps draws identical across platforms.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(eng() % static_cast<uint64_t>(hi - lo + 1));
  }

  int nonzero(int bound) {
    int v = uniform(1, bound);
    return uniform(0, 1) ? v : -v;
  }

  std::mt19937_64 eng;
};

inline weyl::MultiIndex random_index(Rng& rng, int n, int max_exp) {
  weyl::MultiIndex e(n);
  for (int i = 0; i < n; ++i) e.set(i, rng.uniform(0, max_exp));
  return e;
}

inline weyl::WeylMonomial random_monomial(Rng& rng, int n, int max_exp) {
  return {random_index(rng, n, max_exp), random_index(rng, n, max_exp)};
}

inline weyl::WeylElement random_element(Rng& rng, int n, int max_terms, int max_exp,
                                        int coeff_bound) {
  weyl::WeylElement x(n);
  const int terms = rng.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t)
    x.add_term(random_monomial(rng, n, max_exp), weyl::BigRat(rng.nonzero(coeff_bound)));
  return x;
}

inline weyl::WeylElement random_nonzero_element(Rng& rng, int n, int max_terms, int max_exp,
                                                int coeff_bound) {
  for (;;) {
    weyl::WeylElement x = random_element(rng, n, max_terms, max_exp, coeff_bound);
    if (!x.is_zero()) return x;
  }
}

// Every term gets the same weight l (chosen at random within +-max_exp).
inline weyl::WeylElement random_weight_homogeneous(Rng& rng, int n, int max_terms, int max_exp,
                                                   int coeff_bound) {
  const int l = rng.uniform(-max_exp, max_exp);
  weyl::WeylElement x(n);
  const int terms = rng.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    weyl::MultiIndex beta = random_index(rng, n, max_exp);
    int alpha_sum = beta.sum() + l;
    if (alpha_sum < 0) {
      beta.set(0, beta[0] - alpha_sum);  // lift beta so alpha_sum becomes 0
      alpha_sum = 0;
    }
    weyl::MultiIndex alpha(n);
    for (int s = 0; s < alpha_sum; ++s) {
      const int i = rng.uniform(0, n - 1);
      alpha.set(i, alpha[i] + 1);
    }
    x.add_term({alpha, beta}, weyl::BigRat(rng.nonzero(coeff_bound)));
  }
  return x;
}

inline weyl::MultiPoly random_poly(Rng& rng, int n, int max_terms, int max_deg,
                                   int coeff_bound) {
  weyl::MultiPoly p(n);
  const int terms = rng.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t)
    p.add_term(random_index(rng, n, max_deg), weyl::BigRat(rng.nonzero(coeff_bound)));
  return p;
}

// Determinant by signed permutation expansion; the independent oracle for
// every exact determinant kernel.
template <typename Ring>
Ring perm_det(const weyl::Matrix<Ring>& m) {
  const int n = m.rows();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Ring total = weyl::ring_zero_like(m.at(0, 0));
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
    Ring prod = m.at(0, perm[0]);
    for (int i = 1; i < n; ++i) prod = Ring(prod * m.at(i, perm[static_cast<size_t>(i)]));
    if (inversions % 2 == 0)
      total = Ring(total + prod);
    else
      total = Ring(total - prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Independent positive-definiteness oracle: rational Gaussian pivoting
// without row exchange; positive definite iff every pivot stays positive.
inline bool ldl_positive_definite(weyl::Matrix<weyl::BigRat> m) {
  const int n = m.rows();
  for (int k = 0; k < n; ++k) {
    if (m.at(k, k) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      const weyl::BigRat f = m.at(i, k) / m.at(k, k);
      for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return true;
}

}  // namespace testers
