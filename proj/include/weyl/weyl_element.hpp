#pragma once

#include "weyl/multi_index.hpp"
#include "weyl/polynomial.hpp"
#include "weyl/scalars.hpp"

#include <map>
#include <optional>
#include <vector>

namespace weyl {

/// Normal-ordered basis monomial x^alpha d^beta.
struct WeylMonomial {
  MultiIndex alpha;
  MultiIndex beta;

  WeylMonomial(MultiIndex a, MultiIndex b) : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha.arity() != beta.arity())
      throw std::invalid_argument("WeylMonomial: arity mismatch between alpha and beta");
  }
  static WeylMonomial one(int arity) { return {MultiIndex(arity), MultiIndex(arity)}; }

  int arity() const { return alpha.arity(); }

  friend bool operator==(const WeylMonomial&, const WeylMonomial&) = default;
};

/// Multi-weight w = alpha - beta (entries may be negative) and its sum.
std::vector<int> multiweight(const WeylMonomial& m);
int weight(const WeylMonomial& m);

/// Canonical term order: weight, then alpha lexicographic, then beta.
struct WeylTermLess {
  bool operator()(const WeylMonomial& a, const WeylMonomial& b) const;
};

/// Sparse element of the Weyl algebra A_n: a rational linear combination of
/// normal-ordered monomials, canonical (no zero coefficients, each monomial
/// at most once).
class WeylElement {
 public:
  using TermMap = std::map<WeylMonomial, BigRat, WeylTermLess>;

  explicit WeylElement(int arity) : arity_(checked(arity)) {}

  static WeylElement monomial(const WeylMonomial& m, const BigRat& c = BigRat(1)) {
    WeylElement x(m.arity());
    x.add_term(m, c);
    return x;
  }
  static WeylElement one(int arity) { return monomial(WeylMonomial::one(arity)); }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  BigRat coeff(const WeylMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRat(0) : it->second;
  }

  void add_term(const WeylMonomial& m, const BigRat& c);

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  static int checked(int arity) {
    if (arity <= 0) throw std::invalid_argument("WeylElement: arity must be positive");
    return arity;
  }

  int arity_;
  TermMap terms_;
};

WeylElement operator+(const WeylElement& a, const WeylElement& b);
WeylElement operator-(const WeylElement& a, const WeylElement& b);
WeylElement operator-(const WeylElement& a);
WeylElement operator*(const BigRat& c, const WeylElement& a);

/// x^a d^b o x^a' d^b' = sum_g g! C(b,g) C(a',g) x^{a+a'-g} d^{b+b'-g},
/// the finite sum over 0 <= g <= min(b, a') componentwise.
WeylElement monom_compose(const WeylMonomial& m1, const WeylMonomial& m2);

/// Bilinear extension of monom_compose; the algebra product.
WeylElement compose(const WeylElement& x, const WeylElement& y);

/// Anti-involution x^alpha d^beta -> x^beta d^alpha.
WeylElement bar(const WeylElement& x);
WeylMonomial bar(const WeylMonomial& m);

/// (X + bar(X))/2 and (X - bar(X))/2.
WeylElement self_part(const WeylElement& x);
WeylElement skew_part(const WeylElement& x);

WeylElement project_multiweight(const WeylElement& x, const std::vector<int>& w);
WeylElement project_weight(const WeylElement& x, int l);

/// Weight when every term shares one; nullopt for zero or mixed weights.
std::optional<int> homogeneous_weight(const WeylElement& x);
std::optional<std::vector<int>> homogeneous_multiweight(const WeylElement& x);

/// Decomposition X = sum_w X_w; only non-zero components appear.
std::map<std::vector<int>, WeylElement> multiweight_components(const WeylElement& x);

/// Differential-operator action on polynomials: x^alpha d^beta sends x^theta
/// to prod_i theta_i(theta_i-1)...(theta_i-beta_i+1) x^{theta-beta+alpha}
/// (zero when some theta_i < beta_i), extended bilinearly.
MultiPoly apply(const WeylElement& x, const MultiPoly& p);

/// Per-variable factors x_i^{alpha_i} d_i^{beta_i} as arity-1 monomials;
/// the vector position records the variable slot.
std::vector<WeylMonomial> factor_monomial(const WeylMonomial& m);

}  // namespace weyl
