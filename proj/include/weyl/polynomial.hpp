#pragma once

#include "weyl/matrix.hpp"
#include "weyl/multi_index.hpp"
#include "weyl/scalars.hpp"

#include <map>
#include <string>
#include <vector>

namespace weyl {

/// Sparse multivariate polynomial over BigRat. Terms live in a map ordered
/// graded-lexicographically on exponent vectors; no zero coefficient is ever
/// stored, so structural equality is semantic equality.
class MultiPoly {
 public:
  using TermMap = std::map<MultiIndex, BigRat, GradedLexLess>;

  explicit MultiPoly(int arity) : arity_(checked(arity)) {}

  static MultiPoly constant(int arity, const BigRat& c) {
    MultiPoly p(arity);
    p.add_term(MultiIndex(arity), c);
    return p;
  }
  static MultiPoly monomial(const MultiIndex& exponents, const BigRat& c) {
    MultiPoly p(exponents.arity());
    p.add_term(exponents, c);
    return p;
  }
  /// x_slot (0-based).
  static MultiPoly variable(int arity, int slot) {
    return monomial(MultiIndex::unit(arity, slot), BigRat(1));
  }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  BigRat coeff(const MultiIndex& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRat(0) : it->second;
  }

  /// Accumulate c * x^e, dropping the term if the total cancels.
  void add_term(const MultiIndex& e, const BigRat& c);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  static int checked(int arity) {
    if (arity < 0) throw std::invalid_argument("MultiPoly: negative arity");
    return arity;
  }

  int arity_;
  TermMap terms_;
};

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const BigRat& c, const MultiPoly& p);
MultiPoly pow(const MultiPoly& p, int e);

/// Exact evaluation at a point; point.size() must equal the arity.
BigRat eval(const MultiPoly& p, const std::vector<BigRat>& point);

/// Quotient when den divides num exactly; throws std::domain_error
/// otherwise. This is the only division the determinant kernels need.
MultiPoly ring_exact_div(const MultiPoly& num, const MultiPoly& den);
bool ring_is_zero(const MultiPoly& p);
MultiPoly ring_zero_like(const MultiPoly& p);

/// Exact determinant of a square MultiPoly matrix: cofactor expansion up to
/// dimension 8, fraction-free elimination with exact polynomial division
/// above that.
MultiPoly poly_det(const Matrix<MultiPoly>& m);
MultiPoly det(const Matrix<MultiPoly>& m);

/// Canonical text like "2*x^2*y + z", leading term first (descending graded
/// lex). Variable names are positional and supplied by the caller.
std::string to_string(const MultiPoly& p, const std::vector<std::string>& names);

/// Conventional positional names: {"t"} for arity 1, prefixes of
/// {x, y, z, t} up to arity 4, x1..xn beyond.
std::vector<std::string> default_poly_names(int arity);

}  // namespace weyl
