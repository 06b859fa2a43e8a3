#include "weyl/polynomial.hpp"

#include <sstream>

namespace weyl {

void MultiPoly::add_term(const MultiIndex& e, const BigRat& c) {
  if (e.arity() != arity_) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("MultiPoly: arity mismatch");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("MultiPoly: arity mismatch");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r(a.arity());
  for (const auto& [e, c] : a.terms()) r.add_term(e, -c);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("MultiPoly: arity mismatch");
  MultiPoly r(a.arity());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) r.add_term(ea.plus(eb), ca * cb);
  return r;
}

MultiPoly operator*(const BigRat& c, const MultiPoly& p) {
  MultiPoly r(p.arity());
  for (const auto& [e, pc] : p.terms()) r.add_term(e, c * pc);
  return r;
}

MultiPoly pow(const MultiPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  MultiPoly r = MultiPoly::constant(p.arity(), BigRat(1));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

BigRat eval(const MultiPoly& p, const std::vector<BigRat>& point) {
  if (static_cast<int>(point.size()) != p.arity())
    throw std::invalid_argument("eval: point length must equal arity");
  BigRat total(0);
  for (const auto& [e, c] : p.terms()) {
    BigRat term = c;
    for (int i = 0; i < p.arity(); ++i) term *= rat_pow(point[static_cast<size_t>(i)], e[i]);
    total += term;
  }
  return total;
}

bool ring_is_zero(const MultiPoly& p) { return p.is_zero(); }
MultiPoly ring_zero_like(const MultiPoly& p) { return MultiPoly(p.arity()); }

MultiPoly ring_exact_div(const MultiPoly& num, const MultiPoly& den) {
  if (num.arity() != den.arity()) throw std::invalid_argument("exact_div: arity mismatch");
  if (den.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
  MultiPoly quotient(num.arity());
  MultiPoly rem = num;
  const auto& den_lead = *den.terms().rbegin();
  while (!rem.is_zero()) {
    const auto rem_lead = *rem.terms().rbegin();
    if (!den_lead.first.leq(rem_lead.first))
      throw std::domain_error("exact_div: not divisible");
    MultiPoly t =
        MultiPoly::monomial(rem_lead.first.minus(den_lead.first), rem_lead.second / den_lead.second);
    quotient = quotient + t;
    rem = rem - t * den;  // cancels the leading term of rem
  }
  return quotient;
}

namespace {

MultiPoly cofactor_det(const Matrix<MultiPoly>& m) {
  const int n = m.rows();
  if (n == 1) return m.at(0, 0);
  MultiPoly total(m.at(0, 0).arity());
  for (int i = 0; i < n; ++i) {
    if (m.at(i, 0).is_zero()) continue;
    Matrix<MultiPoly> minor(n - 1, n - 1, total);
    for (int r = 0, rr = 0; r < n; ++r) {
      if (r == i) continue;
      for (int c = 1; c < n; ++c) minor.at(rr, c - 1) = m.at(r, c);
      ++rr;
    }
    MultiPoly contribution = m.at(i, 0) * cofactor_det(minor);
    total = (i % 2 == 0) ? total + contribution : total - contribution;
  }
  return total;
}

}  // namespace

MultiPoly poly_det(const Matrix<MultiPoly>& m) {
  if (!m.is_square()) throw std::invalid_argument("poly_det: matrix must be square");
  if (m.rows() <= 8) return cofactor_det(m);
  return det<MultiPoly>(m);  // fraction-free with exact polynomial division
}

MultiPoly det(const Matrix<MultiPoly>& m) { return poly_det(m); }

namespace {

std::string render_monomial(const MultiIndex& e, const std::vector<std::string>& names) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < e.arity(); ++i) {
    if (e[i] == 0) continue;
    if (!first) out << "*";
    out << names.at(static_cast<size_t>(i));
    if (e[i] > 1) out << "^" << e[i];
    first = false;
  }
  return out.str();
}

}  // namespace

std::string to_string(const MultiPoly& p, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) < p.arity())
    throw std::invalid_argument("to_string: not enough variable names");
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Leading term first: reverse of the ascending graded-lex map order.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const BigRat& c = it->second;
    BigRat mag = c < 0 ? BigRat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const std::string vars = render_monomial(it->first, names);
    if (vars.empty()) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << vars;
    }
    first = false;
  }
  return out.str();
}

std::vector<std::string> default_poly_names(int arity) {
  if (arity == 1) return {"t"};
  static const std::vector<std::string> base = {"x", "y", "z", "t"};
  if (arity <= 4) return {base.begin(), base.begin() + arity};
  std::vector<std::string> names;
  for (int i = 1; i <= arity; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace weyl
