#include "weyl/weyl_element.hpp"

#include "weyl/combinatorics.hpp"

namespace weyl {

std::vector<int> multiweight(const WeylMonomial& m) {
  std::vector<int> w(static_cast<size_t>(m.arity()));
  for (int i = 0; i < m.arity(); ++i) w[static_cast<size_t>(i)] = m.alpha[i] - m.beta[i];
  return w;
}

int weight(const WeylMonomial& m) { return m.alpha.sum() - m.beta.sum(); }

bool WeylTermLess::operator()(const WeylMonomial& a, const WeylMonomial& b) const {
  const int wa = weight(a);
  const int wb = weight(b);
  if (wa != wb) return wa < wb;
  if (!(a.alpha == b.alpha)) return lex_less(a.alpha, b.alpha);
  return lex_less(a.beta, b.beta);
}

void WeylElement::add_term(const WeylMonomial& m, const BigRat& c) {
  if (m.arity() != arity_) throw std::invalid_argument("WeylElement: monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("WeylElement: arity mismatch");
  WeylElement r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("WeylElement: arity mismatch");
  WeylElement r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, -c);
  return r;
}

WeylElement operator-(const WeylElement& a) { return BigRat(-1) * a; }

WeylElement operator*(const BigRat& c, const WeylElement& a) {
  WeylElement r(a.arity());
  for (const auto& [m, mc] : a.terms()) r.add_term(m, c * mc);
  return r;
}

namespace {

// Accumulates scale * (m1 o m2) into out, without an intermediate element.
void compose_into(WeylElement& out, const WeylMonomial& m1, const WeylMonomial& m2,
                  const BigRat& scale) {
  // The sum is finite: outside 0 <= g <= min(beta, alpha') a binomial
  // factor vanishes.
  const MultiIndex bound = m1.beta.min_with(m2.alpha);
  const MultiIndex alpha_total = m1.alpha.plus(m2.alpha);
  const MultiIndex beta_total = m1.beta.plus(m2.beta);
  for_each_upto(bound, [&](const MultiIndex& g) {
    BigInt c = multi_factorial(g) * multi_binom(m1.beta, g) * multi_binom(m2.alpha, g);
    out.add_term(WeylMonomial(alpha_total.minus(g), beta_total.minus(g)),
                 scale * BigRat(std::move(c)));
  });
}

}  // namespace

WeylElement monom_compose(const WeylMonomial& m1, const WeylMonomial& m2) {
  if (m1.arity() != m2.arity()) throw std::invalid_argument("monom_compose: arity mismatch");
  WeylElement out(m1.arity());
  compose_into(out, m1, m2, BigRat(1));
  return out;
}

WeylElement compose(const WeylElement& x, const WeylElement& y) {
  if (x.arity() != y.arity()) throw std::invalid_argument("compose: arity mismatch");
  WeylElement out(x.arity());
  for (const auto& [m1, c1] : x.terms())
    for (const auto& [m2, c2] : y.terms()) compose_into(out, m1, m2, c1 * c2);
  return out;
}

WeylMonomial bar(const WeylMonomial& m) { return {m.beta, m.alpha}; }

WeylElement bar(const WeylElement& x) {
  WeylElement r(x.arity());
  for (const auto& [m, c] : x.terms()) r.add_term(bar(m), c);
  return r;
}

WeylElement self_part(const WeylElement& x) { return BigRat(1, 2) * (x + bar(x)); }
WeylElement skew_part(const WeylElement& x) { return BigRat(1, 2) * (x - bar(x)); }

WeylElement project_multiweight(const WeylElement& x, const std::vector<int>& w) {
  WeylElement r(x.arity());
  for (const auto& [m, c] : x.terms())
    if (multiweight(m) == w) r.add_term(m, c);
  return r;
}

WeylElement project_weight(const WeylElement& x, int l) {
  WeylElement r(x.arity());
  for (const auto& [m, c] : x.terms())
    if (weight(m) == l) r.add_term(m, c);
  return r;
}

std::optional<int> homogeneous_weight(const WeylElement& x) {
  if (x.is_zero()) return std::nullopt;
  const int l = weight(x.terms().begin()->first);
  for (const auto& [m, c] : x.terms())
    if (weight(m) != l) return std::nullopt;
  return l;
}

std::optional<std::vector<int>> homogeneous_multiweight(const WeylElement& x) {
  if (x.is_zero()) return std::nullopt;
  std::vector<int> w = multiweight(x.terms().begin()->first);
  for (const auto& [m, c] : x.terms())
    if (multiweight(m) != w) return std::nullopt;
  return w;
}

std::map<std::vector<int>, WeylElement> multiweight_components(const WeylElement& x) {
  std::map<std::vector<int>, WeylElement> parts;
  for (const auto& [m, c] : x.terms()) {
    auto [it, inserted] = parts.emplace(multiweight(m), WeylElement(x.arity()));
    it->second.add_term(m, c);
  }
  return parts;
}

MultiPoly apply(const WeylElement& x, const MultiPoly& p) {
  if (x.arity() != p.arity()) throw std::invalid_argument("apply: arity mismatch");
  MultiPoly out(p.arity());
  for (const auto& [m, c] : x.terms()) {
    for (const auto& [theta, k] : p.terms()) {
      if (!m.beta.leq(theta)) continue;  // derivative kills the term
      BigInt falling(1);
      for (int i = 0; i < p.arity(); ++i)
        for (int t = theta[i]; t > theta[i] - m.beta[i]; --t) falling *= t;
      out.add_term(theta.minus(m.beta).plus(m.alpha), c * k * BigRat(falling));
    }
  }
  return out;
}

std::vector<WeylMonomial> factor_monomial(const WeylMonomial& m) {
  std::vector<WeylMonomial> factors;
  factors.reserve(static_cast<size_t>(m.arity()));
  for (int i = 0; i < m.arity(); ++i)
    factors.push_back(WeylMonomial(MultiIndex{m.alpha[i]}, MultiIndex{m.beta[i]}));
  return factors;
}

}  // namespace weyl
