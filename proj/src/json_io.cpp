#include "weyl/json_io.hpp"

namespace weyl {

using nlohmann::json;

json rat_to_json(const BigRat& r) {
  return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

json qsqrt2_to_json(const QSqrt2& s) {
  return json{{"rat", rat_to_json(s.rat)}, {"sqrt2", rat_to_json(s.irr)}};
}

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"exponents", e.entries()}, {"coeff", rat_to_json(c)}});
  return terms;
}

json element_to_json(const WeylElement& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.terms())
    terms.push_back(json{{"alpha", m.alpha.entries()},
                         {"beta", m.beta.entries()},
                         {"coeff", rat_to_json(c)}});
  return json{{"n", x.arity()}, {"terms", terms}};
}

namespace {

template <typename Ring, typename Render>
json matrix_json(const Matrix<Ring>& m, const char* ring, Render render) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) entries.push_back(render(m.at(i, j)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"ring", ring}, {"entries", entries}};
}

}  // namespace

json matrix_to_json(const Matrix<BigInt>& m) {
  return matrix_json(m, "int", [](const BigInt& v) { return v.str(); });
}

json matrix_to_json(const Matrix<BigRat>& m) {
  return matrix_json(m, "rat", [](const BigRat& v) { return rat_to_json(v); });
}

json matrix_to_json(const Matrix<QSqrt2>& m) {
  return matrix_json(m, "qsqrt2", [](const QSqrt2& v) { return qsqrt2_to_json(v); });
}

json matrix_to_json(const Matrix<MultiPoly>& m) {
  return matrix_json(m, "poly", [](const MultiPoly& v) { return poly_to_json(v); });
}

namespace {

BigInt int_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  throw std::invalid_argument("expected an integer as decimal string");
}

std::vector<int> exponents_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("exponents must be an array");
  std::vector<int> e;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw std::invalid_argument("exponents must be non-negative integers");
    e.push_back(v.get<int>());
  }
  return e;
}

template <typename Ring, typename Reader>
Matrix<Ring> read_entries(const json& j, int rows, int cols, Reader read) {
  const auto& entries = j.at("entries");
  Matrix<Ring> m(rows, cols, read(entries.at(0)));
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = read(entries.at(static_cast<size_t>(i) * static_cast<size_t>(cols) +
                                   static_cast<size_t>(c)));
  return m;
}

}  // namespace

BigRat rat_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("rational JSON must carry num and den");
  const BigInt den = int_from_json(j.at("den"));
  if (den == 0) throw std::invalid_argument("rational JSON has zero denominator");
  return BigRat(int_from_json(j.at("num")), den);
}

QSqrt2 qsqrt2_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rat") || !j.contains("sqrt2"))
    throw std::invalid_argument("q-sqrt2 JSON must carry rat and sqrt2");
  return {rat_from_json(j.at("rat")), rat_from_json(j.at("sqrt2"))};
}

MultiPoly poly_from_json(const json& j, int arity) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be a term array");
  MultiPoly p(arity);
  for (const auto& term : j) {
    const auto e = exponents_from_json(term.at("exponents"));
    if (static_cast<int>(e.size()) != arity)
      throw std::invalid_argument("polynomial term arity mismatch");
    p.add_term(MultiIndex(e), rat_from_json(term.at("coeff")));
  }
  return p;
}

AnyMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("matrix JSON must be an object");
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
  const auto& entries = j.at("entries");
  if (!entries.is_array() ||
      entries.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
    throw std::invalid_argument("matrix entries must hold rows*cols values");
  const std::string ring = j.at("ring").get<std::string>();
  if (ring == "int")
    return read_entries<BigInt>(j, rows, cols, int_from_json);
  if (ring == "rat")
    return read_entries<BigRat>(j, rows, cols, rat_from_json);
  if (ring == "qsqrt2")
    return read_entries<QSqrt2>(j, rows, cols, qsqrt2_from_json);
  if (ring == "poly") {
    int arity = -1;
    for (const auto& entry : entries) {
      if (!entry.is_array()) throw std::invalid_argument("poly entries must be term arrays");
      if (!entry.empty()) {
        arity = static_cast<int>(entry.at(0).at("exponents").size());
        break;
      }
    }
    if (arity < 0)
      throw std::invalid_argument("cannot infer arity: every poly entry is zero");
    return read_entries<MultiPoly>(
        j, rows, cols, [arity](const json& e) { return poly_from_json(e, arity); });
  }
  throw std::invalid_argument("unknown ring tag '" + ring + "'");
}

}  // namespace weyl
