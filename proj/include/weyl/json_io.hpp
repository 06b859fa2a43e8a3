#pragma once

#include "weyl/matrix.hpp"
#include "weyl/polynomial.hpp"
#include "weyl/scalars.hpp"
#include "weyl/weyl_element.hpp"

#include "json.hpp"

#include <variant>

namespace weyl {

// JSON renderings of the documented wire schemas.
//   BigRat      {"num": "<decimal>", "den": "<decimal>"}
//   QSqrt2      {"rat": <BigRat>, "sqrt2": <BigRat>}
//   MultiPoly   [{"exponents": [...], "coeff": <BigRat>}, ...]
//   WeylElement {"n": n, "terms": [{"alpha": [...], "beta": [...],
//                                   "coeff": <BigRat>}, ...]}
//   Matrix      {"rows": r, "cols": c, "ring": "int"|"rat"|"qsqrt2"|"poly",
//                "entries": [...row-major...]}

nlohmann::json rat_to_json(const BigRat& r);
nlohmann::json qsqrt2_to_json(const QSqrt2& s);
nlohmann::json poly_to_json(const MultiPoly& p);
nlohmann::json element_to_json(const WeylElement& x);

nlohmann::json matrix_to_json(const Matrix<BigInt>& m);
nlohmann::json matrix_to_json(const Matrix<BigRat>& m);
nlohmann::json matrix_to_json(const Matrix<QSqrt2>& m);
nlohmann::json matrix_to_json(const Matrix<MultiPoly>& m);

// Inverse directions; throw std::invalid_argument on malformed input.
BigRat rat_from_json(const nlohmann::json& j);
QSqrt2 qsqrt2_from_json(const nlohmann::json& j);
MultiPoly poly_from_json(const nlohmann::json& j, int arity);

using AnyMatrix =
    std::variant<Matrix<BigInt>, Matrix<BigRat>, Matrix<QSqrt2>, Matrix<MultiPoly>>;

/// Reads the documented matrix schema, dispatching on the "ring" tag. The
/// arity of "poly" entries is inferred from the first non-constant entry.
AnyMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace weyl
