#include "weyl/matrix.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace weyl;

namespace {

Matrix<BigInt> random_int_matrix(testers::Rng& rng, int dim, int bound) {
  Matrix<BigInt> m(dim, dim, BigInt(0));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = rng.uniform(-bound, bound);
  return m;
}

Matrix<BigInt> mat_mul(const Matrix<BigInt>& a, const Matrix<BigInt>& b) {
  Matrix<BigInt> c(a.rows(), b.cols(), BigInt(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      for (int k = 0; k < a.cols(); ++k) c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

}  // namespace

TEST_CASE("det basics") {
  Matrix<BigInt> id(3, 3, BigInt(0));
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(det(id) == 1);

  Matrix<BigInt> rect(2, 3, BigInt(0));
  CHECK_THROWS_AS(det(rect), std::invalid_argument);

  Matrix<BigInt> singular(2, 2, BigInt(1));
  CHECK(det(singular) == 0);

  // Zero pivot forces a row swap.
  Matrix<BigInt> swapped(2, 2, BigInt(0));
  swapped.at(0, 1) = 1;
  swapped.at(1, 0) = 1;
  CHECK(det(swapped) == -1);
}

TEST_CASE("det over QSqrt2") {
  Matrix<QSqrt2> m(2, 2, QSqrt2());
  m.at(0, 0) = QSqrt2(BigRat(0), BigRat(1));
  m.at(0, 1) = QSqrt2(BigRat(1), BigRat(0));
  m.at(1, 0) = QSqrt2(BigRat(1), BigRat(0));
  m.at(1, 1) = QSqrt2(BigRat(0), BigRat(1));
  CHECK(det(m) == QSqrt2(BigRat(1), BigRat(0)));  // sqrt2*sqrt2 - 1
}

TEST_CASE("det agrees with permutation expansion") {
  testers::Rng rng(0x90210);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = rng.uniform(1, 4);
    const Matrix<BigInt> m = random_int_matrix(rng, dim, 9);
    CHECK(det(m) == testers::perm_det(m));
  }
}

TEST_CASE("det is multiplicative") {
  testers::Rng rng(0x777);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix<BigInt> a = random_int_matrix(rng, 3, 6);
    const Matrix<BigInt> b = random_int_matrix(rng, 3, 6);
    CHECK(det(mat_mul(a, b)) == det(a) * det(b));
  }
}

TEST_CASE("leading minors") {
  Matrix<BigInt> m(2, 2, BigInt(1));
  m.at(1, 1) = 3;
  CHECK(leading_minors(m) == std::vector<BigInt>{BigInt(1), BigInt(2)});

  Matrix<BigInt> diag(3, 3, BigInt(0));
  diag.at(0, 0) = 2;
  diag.at(1, 1) = 3;
  diag.at(2, 2) = 5;
  CHECK(leading_minors(diag) == std::vector<BigInt>{BigInt(2), BigInt(6), BigInt(30)});

  // Singular prefix must not break the remaining minors.
  Matrix<BigInt> s(2, 2, BigInt(0));
  s.at(0, 1) = 1;
  s.at(1, 0) = 1;
  CHECK(leading_minors(s) == std::vector<BigInt>{BigInt(0), BigInt(-1)});
}

TEST_CASE("is_positive_definite basics") {
  Matrix<BigRat> good(2, 2, BigRat(1));
  good.at(1, 1) = 3;
  CHECK(is_positive_definite(good));

  Matrix<BigRat> bad(2, 2, BigRat(1));
  bad.at(0, 1) = 2;
  bad.at(1, 0) = 2;
  CHECK_FALSE(is_positive_definite(bad));  // det -3

  Matrix<BigRat> zero_pivot(2, 2, BigRat(0));
  zero_pivot.at(0, 1) = 1;
  zero_pivot.at(1, 0) = 1;
  CHECK_FALSE(is_positive_definite(zero_pivot));

  Matrix<BigRat> asym(2, 2, BigRat(1));
  asym.at(0, 1) = 2;
  CHECK_THROWS_AS(is_positive_definite(asym), std::invalid_argument);

  Matrix<BigRat> rect(2, 3, BigRat(0));
  CHECK_THROWS_AS(is_positive_definite(rect), std::invalid_argument);
}

TEST_CASE("is_positive_definite agrees with the LDL pivot oracle") {
  testers::Rng rng(0x51d);
  for (int trial = 0; trial < 250; ++trial) {
    const int dim = rng.uniform(1, 4);
    Matrix<BigRat> m(dim, dim, BigRat(0));
    for (int i = 0; i < dim; ++i) {
      m.at(i, i) = BigRat(rng.uniform(-6, 8));
      for (int j = i + 1; j < dim; ++j) {
        m.at(i, j) = BigRat(rng.uniform(-5, 5), rng.uniform(1, 3));
        m.at(j, i) = m.at(i, j);
      }
    }
    CHECK(is_positive_definite(m) == testers::ldl_positive_definite(m));
  }
}
