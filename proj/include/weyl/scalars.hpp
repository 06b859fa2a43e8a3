#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace weyl {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// 2^k as an exact rational; k may be negative.
BigRat pow2_rat(long k);

/// b^e with e >= 0, computed exactly.
BigRat rat_pow(const BigRat& b, int e);

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

/// Element of the ordered field Q[sqrt 2], stored as two exact rational
/// components rat + irr*sqrt(2). The representation is unique, so equality
/// is componentwise and the sign is decidable inside rational arithmetic.
struct QSqrt2 {
  BigRat rat;
  BigRat irr;

  QSqrt2() = default;
  QSqrt2(BigRat r, BigRat i) : rat(std::move(r)), irr(std::move(i)) {}
  QSqrt2(BigRat r) : rat(std::move(r)) {}  // rationals embed
  QSqrt2(int r) : rat(r) {}

  bool is_zero() const { return rat == 0 && irr == 0; }

  friend bool operator==(const QSqrt2&, const QSqrt2&) = default;

  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
};

QSqrt2 operator+(QSqrt2 a, const QSqrt2& b);
QSqrt2 operator-(QSqrt2 a, const QSqrt2& b);
QSqrt2 operator-(const QSqrt2& a);
QSqrt2 operator*(const QSqrt2& a, const QSqrt2& b);

/// Multiplicative inverse; throws std::domain_error on zero.
QSqrt2 inverse(const QSqrt2& a);
QSqrt2 operator/(const QSqrt2& a, const QSqrt2& b);

/// Exact value of sqrt(2)^l for any integer l:
/// even l -> (2^{l/2}, 0), odd l -> (0, 2^{(l-1)/2}).
QSqrt2 sqrt2_power(long l);

/// Sign under the real embedding: -1, 0 or +1. When the two components
/// disagree in sign the verdict compares rat^2 against 2*irr^2.
int ring_sign(const QSqrt2& s);
int ring_sign(const BigInt& v);
int ring_sign(const BigRat& v);

/// Sign of a - b; a total order on Q[sqrt 2].
int compare(const QSqrt2& a, const QSqrt2& b);

/// Exact rendering "a + b*sqrt2" (e.g. "3", "sqrt2", "1 - 3/2*sqrt2").
std::string to_string(const QSqrt2& s);

/// Display-only double approximation; never used in decisions.
double approx(const QSqrt2& s);

// Ring hooks used by the generic exact-matrix kernel.
bool ring_is_zero(const BigInt& v);
bool ring_is_zero(const BigRat& v);
bool ring_is_zero(const QSqrt2& v);
BigInt ring_exact_div(const BigInt& a, const BigInt& b);
BigRat ring_exact_div(const BigRat& a, const BigRat& b);
QSqrt2 ring_exact_div(const QSqrt2& a, const QSqrt2& b);
BigInt ring_zero_like(const BigInt&);
BigRat ring_zero_like(const BigRat&);
QSqrt2 ring_zero_like(const QSqrt2&);

}  // namespace weyl
