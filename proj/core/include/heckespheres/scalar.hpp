#pragma once

#include <string>

#include "heckespheres/laurent.hpp"

namespace hsp {

// Element of the field Q(p^(1/2), q^(1/2)), kept in canonical form:
//  - num/den coprime as polynomials, den nonzero,
//  - den a plain polynomial with trivial monomial content (monomial factors
//    live in num, which may have negative exponents),
//  - integer coefficients on both sides with coprime contents,
//  - positive leading coefficient of den in graded-lex order.
// Equality of field elements is therefore structural equality.
class Scalar {
 public:
  Scalar() : num_(), den_(Rational(1)) {}
  Scalar(int v) : Scalar(Rational(v)) {}  // NOLINT: intentional conversion
  explicit Scalar(const Rational& v) : num_(v), den_(Rational(1)) { canonicalize(); }
  explicit Scalar(LaurentPoly poly) : num_(std::move(poly)), den_(Rational(1)) {
    canonicalize();
  }
  Scalar(LaurentPoly num, LaurentPoly den);

  static Scalar p() { return monomial(1, 2, 0); }
  static Scalar q() { return monomial(1, 0, 2); }
  static Scalar pHalf() { return monomial(1, 1, 0); }
  static Scalar qHalf() { return monomial(1, 0, 1); }
  // c * p^(p2/2) * q^(q2/2)
  static Scalar monomial(const Rational& c, int p2, int q2);
  // p^(e/2) / q^(e/2) for arbitrary integer e
  static Scalar pPow2(int p2) { return monomial(1, p2, 0); }
  static Scalar qPow2(int q2) { return monomial(1, 0, q2); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool isZero() const { return num_.isZero(); }
  bool isOne() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }

  Scalar inverse() const;
  Scalar pow(int e) const;

  // Exact square root of a monomial scalar with square coefficient.
  Scalar sqrtMonomial() const;

  // The bar involution p^(1/2) -> p^(-1/2), q^(1/2) -> q^(-1/2).
  Scalar invertVars() const;

  // Substitute numeric values for p^(1/2) and q^(1/2); the canonical form is
  // in lowest terms so a vanishing denominator is a genuine pole.
  Rational specialize(const Rational& pHalf, const Rational& qHalf) const;
  // Substitute values for p and q; requires whole exponents throughout.
  Rational specializePQ(const Rational& p, const Rational& q) const;

  std::string str() const;
  static Scalar parse(const std::string& text);

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

inline Scalar operator*(const Rational& c, const Scalar& s) { return Scalar(c) * s; }

}  // namespace hsp
