#pragma once

#include <map>
#include <string>
#include <utility>

#include "heckespheres/rational.hpp"

namespace hsp {

// Exponent pair of a monomial p^(a/2) * q^(b/2).  Exponents are stored
// doubled so that all arithmetic stays integral; a and b may be negative.
struct ExpPair {
  int p2 = 0;
  int q2 = 0;
  friend bool operator==(ExpPair, ExpPair) = default;
};

// Graded lexicographic order (total degree first, then p before q).
struct GradedLexLess {
  bool operator()(ExpPair a, ExpPair b) const noexcept {
    const long ga = static_cast<long>(a.p2) + a.q2;
    const long gb = static_cast<long>(b.p2) + b.q2;
    if (ga != gb) return ga < gb;
    if (a.p2 != b.p2) return a.p2 < b.p2;
    return a.q2 < b.q2;
  }
};

// Laurent polynomial in p^(1/2), q^(1/2) over the rationals.  Zero
// coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<ExpPair, Rational, GradedLexLess>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c) {
    if (c != 0) terms_[ExpPair{0, 0}] = c;
  }

  static LaurentPoly monomial(const Rational& c, int p2, int q2) {
    LaurentPoly out;
    if (c != 0) out.terms_[ExpPair{p2, q2}] = c;
    return out;
  }

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  bool isMonomial() const { return terms_.size() == 1; }
  std::size_t termCount() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Leading term in graded-lex order; poly must be nonzero.
  std::pair<ExpPair, Rational> leadingTerm() const;
  // Componentwise minimum of the exponent pairs; poly must be nonzero.
  ExpPair minExponents() const;

  void addTerm(ExpPair e, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(ExpPair by) const;  // multiply by the monomial p^(by.p2/2) q^(by.q2/2)
  LaurentPoly pow(unsigned k) const;

  // Positive rational content; *this == content * primitive part, where the
  // primitive part has coprime integer coefficients (signs untouched).
  Rational rationalContent() const;

  // Evaluate with the given values for p^(1/2) and q^(1/2).  Throws
  // DenominatorVanishes when a negative exponent meets a zero value.
  Rational eval(const Rational& pHalf, const Rational& qHalf) const;

  // All doubled exponents even, i.e. the poly lives in Q[p^{\pm1}, q^{\pm1}].
  bool hasOnlyWholeExponents() const;
  // Evaluate with values for p and q themselves; requires whole exponents.
  Rational evalPQ(const Rational& p, const Rational& q) const;

  std::string str() const;

 private:
  TermMap terms_;
};

// gcd of two Laurent polynomials, normalised to have minimal exponents zero,
// coprime integer coefficients and positive leading coefficient.  The result
// is only meaningful up to monomial units, which this normalisation fixes.
LaurentPoly polyGcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact division; throws DomainError when b does not divide a.
LaurentPoly divExact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace hsp
