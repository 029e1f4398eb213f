#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <string>

#include "heckespheres/errors.hpp"

namespace hsp {

// Arbitrary-precision integers and rationals. mpq_class keeps values in
// canonical form (coprime, positive denominator) as long as they are built
// through arithmetic; fromString canonicalises explicitly.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational ratFromString(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("not a rational: '" + s + "'");
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw ParseError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string ratToString(const Rational& r) { return r.get_str(); }

// r^e for integer e; e < 0 requires r != 0.
inline Rational ratPow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (r == 0 && e < 0) throw DivisionByZero("0 raised to a negative power");
  Rational base = e < 0 ? Rational(1) / r : r;
  auto k = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), k);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), k);
  return out;  // coprime powers of a coprime pair stay coprime
}

// Exact square root of a non-negative rational, if it is a perfect square.
inline std::optional<Rational> ratSqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Int num(r.get_num());
  Int den(r.get_den());
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Int sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

}  // namespace hsp
