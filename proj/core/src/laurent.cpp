#include "heckespheres/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <vector>

namespace hsp {

bool LaurentPoly::isConstant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0};
}

std::pair<ExpPair, Rational> LaurentPoly::leadingTerm() const {
  assert(!terms_.empty());
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

ExpPair LaurentPoly::minExponents() const {
  assert(!terms_.empty());
  ExpPair m{terms_.begin()->first.p2, terms_.begin()->first.q2};
  for (const auto& [e, c] : terms_) {
    m.p2 = std::min(m.p2, e.p2);
    m.q2 = std::min(m.q2, e.q2);
  }
  return m;
}

void LaurentPoly::addTerm(ExpPair e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.addTerm(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.addTerm(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      out.addTerm(ExpPair{e1.p2 + e2.p2, e1.q2 + e2.q2}, c1 * c2);
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(ExpPair by) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_)
    out.terms_.emplace(ExpPair{e.p2 + by.p2, e.q2 + by.q2}, c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly out{Rational(1)};
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1u) out = out * base;
    base = base * base;
    k >>= 1u;
  }
  return out;
}

Rational LaurentPoly::rationalContent() const {
  assert(!terms_.empty());
  Int num(0), den(1);
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), mpq_numref(c.get_mpq_t()));
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), mpq_denref(c.get_mpq_t()));
  }
  Rational content(num, den);
  content.canonicalize();
  return content;
}

Rational LaurentPoly::eval(const Rational& pHalf, const Rational& qHalf) const {
  Rational out(0);
  for (const auto& [e, c] : terms_) {
    if ((pHalf == 0 && e.p2 < 0) || (qHalf == 0 && e.q2 < 0))
      throw DenominatorVanishes("negative exponent at zero parameter value");
    if ((pHalf == 0 && e.p2 > 0) || (qHalf == 0 && e.q2 > 0)) continue;
    out += c * ratPow(pHalf, e.p2) * ratPow(qHalf, e.q2);
  }
  return out;
}

bool LaurentPoly::hasOnlyWholeExponents() const {
  for (const auto& [e, c] : terms_)
    if ((e.p2 & 1) || (e.q2 & 1)) return false;
  return true;
}

Rational LaurentPoly::evalPQ(const Rational& p, const Rational& q) const {
  Rational out(0);
  for (const auto& [e, c] : terms_) {
    if ((e.p2 & 1) || (e.q2 & 1))
      throw DomainError("half-integer exponent; value for p^(1/2), q^(1/2) required");
    if ((p == 0 && e.p2 < 0) || (q == 0 && e.q2 < 0))
      throw DenominatorVanishes("negative exponent at zero parameter value");
    if ((p == 0 && e.p2 > 0) || (q == 0 && e.q2 > 0)) continue;
    out += c * ratPow(p, e.p2 / 2) * ratPow(q, e.q2 / 2);
  }
  return out;
}

namespace {

void appendExponent(std::ostringstream& os, char var, int e2) {
  if (e2 == 0) return;
  os << var;
  if (e2 == 2) return;
  if (e2 % 2 == 0) {
    os << '^' << e2 / 2;
  } else {
    os << "^(" << e2 << "/2)";
  }
}

}  // namespace

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending graded-lex
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? '-' : '+');
    }
    const bool hasMono = e.p2 != 0 || e.q2 != 0;
    if (!hasMono) {
      os << ratToString(mag);
    } else {
      if (mag != 1) os << ratToString(mag) << '*';
      std::ostringstream mono;
      appendExponent(mono, 'p', e.p2);
      if (e.p2 != 0 && e.q2 != 0) mono << '*';
      appendExponent(mono, 'q', e.q2);
      os << mono.str();
    }
  }
  return os.str();
}

// --- gcd machinery -------------------------------------------------------
//
// After stripping monomial content both inputs are genuine polynomials in
// P = p^(1/2) and Q = q^(1/2).  gcd is computed over Z with the primitive
// polynomial remainder sequence, treating P as the main variable with
// coefficients in Z[Q].

namespace {

using ZPoly = std::vector<Int>;  // univariate over Z, ascending exponents

void trimZ(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool isZeroZ(const ZPoly& a) { return a.empty(); }

Int contentZ(const ZPoly& a) {
  Int g(0);
  for (const Int& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;  // non-negative
}

ZPoly divScalarZ(const ZPoly& a, const Int& s) {
  assert(s != 0);
  ZPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    assert(mpz_divisible_p(a[i].get_mpz_t(), s.get_mpz_t()));
    mpz_divexact(out[i].get_mpz_t(), a[i].get_mpz_t(), s.get_mpz_t());
  }
  return out;
}

ZPoly primitivePartZ(const ZPoly& a) {
  if (isZeroZ(a)) return a;
  Int c = contentZ(a);
  if (a.back() < 0) c = -c;  // normalise leading coefficient positive
  return divScalarZ(a, c);
}

ZPoly mulZ(const ZPoly& a, const ZPoly& b) {
  if (isZeroZ(a) || isZeroZ(b)) return {};
  ZPoly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trimZ(out);
  return out;
}

ZPoly scaleZ(const ZPoly& a, const Int& s) {
  if (s == 0) return {};
  ZPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

ZPoly subZ(const ZPoly& a, const ZPoly& b) {
  ZPoly out = a;
  if (out.size() < b.size()) out.resize(b.size(), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trimZ(out);
  return out;
}

// Pseudo-remainder of a by b (b != 0).  The content picked up by the
// repeated scaling is irrelevant because the caller takes primitive parts.
ZPoly pseudoRemZ(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const Int& lb = b.back();
  while (!isZeroZ(a) && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    Int la = a.back();
    a = scaleZ(a, lb);
    ZPoly sub(shift, Int(0));
    sub.insert(sub.end(), b.begin(), b.end());
    a = subZ(a, scaleZ(sub, la));  // leading terms cancel, degree drops
  }
  return a;
}

ZPoly gcdZ(ZPoly a, ZPoly b) {
  trimZ(a);
  trimZ(b);
  if (isZeroZ(a)) return primitivePartZ(b);
  if (isZeroZ(b)) return primitivePartZ(a);
  Int c;
  mpz_gcd(c.get_mpz_t(), contentZ(a).get_mpz_t(), contentZ(b).get_mpz_t());
  a = primitivePartZ(a);
  b = primitivePartZ(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!isZeroZ(b)) {
    ZPoly r = pseudoRemZ(a, b);
    a = std::move(b);
    b = primitivePartZ(r);
  }
  ZPoly g = primitivePartZ(a);
  return scaleZ(g, c);
}

using BPoly = std::vector<ZPoly>;  // coefficients in Z[Q], by P-degree

void trimB(BPoly& a) {
  while (!a.empty() && isZeroZ(a.back())) a.pop_back();
}

bool isZeroB(const BPoly& a) { return a.empty(); }

ZPoly contentB(const BPoly& a) {
  ZPoly g;
  for (const ZPoly& c : a) g = gcdZ(g, c);
  return g;
}

// Exact division of every coefficient by a univariate polynomial.
ZPoly divZExact(const ZPoly& a, const ZPoly& b);

BPoly divContentB(const BPoly& a, const ZPoly& s) {
  BPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = isZeroZ(a[i]) ? ZPoly{} : divZExact(a[i], s);
  return out;
}

// Exact univariate division over Z (b's leading coefficient need not be 1;
// exactness is asserted).
ZPoly divZExact(const ZPoly& a, const ZPoly& b) {
  assert(!isZeroZ(b));
  if (isZeroZ(a)) return {};
  assert(a.size() >= b.size());
  ZPoly rem = a;
  ZPoly quot(a.size() - b.size() + 1, Int(0));
  const Int& lb = b.back();
  while (!isZeroZ(rem)) {
    assert(rem.size() >= b.size());
    const std::size_t shift = rem.size() - b.size();
    Int qc;
    assert(mpz_divisible_p(rem.back().get_mpz_t(), lb.get_mpz_t()));
    mpz_divexact(qc.get_mpz_t(), rem.back().get_mpz_t(), lb.get_mpz_t());
    quot[shift] = qc;
    ZPoly sub(shift, Int(0));
    sub.insert(sub.end(), b.begin(), b.end());
    rem = subZ(rem, scaleZ(sub, qc));
  }
  return quot;
}

BPoly mulBbyZ(const BPoly& a, const ZPoly& s) {
  BPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mulZ(a[i], s);
  trimB(out);
  return out;
}

BPoly subB(const BPoly& a, const BPoly& b) {
  BPoly out = a;
  if (out.size() < b.size()) out.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = subZ(out[i], b[i]);
  trimB(out);
  return out;
}

BPoly shiftP(const BPoly& a, std::size_t k) {
  BPoly out(k);
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

BPoly pseudoRemB(BPoly a, const BPoly& b) {
  const std::size_t db = b.size() - 1;
  const ZPoly& lb = b.back();
  while (!isZeroB(a) && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    ZPoly la = a.back();
    a = mulBbyZ(a, lb);
    a = subB(a, mulBbyZ(shiftP(b, shift), la));  // leading terms cancel
  }
  return a;
}

BPoly primitivePartB(const BPoly& a) {
  if (isZeroB(a)) return a;
  ZPoly c = contentB(a);
  return divContentB(a, c);
}

BPoly gcdB(BPoly a, BPoly b) {
  trimB(a);
  trimB(b);
  if (isZeroB(a)) return b;
  if (isZeroB(b)) return a;
  ZPoly ca = contentB(a);
  ZPoly cb = contentB(b);
  ZPoly c = gcdZ(ca, cb);
  a = divContentB(a, ca);
  b = divContentB(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (!isZeroB(b)) {
    BPoly r = pseudoRemB(a, b);
    a = std::move(b);
    b = primitivePartB(r);
  }
  a = primitivePartB(a);
  return mulBbyZ(a, c);
}

// Conversions between the plain-poly part of a LaurentPoly and BPoly.
BPoly toBPoly(const LaurentPoly& a) {
  // a must have non-negative doubled exponents
  Rational content = a.rationalContent();
  BPoly out;
  for (const auto& [e, coeff] : a.terms()) {
    assert(e.p2 >= 0 && e.q2 >= 0);
    Rational scaled = coeff / content;
    assert(scaled.get_den() == 1);
    if (out.size() <= static_cast<std::size_t>(e.p2)) out.resize(e.p2 + 1);
    ZPoly& row = out[e.p2];
    if (row.size() <= static_cast<std::size_t>(e.q2)) row.resize(e.q2 + 1, Int(0));
    row[e.q2] = scaled.get_num();
  }
  trimB(out);
  return out;
}

LaurentPoly fromBPoly(const BPoly& a) {
  LaurentPoly out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != 0)
        out.addTerm(ExpPair{static_cast<int>(i), static_cast<int>(j)}, Rational(a[i][j]));
  return out;
}

}  // namespace

LaurentPoly polyGcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.isZero() && b.isZero()) return LaurentPoly{};
  auto strip = [](const LaurentPoly& x) {
    ExpPair m = x.minExponents();
    return x.shifted(ExpPair{-m.p2, -m.q2});
  };
  if (a.isZero() || b.isZero()) {
    const LaurentPoly& nz = a.isZero() ? b : a;
    BPoly g = toBPoly(strip(nz));
    LaurentPoly out = fromBPoly(g);
    if (out.leadingTerm().second < 0) out = -out;
    return out;
  }
  BPoly g = gcdB(toBPoly(strip(a)), toBPoly(strip(b)));
  LaurentPoly out = fromBPoly(g);
  if (out.leadingTerm().second < 0) out = -out;
  return out;
}

LaurentPoly divExact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.isZero()) throw DivisionByZero("polynomial division by zero");
  if (a.isZero()) return LaurentPoly{};
  // Shift both operands to genuine polynomials; a Laurent quotient of plain
  // polynomials is itself plain, so leading-monomial divisibility checks are
  // sound and graded-lex descent guarantees termination.
  const ExpPair ma = a.minExponents();
  const ExpPair mb = b.minExponents();
  LaurentPoly rem = a.shifted(ExpPair{-ma.p2, -ma.q2});
  const LaurentPoly den = b.shifted(ExpPair{-mb.p2, -mb.q2});
  LaurentPoly quot;
  const auto [eb, cb] = den.leadingTerm();
  while (!rem.isZero()) {
    const auto [ea, ca] = rem.leadingTerm();
    ExpPair shift{ea.p2 - eb.p2, ea.q2 - eb.q2};
    if (shift.p2 < 0 || shift.q2 < 0) throw DomainError("inexact polynomial division");
    Rational c = ca / cb;
    quot.addTerm(shift, c);
    rem = rem - den.shifted(shift).scaled(c);
  }
  return quot.shifted(ExpPair{ma.p2 - mb.p2, ma.q2 - mb.q2});
}

}  // namespace hsp
