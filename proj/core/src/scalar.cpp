#include "heckespheres/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hsp {

Scalar::Scalar(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.isZero()) throw DivisionByZero("scalar with zero denominator");
  canonicalize();
}

Scalar Scalar::monomial(const Rational& c, int p2, int q2) {
  Scalar out;
  out.num_ = LaurentPoly::monomial(c, p2, q2);
  out.den_ = LaurentPoly(Rational(1));
  out.canonicalize();
  return out;
}

bool Scalar::isOne() const {
  return den_ == LaurentPoly(Rational(1)) && num_ == LaurentPoly(Rational(1));
}

void Scalar::canonicalize() {
  if (num_.isZero()) {
    den_ = LaurentPoly(Rational(1));
    return;
  }
  // Move monomial content out of both parts; it ends up attached to num.
  const ExpPair mn = num_.minExponents();
  const ExpPair md = den_.minExponents();
  LaurentPoly n = num_.shifted(ExpPair{-mn.p2, -mn.q2});
  LaurentPoly d = den_.shifted(ExpPair{-md.p2, -md.q2});

  LaurentPoly g = polyGcd(n, d);
  if (!g.isConstant()) {
    n = divExact(n, g);
    d = divExact(d, g);
  }

  // Integer coefficients with coprime contents, positive leading den.
  const Rational cn = n.rationalContent();
  const Rational cd = d.rationalContent();
  Rational ratio = cn / cd;  // canonical: coprime, positive denominator
  n = n.scaled(Rational(ratio.get_num()) / cn);
  d = d.scaled(Rational(ratio.get_den()) / cd);
  if (d.leadingTerm().second < 0) {
    n = -n;
    d = -d;
  }
  num_ = n.shifted(ExpPair{mn.p2 - md.p2, mn.q2 - md.q2});
  den_ = std::move(d);
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.num_ = -out.num_;
  return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (isZero()) return o;
  if (o.isZero()) return *this;
  if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (isZero() || o.isZero()) return Scalar();
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (isZero()) throw DivisionByZero("inverse of zero scalar");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
  if (e == 0) return Scalar(1);
  const Scalar base = e < 0 ? inverse() : *this;
  unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
  Scalar out(1);
  Scalar sq = base;
  while (k > 0) {
    if (k & 1u) out *= sq;
    sq = sq * sq;
    k >>= 1u;
  }
  return out;
}

Scalar Scalar::sqrtMonomial() const {
  if (isZero()) return Scalar();
  if (!num_.isMonomial() || !den_.isConstant())
    throw DomainError("sqrt requires a monomial scalar");
  const auto [e, c] = num_.leadingTerm();
  const Rational value = c / den_.leadingTerm().second;
  auto root = ratSqrt(value);
  if (!root || (e.p2 & 1) || (e.q2 & 1))
    throw DomainError("monomial is not a perfect square");
  return monomial(*root, e.p2 / 2, e.q2 / 2);
}

Scalar Scalar::invertVars() const {
  auto flip = [](const LaurentPoly& poly) {
    LaurentPoly out;
    for (const auto& [e, c] : poly.terms()) out.addTerm(ExpPair{-e.p2, -e.q2}, c);
    return out;
  };
  if (isZero()) return Scalar();
  return Scalar(flip(num_), flip(den_));
}

Rational Scalar::specialize(const Rational& pHalf, const Rational& qHalf) const {
  const Rational denVal = den_.eval(pHalf, qHalf);
  if (denVal == 0) throw DenominatorVanishes("denominator vanishes at specialisation point");
  return num_.eval(pHalf, qHalf) / denVal;
}

Rational Scalar::specializePQ(const Rational& p, const Rational& q) const {
  const Rational denVal = den_.evalPQ(p, q);
  if (denVal == 0) throw DenominatorVanishes("denominator vanishes at specialisation point");
  return num_.evalPQ(p, q) / denVal;
}

std::string Scalar::str() const {
  // Interchange form uses plain polynomials on both sides of the slash, so
  // negative exponents of num move into den for display.
  LaurentPoly num = num_, den = den_;
  if (!num.isZero()) {
    const ExpPair m = num.minExponents();
    const ExpPair shift{std::max(0, -m.p2), std::max(0, -m.q2)};
    if (shift.p2 != 0 || shift.q2 != 0) {
      num = num.shifted(shift);
      den = den.shifted(shift);
    }
  }
  if (den == LaurentPoly(Rational(1))) return num.str();
  return "(" + num.str() + ")/(" + den.str() + ")";
}

// --- parsing ---------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Scalar parse() {
    skipWs();
    Scalar value = parsePolyOrFraction();
    skipWs();
    if (pos_ != s_.size()) fail("trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("scalar parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  void skipWs() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skipWs();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skipWs();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Scalar parsePolyOrFraction() {
    if (peek() == '(') {
      const std::size_t mark = pos_;
      eat('(');
      Scalar num = parsePoly();
      if (!eat(')')) fail("expected ')'");
      if (eat('/')) {
        if (!eat('(')) fail("expected '(' after '/'");
        Scalar den = parsePoly();
        if (!eat(')')) fail("expected ')'");
        if (den.isZero()) throw DivisionByZero("parsed zero denominator");
        return num / den;
      }
      pos_ = mark;  // a parenthesised polynomial without '/denominator'
    }
    return parsePoly();
  }

  Scalar parsePoly() {
    Scalar total;
    bool negative = false;
    if (eat('-'))
      negative = true;
    else
      eat('+');
    for (;;) {
      Scalar term = parseTerm();
      total += negative ? -term : term;
      if (eat('+'))
        negative = false;
      else if (eat('-'))
        negative = true;
      else
        break;
    }
    return total;
  }

  Scalar parseTerm() {
    Scalar term(1);
    bool sawFactor = false;
    for (;;) {
      const char c = peek();
      if (c == 'p' || c == 'q') {
        ++pos_;
        term *= Scalar::monomial(1, c == 'p' ? parseExponent() : 0,
                                 c == 'q' ? parseExponent() : 0);
        sawFactor = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        term *= Scalar(parseRational());
        sawFactor = true;
      } else if (c == '(') {
        eat('(');
        Scalar inner = parsePoly();
        if (!eat(')')) fail("expected ')'");
        term *= inner;
        sawFactor = true;
      } else {
        fail("expected a term");
      }
      if (!eat('*')) break;
    }
    if (!sawFactor) fail("empty term");
    return term;
  }

  // doubled exponent after 'p'/'q': absent -> 2; '^k' -> 2k; '^(a/2)' -> a
  int parseExponent() {
    if (pos_ >= s_.size() || s_[pos_] != '^') return 2;
    ++pos_;
    if (eat('(')) {
      long a = parseInt();
      if (!eat('/')) fail("expected '/2' in exponent");
      long two = parseInt();
      if (two != 2) fail("exponent denominator must be 2");
      if (!eat(')')) fail("expected ')'");
      return static_cast<int>(a);
    }
    return static_cast<int>(2 * parseInt());
  }

  long parseInt() {
    skipWs();
    bool neg = false;
    if (eat('-')) neg = true;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected an integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    return neg ? -v : v;
  }

  Rational parseRational() {
    skipWs();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits = s_.substr(start, pos_ - start);
    // allow a/b with integer b, but not p/q monomial division
    if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      digits += "/" + s_.substr(start, pos_ - start);
    }
    return ratFromString(digits);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const std::string& text) { return Parser(text).parse(); }

}  // namespace hsp
