#include <doctest.h>

#include "heckespheres/qseries.hpp"

using namespace hsp;

TEST_CASE("q-Pochhammer") {
  CHECK(qPochhammer(Scalar::q(), 0).isOne());
  CHECK(qPochhammer(Scalar::q(), 2) ==
        (Scalar(1) - Scalar::q()) * (Scalar(1) - Scalar::q() * Scalar::q()));
  CHECK(qPochhammer(-Scalar::p(), 1) == Scalar(1) + Scalar::p());
}

TEST_CASE("q-binomials") {
  CHECK(qBinomial(5, 0).isOne());
  CHECK(qBinomial(2, 1) == Scalar(1) + Scalar::q());
  // Pascal recurrence
  CHECK(qBinomial(4, 2) ==
        qBinomial(3, 2) + Scalar::q() * Scalar::q() * qBinomial(3, 1));
  CHECK_THROWS_AS(qBinomial(3, 4), DomainError);
  CHECK_THROWS_AS(qBinomial(3, -1), DomainError);
  // polynomial in q after canonicalisation
  CHECK(qBinomial(4, 2).den() == Scalar(1).den());
}

TEST_CASE("q-Krawtchouk values") {
  CHECK(qKrawtchouk(QKrawParams{0, 3, Scalar::p(), 5}).isOne());
  CHECK(qKrawtchouk(QKrawParams{3, 0, Scalar::p(), 5}).isOne());

  // n=1, x=1, N=1, a=p: two-term sum computed directly,
  // 1 + (1-q^{-1})(1-q^{-1})(1+1/p) q / ((1-q^{-1})(1-q))
  const Scalar q = Scalar::q();
  const Scalar direct =
      Scalar(1) + (Scalar(1) - q.inverse()) * (Scalar(1) + Scalar::p().inverse()) *
                      q / (Scalar(1) - q);
  CHECK(qKrawtchouk(QKrawParams{1, 1, Scalar::p(), 1}) == direct);
  CHECK(direct == Scalar(-1) / Scalar::p());

  // matches K_n(q^{-N}; a, N; q) = (-a)^{-n} q^{n(n-N)} at n=N=1
  CHECK(qKrawtchouk(QKrawParams{1, 1, Scalar::p(), 1}) == (-Scalar::p()).inverse());

  CHECK_THROWS_AS(qKrawtchouk(QKrawParams{2, 0, Scalar::p(), 1}), DomainError);
  CHECK_THROWS_AS(qKrawtchouk(QKrawParams{0, 0, Scalar(), 1}), DomainError);
}

TEST_CASE("dual q-Krawtchouk") {
  CHECK(dualQKrawtchouk(3, 0, Scalar::p(), 4).isOne());
  CHECK(dualQKrawtchouk(0, 2, Scalar::p(), 4).isOne());
  CHECK(dualQKrawtchouk(1, 1, Scalar::p(), 1) == Scalar(-1) / Scalar::p());
  // degree/argument swap by definition
  CHECK(dualQKrawtchouk(2, 1, Scalar::p(), 3) ==
        qKrawtchouk(QKrawParams{2, 1, Scalar::p(), 3}));
}

TEST_CASE("difference equation and contiguous relation") {
  // spot checks; the verify suite covers the full N <= 8 sweep
  for (int N = 0; N <= 4; ++N)
    for (int deg = 0; deg <= N; ++deg)
      for (int x = 0; x <= N; ++x)
        CHECK(checkDifferenceEquation(QKrawParams{deg, x, Scalar::p(), N}));
  for (int N = 1; N <= 4; ++N)
    for (int deg = 1; deg < N; ++deg)
      for (int x = 0; x < N; ++x) CHECK(checkContiguous(deg, x, Scalar::p(), N));
  // also with a generic rational parameter value
  const Scalar a = Scalar(Rational(3, 7));
  CHECK(checkDifferenceEquation(QKrawParams{2, 1, a, 3}));
  CHECK(checkContiguous(2, 1, a, 3));
  CHECK_THROWS_AS(checkContiguous(3, 0, Scalar::p(), 3), DomainError);
}

TEST_CASE("classical Krawtchouk oracle") {
  CHECK(classicalKrawtchoukOracle(0, 2, 3) == Rational(1));
  CHECK(classicalKrawtchoukOracle(2, 0, 3) == Rational(1));
  CHECK(classicalKrawtchoukOracle(1, 1, 1) == Rational(-1));
  // q -> 1 limit of the q-Krawtchouk in lowest terms
  for (int N = 1; N <= 4; ++N)
    for (int deg = 0; deg <= N; ++deg)
      for (int x = 0; x <= N; ++x)
        CHECK(qKrawtchouk(QKrawParams{deg, x, Scalar::p(), N})
                  .specialize(Rational(1), Rational(1)) ==
              classicalKrawtchoukOracle(deg, x, N));
}
