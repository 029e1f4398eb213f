#include <doctest.h>

#include "heckespheres/spherical.hpp"

using namespace hsp;

TEST_CASE("invariant basis") {
  const InvariantBasis basis1 = buildInvariantBasis(1);
  CHECK(equalAsVectors(basis1.w[0], VElt::unit(1)));
  // n=1: w_1 = v(-1) = p^{-1} u(-1) and B(w_1, w_1) = 1/p
  CHECK(equalAsVectors(basis1.w[1],
                       VElt::basisVector(1, VBasis::U, 1).scaled(Scalar::p().inverse())));
  CHECK(bilinearB(basis1.w[1], basis1.w[1]) == Scalar::p().inverse());
  CHECK(invariantNorm(1, 1) == Scalar::p().inverse());

  const InvariantBasis basis3 = buildInvariantBasis(3);
  CHECK(representativeIndependenceHolds(basis3));
  for (int d = 0; d <= 3; ++d)
    for (int e = 0; e <= 3; ++e)
      CHECK(bilinearB(basis3.w[d], basis3.w[e]) ==
            (d == e ? invariantNorm(d, 3) : Scalar()));
}

TEST_CASE("E, F, K actions on the invariant basis") {
  const InvariantBasis basis = buildInvariantBasis(2);
  for (int d = 0; d <= 2; ++d)
    for (UqGen g : {UqGen::K, UqGen::E, UqGen::F}) CHECK_NOTHROW((void)actEFK(g, basis, d));
  CHECK(actEFK(UqGen::F, basis, 0).isZero());
  // n=1: t(E) w_0 = p^(1/2) w_1
  const InvariantBasis basis1 = buildInvariantBasis(1);
  CHECK(equalAsVectors(actEFK(UqGen::E, basis1, 0), basis1.w[1].scaled(Scalar::pHalf())));
}

TEST_CASE("phi values") {
  const InvariantBasis basis = buildInvariantBasis(2);
  for (int f = 0; f <= 2; ++f) CHECK(phiEval(f, 0, basis, true).isOne());
  for (int d = 0; d <= 2; ++d) CHECK(phiEval(0, d, basis, true).isOne());
  const InvariantBasis basis1 = buildInvariantBasis(1);
  CHECK(phiEval(1, 1, basis1) == Scalar(-1) / Scalar::p());
}

TEST_CASE("recurrence route") {
  const SphericalTable t1 = phiViaRecurrence(1);
  CHECK(t1.values[0][0].isOne());
  CHECK(t1.values[0][1].isOne());
  CHECK(t1.values[1][0].isOne());
  CHECK(t1.values[1][1] == Scalar(-1) / Scalar::p());
  // row f=0 stays identically one
  const SphericalTable t4 = phiViaRecurrence(4);
  for (int d = 0; d <= 4; ++d) CHECK(t4.values[0][d].isOne());
}

TEST_CASE("identification with q-Krawtchouk") {
  for (int n = 1; n <= 3; ++n) {
    const IdentifyReport report = identifyKrawtchouk(n);
    CHECK(report.pass());
  }
  // (f,d) = (f,n) endpoint: (-p)^{-f} q^{f(f-n)}
  const InvariantBasis basis = buildInvariantBasis(3);
  for (int f = 0; f <= 3; ++f)
    CHECK(phiEval(f, 3, basis) ==
          (-Scalar::p()).pow(-f) * Scalar::qPow2(2 * f * (f - 3)));
}

TEST_CASE("orthogonality weights H_f") {
  CHECK(weightHf(0, 3) == qPochhammer(-Scalar::p(), 3));
  CHECK(weightHf(3, 3) == qPochhammer(-Scalar::p().inverse(), 3));
  // n=1: H_1 = 1 + p^{-1} = 1/h_{(-1)} inverted
  CHECK(weightHf(1, 1) == Scalar(1) + Scalar::p().inverse());
  CHECK(weightHf(1, 1) == weightH(SignVector(1, 1)));
  for (int n = 1; n <= 3; ++n) CHECK(orthogonalityHf(n).pass());
}

TEST_CASE("eigen operator and convolution of spherical functions") {
  for (int n = 1; n <= 3; ++n) {
    const EigenOperatorReport report = eigenOperatorCheck(n);
    CHECK(report.eigenvectors);
    CHECK(report.convolution);
  }
}

TEST_CASE("product linearisation coefficients") {
  const int n = 3;
  const InvariantBasis basis = buildInvariantBasis(n);
  for (int d = 0; d <= n; ++d) {
    const auto coeffs = productCoeffs(basis, 0, d);
    for (int l = 0; l <= n; ++l) CHECK(coeffs[l] == (l == d ? Scalar(1) : Scalar()));
  }
  // k=1 row against the recurrence coefficients: w := sum_i u(x^i) equals
  // c w_1 with c = chi_1(w) = p (1-q^n)/(1-q), and
  // (1-q) rho(P)(w w_d) matches the three recurrence terms
  const Scalar c = Scalar::p() * (Scalar(1) - Scalar::qPow2(2 * n)) /
                   (Scalar(1) - Scalar::q());
  for (int d = 0; d <= n; ++d) {
    const auto coeffs = productCoeffs(basis, 1, d);
    const Scalar oneMinusQd = Scalar(1) - Scalar::qPow2(2 * d);
    const Scalar oneMinusQ = Scalar(1) - Scalar::q();
    if (d < n)
      CHECK(coeffs[d + 1] * c ==
            Scalar::p() * Scalar::qPow2(2 * d) * (Scalar(1) - Scalar::qPow2(2 * (n - d))) /
                oneMinusQ);
    CHECK(coeffs[d] * c == oneMinusQd * (Scalar::p() - Scalar(1)) / oneMinusQ);
    if (d > 0) CHECK(coeffs[d - 1] * c == oneMinusQd / oneMinusQ);
  }
}

TEST_CASE("proof identity and product lemma") {
  const InvariantBasis basis = buildInvariantBasis(3);
  for (int d = 0; d <= 3; ++d) CHECK(recurrenceProofIdentity(basis, d));
  for (int i = 1; i <= 3; ++i)
    for (std::uint32_t z = 0; z < (1u << (i - 1)); ++z) CHECK(lemmaProductCheck(i, z, 3));
  // i = n reduces to the square relation itself
  CHECK(lemmaProductCheck(2, 0, 2));
}

TEST_CASE("Lie type presets") {
  CHECK(lieTypePreset(LieType::B, Rational(3)) == std::pair{Rational(3), Rational(3)});
  CHECK(lieTypePreset(LieType::C, Rational(5)) == std::pair{Rational(5), Rational(5)});
  CHECK(lieTypePreset(LieType::TwistedD, Rational(2)) == std::pair{Rational(4), Rational(2)});
  CHECK(lieTypePreset(LieType::TwistedAOdd, Rational(2)) == std::pair{Rational(2), Rational(4)});
  CHECK(lieTypePreset(LieType::TwistedAEven, Rational(2)) ==
        std::pair{Rational(8), Rational(4)});
  CHECK_THROWS_AS(lieTypePreset(LieType::B, Rational(0)), DomainError);
  CHECK_THROWS_AS(lieTypePreset(LieType::B, Rational(-2)), DomainError);
}

TEST_CASE("dual realisation of phi") {
  for (int n = 1; n <= 3; ++n)
    for (int f = 0; f <= n; ++f) CHECK(phiViaSymmetrization(f, n) == phiAsDual(f, n));
}
