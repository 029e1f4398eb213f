#include <doctest.h>

#include "heckespheres/qgroup.hpp"

using namespace hsp;

TEST_CASE("fundamental representation") {
  const auto K = fundamentalRep(UqGen::K);
  const auto E = fundamentalRep(UqGen::E);
  const auto F = fundamentalRep(UqGen::F);
  CHECK(K[0][0] == Scalar::qHalf());
  CHECK(K[1][1] == Scalar::qHalf().inverse());
  CHECK(E[0][1].isOne());  // E e_1 = e_{-1}
  CHECK(F[1][0].isOne());  // F e_{-1} = e_1
  // K E K^{-1} = q E on the nonzero entry
  CHECK(K[0][0] * E[0][1] * fundamentalRep(UqGen::KInv)[1][1] == Scalar::q());
}

TEST_CASE("tensor action") {
  const int n = 3;
  const std::uint32_t top = (1u << n) - 1;  // uhat(-1,...,-1)
  const VElt topVec = VElt::basisVector(n, VBasis::UHat, top);
  CHECK(equalAsVectors(tAction(UqGen::K, n).apply(topVec),
                       topVec.scaled(Scalar::qPow2(n))));
  CHECK(tAction(UqGen::E, n).apply(topVec).isZero());
  // n=1: t(E) uhat(+1) = uhat(-1)
  CHECK(equalAsVectors(tAction(UqGen::E, 1).apply(VElt::basisVector(1, VBasis::UHat, 0)),
                       VElt::basisVector(1, VBasis::UHat, 1)));
  // defining relations as matrices
  const ActionMatrix K = tAction(UqGen::K, n), Ki = tAction(UqGen::KInv, n),
                     E = tAction(UqGen::E, n), F = tAction(UqGen::F, n);
  CHECK(K * Ki == ActionMatrix::identityMatrix(n));
  CHECK(K * E == (E * K).scaled(Scalar::q()));
  CHECK(K * F == (F * K).scaled(Scalar::q().inverse()));
  const Scalar denom = Scalar::qHalf() - Scalar::qHalf().inverse();
  CHECK(E * F - F * E == (K - Ki).scaled(denom.inverse()));
}

TEST_CASE("star structure") {
  CHECK(starGen(UqGen::K).letters == std::vector<UqGen>{UqGen::K});
  CHECK(starGen(UqGen::E).coeff == Scalar::qHalf().inverse());
  CHECK(starGen(UqGen::E).letters == std::vector<UqGen>{UqGen::F, UqGen::K});
  // adjointness in the uhat basis
  const int n = 2;
  const ActionMatrix E = tAction(UqGen::E, n);
  const ActionMatrix EStar = tActionWord(starGen(UqGen::E), n);
  for (std::uint32_t x = 0; x < 4u; ++x)
    for (std::uint32_t y = 0; y < 4u; ++y) {
      const VElt vx = VElt::basisVector(n, VBasis::UHat, x);
      const VElt vy = VElt::basisVector(n, VBasis::UHat, y);
      CHECK(bilinearB(E.apply(vx), vy) == bilinearB(vx, EStar.apply(vy)));
    }
}

TEST_CASE("Clebsch-Gordan multiplicities") {
  const auto m2 = clebschGordanMultiplicities(2);
  CHECK(m2.at(2) == 1);
  CHECK(m2.at(0) == 1);
  const auto m3 = clebschGordanMultiplicities(3);
  CHECK(m3.at(3) == 1);
  CHECK(m3.at(1) == 2);
  const auto m4 = clebschGordanMultiplicities(4);
  CHECK(m4.at(4) == 1);
  CHECK(m4.at(2) == 3);
  CHECK(m4.at(0) == 2);
}

TEST_CASE("commutant report") {
  const CommutantReport r2 = checkCommutant(2);
  CHECK(r2.commutatorsVanish);
  CHECK(r2.uCentralizerDim == 2);
  CHECK(r2.heckeCentralizerDim == 10);
  CHECK(r2.heckeSpanDim == 2);
  CHECK(r2.specializedUCentralizerDim == 2);
  CHECK(r2.pass());
  const CommutantReport r3 = checkCommutant(3);
  CHECK(r3.uCentralizerDim == 5);
  CHECK(r3.heckeCentralizerDim == 20);
  CHECK(r3.heckeSpanDim == 5);
  CHECK(r3.pass());
}

TEST_CASE("invariant subspace") {
  for (int n = 1; n <= 4; ++n) {
    const auto basis = invariantSubspace(n);
    CHECK(static_cast<int>(basis.size()) == n + 1);
    for (const VElt& v : basis)
      for (int i = 1; i < n; ++i)
        CHECK(equalAsVectors(actGen(i, v), v.scaled(Scalar::q())));
  }
  // n = 1: the whole module
  CHECK(invariantSubspace(1).size() == 2);
}
