#include <doctest.h>

#include "heckespheres/vmodule.hpp"

using namespace hsp;

namespace {

VElt u(int n, const char* signs) {
  return VElt::basisVector(n, VBasis::U, SignVector::parse(signs).bits());
}

}  // namespace

TEST_CASE("generator action cases") {
  const int n = 2;
  const Scalar q = Scalar::q(), p = Scalar::p();
  // i = n, x_n = 1: u(x) -> u(x x^n)
  CHECK(equalAsVectors(actGen(2, u(n, "++")), u(n, "+-")));
  // i = n, x_n = -1: (p-1) u(x) + p u(x x^n)
  CHECK(equalAsVectors(actGen(2, u(n, "+-")),
                       u(n, "+-").scaled(p - Scalar(1)) + u(n, "++").scaled(p)));
  // i < n, equal signs: q u(x)
  CHECK(equalAsVectors(actGen(1, u(n, "++")), u(n, "++").scaled(q)));
  CHECK(equalAsVectors(actGen(1, u(n, "--")), u(n, "--").scaled(q)));
  // i < n, x_i = 1, x_{i+1} = -1: swap
  CHECK(equalAsVectors(actGen(1, u(n, "+-")), u(n, "-+")));
  // i < n, x_i = -1, x_{i+1} = 1: (q-1) u(x) + q u(x^{s_i})
  CHECK(equalAsVectors(actGen(1, u(n, "-+")),
                       u(n, "-+").scaled(q - Scalar(1)) + u(n, "+-").scaled(q)));
}

TEST_CASE("uhat action matches the R-matrix normalisation") {
  const int n = 2;
  const VElt pm = VElt::basisVector(n, VBasis::UHat, SignVector::parse("+-").bits());
  const VElt mp = VElt::basisVector(n, VBasis::UHat, SignVector::parse("-+").bits());
  CHECK(equalAsVectors(actGen(1, pm), mp.scaled(Scalar::qHalf())));
  CHECK(equalAsVectors(actGen(1, mp),
                       mp.scaled(Scalar::q() - Scalar(1)) + pm.scaled(Scalar::qHalf())));
}

TEST_CASE("pi map and Hecke action") {
  const int n = 3;
  // pi(T_{u_x}) = u(x) and rho(T_{u_x}) u(1,...,1) = u(x)
  for (std::uint32_t x = 0; x < 8u; ++x) {
    const HeckeElt tux = HeckeElt::basis(cosetRep(SignVector(n, x)).u);
    CHECK(equalAsVectors(actHecke(tux, VElt::unit(n)),
                         VElt::basisVector(n, VBasis::U, x)));
  }
  CHECK(equalAsVectors(actHecke(HeckeElt::identity(n), u(n, "-+-")), u(n, "-+-")));
  // pi(T_sigma) = q^{l(sigma)} u(1,...,1)
  const SignedPerm sigma({2, 3, 1});
  CHECK(equalAsVectors(piMap(HeckeElt::basis(sigma)),
                       VElt::unit(n).scaled(Scalar::qPow2(2 * length(sigma)))));
}

TEST_CASE("actHecke is multiplicative") {
  const int n = 3;
  const HeckeElt a =
      HeckeElt::basis(SignedPerm({-2, 3, 1})) +
      HeckeElt::basis(SignedPerm::generator(3, n), Scalar::qHalf());
  const HeckeElt b = HeckeElt::basis(SignedPerm({3, -1, -2}), Scalar::p() - Scalar(1)) +
                     HeckeElt::identity(n);
  for (std::uint32_t x = 0; x < 8u; ++x) {
    const VElt v = VElt::basisVector(n, VBasis::U, x);
    CHECK(equalAsVectors(actHecke(multiply(a, b), v), actHecke(a, actHecke(b, v))));
  }
}

TEST_CASE("braid relation as maps, n=2") {
  const int n = 2;
  for (std::uint32_t x = 0; x < 4u; ++x) {
    const VElt v = VElt::basisVector(n, VBasis::U, x);
    const VElt lhs = actGen(2, actGen(1, actGen(2, actGen(1, v))));
    const VElt rhs = actGen(1, actGen(2, actGen(1, actGen(2, v))));
    CHECK(equalAsVectors(lhs, rhs));
  }
}

TEST_CASE("product structure") {
  // algebra unit
  CHECK(equalAsVectors(product(VElt::unit(2), u(2, "-+")), u(2, "-+")));
  // n=1: u(-1)^2 = (p-1) u(-1) + p u(1)
  CHECK(equalAsVectors(product(u(1, "-"), u(1, "-")),
                       u(1, "-").scaled(Scalar::p() - Scalar(1)) +
                           u(1, "+").scaled(Scalar::p())));
  // u(x^j) u(x^k) = u(x^j x^k), j != k
  CHECK(equalAsVectors(product(u(3, "-++"), u(3, "++-")), u(3, "-+-")));
  // full square relation at n=2:
  // u(x^1)^2 = (q-1) u(x^1)u(x^2) + (p-1) u(x^1) + p q u(1)
  CHECK(equalAsVectors(product(u(2, "-+"), u(2, "-+")),
                       u(2, "--").scaled(Scalar::q() - Scalar(1)) +
                           u(2, "-+").scaled(Scalar::p() - Scalar(1)) +
                           u(2, "++").scaled(Scalar::p() * Scalar::q())));
  // cross-check against the Hecke route
  for (std::uint32_t x = 0; x < 8u; ++x)
    for (std::uint32_t y = 0; y < 8u; ++y)
      CHECK(equalAsVectors(product(VElt::basisVector(3, VBasis::U, x),
                                   VElt::basisVector(3, VBasis::U, y)),
                           productViaHecke(x, y, 3)));
}

TEST_CASE("bilinear form") {
  CHECK(tau(VElt::unit(3)).isOne());
  CHECK(tau(u(3, "-++")).isZero());
  for (std::uint32_t x = 0; x < 8u; ++x)
    for (std::uint32_t y = 0; y < 8u; ++y) {
      const Scalar b = bilinearB(VElt::basisVector(3, VBasis::U, x),
                                 VElt::basisVector(3, VBasis::U, y));
      CHECK(b == (x == y ? iotaU(3, x) : Scalar()));
      const Scalar bh = bilinearB(VElt::basisVector(3, VBasis::UHat, x),
                                  VElt::basisVector(3, VBasis::UHat, y));
      CHECK(bh == (x == y ? Scalar(1) : Scalar()));
    }
}

TEST_CASE("symmetrisation") {
  CHECK(equalAsVectors(symmetrize(VElt::unit(3)), VElt::unit(3)));
  // representatives of equal weight symmetrise to the same element
  const VElt w1a = symmetrize(VElt::basisVector(3, VBasis::V, 1));
  const VElt w1b = symmetrize(VElt::basisVector(3, VBasis::V, 2));
  const VElt w1c = symmetrize(VElt::basisVector(3, VBasis::V, 4));
  CHECK(equalAsVectors(w1a, w1b));
  CHECK(equalAsVectors(w1a, w1c));
  CHECK(equalAsVectors(symmetrize(w1a), w1a));
  // F_n-invariance with index eigenvalue
  for (int i = 1; i < 3; ++i)
    CHECK(equalAsVectors(actGen(i, w1a), w1a.scaled(Scalar::q())));
}

TEST_CASE("basis conversions are exact bijections") {
  const VElt v = u(3, "-+-");
  CHECK(equalAsVectors(v.inBasis(VBasis::UHat).inBasis(VBasis::V).inBasis(VBasis::U), v));
  // uhat(x) = iota^{-1/2} u(x)
  const VElt hat = VElt::basisVector(3, VBasis::UHat, 5);
  const VElt scaled = VElt::basisVector(3, VBasis::U, 5).scaled(iotaUSqrt(3, 5).inverse());
  CHECK(equalAsVectors(hat, scaled));
}
