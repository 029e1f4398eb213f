#include <doctest.h>

#include <set>
#include "heckespheres/hecke.hpp"
#include "heckespheres/qseries.hpp"

using namespace hsp;

namespace {

HeckeElt gen(int i, int n) { return HeckeElt::basis(SignedPerm::generator(i, n)); }

}  // namespace

TEST_CASE("generator multiplication") {
  const int n = 2;
  // ascent: T_1 T_e = T_{s_1}
  CHECK(genMulLeft(1, HeckeElt::identity(n)) == gen(1, n));
  // T_1 T_{s_1} = (q-1) T_{s_1} + q T_e
  CHECK(genMulLeft(1, gen(1, n)) ==
        gen(1, n).scaled(Scalar::q() - Scalar(1)) +
            HeckeElt::identity(n).scaled(Scalar::q()));
  // T_n T_{s_n} = (p-1) T_{s_n} + p T_e
  CHECK(genMulLeft(2, gen(2, n)) ==
        gen(2, n).scaled(Scalar::p() - Scalar(1)) +
            HeckeElt::identity(n).scaled(Scalar::p()));
  // right multiplication agrees on involutions
  CHECK(genMulRight(gen(1, n), 1) == genMulLeft(1, gen(1, n)));
}

TEST_CASE("multiplication basics") {
  const int n = 3;
  const HeckeElt a = gen(1, n) + gen(3, n).scaled(Scalar::p());
  CHECK(multiply(HeckeElt::identity(n), a) == a);
  CHECK(multiply(a, HeckeElt::identity(n)) == a);

  // T_{x^j} T_{x^k} = T_{x^j x^k} for j != k
  const SignedPerm x1 = SignedPerm::fromSignVector(SignVector::single(n, 1));
  const SignedPerm x3 = SignedPerm::fromSignVector(SignVector::single(n, 3));
  CHECK(multiply(HeckeElt::basis(x1), HeckeElt::basis(x3)) == HeckeElt::basis(x1 * x3));
  CHECK(multiply(HeckeElt::basis(x3), HeckeElt::basis(x1)) == HeckeElt::basis(x1 * x3));

  CHECK_THROWS_AS(multiply(HeckeElt::identity(2), HeckeElt::identity(3)), RankMismatch);
}

TEST_CASE("one dimensional representations") {
  const int n = 3;
  CHECK(indexRep(HeckeElt::identity(n)).isOne());
  CHECK(indexRep(gen(1, n)) == Scalar::q());
  CHECK(indexRep(gen(n, n)) == Scalar::p());
  CHECK(indexRepPrime(gen(n, n)) == Scalar(-1));
  CHECK(signRep(gen(1, n)) == Scalar(-1));
  // iota(T_sigma) = q^{l(sigma)}
  const SignedPerm sigma({2, 3, 1});
  CHECK(indexRep(HeckeElt::basis(sigma)) == Scalar::qPow2(2 * length(sigma)));
  // closed form on coset representatives
  for (std::uint32_t x = 0; x < 8; ++x)
    CHECK(indexRep(HeckeElt::basis(cosetRep(SignVector(3, x)).u)) ==
          indexRepCosetRep(SignVector(3, x)));
}

TEST_CASE("star involutions") {
  const int n = 2;
  const HeckeElt a = gen(1, n).scaled(Scalar::qHalf()) + gen(2, n);
  CHECK(star1(star1(a)) == a);
  CHECK(star2(star2(a)) == a);
  CHECK(star1(gen(1, n)) == gen(1, n));
  for (int i = 1; i <= n; ++i)
    CHECK(multiply(star2(gen(i, n)), gen(i, n)) == HeckeElt::identity(n));
  // star2 inverts the half-power coefficients
  CHECK(star2(HeckeElt::identity(n).scaled(Scalar::qHalf())) ==
        HeckeElt::identity(n).scaled(Scalar::qHalf().inverse()));
}

TEST_CASE("symmetrizer enumeration") {
  CHECK(symmetrizerWords(1).size() == 1);
  CHECK(symmetrizerWords(3).size() == 6);
  CHECK(symmetrizerWords(5).size() == 120);
  // distinct group elements, and sum of q^{l} = P_A
  for (int n = 1; n <= 5; ++n) {
    std::set<SignedPerm> seen;
    Scalar sum;
    for (const auto& word : symmetrizerWords(n)) {
      SignedPerm sigma = SignedPerm::identity(n);
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        sigma = SignedPerm::generator(*it, n) * sigma;
      CHECK(static_cast<int>(word.size()) == length(sigma));
      seen.insert(sigma);
      sum += Scalar::qPow2(2 * static_cast<int>(word.size()));
    }
    CHECK(seen.size() == symmetrizerWords(n).size());
    CHECK(sum == poincareA(n));
  }
  CHECK_THROWS_AS(symmetrizerWords(kSymmetrizerCap + 1), CapExceeded);
}

TEST_CASE("serialized form is sorted by length then word") {
  HeckeElt a(2);
  a.add(SignedPerm({-1, -2}), Scalar(1));
  a.add(SignedPerm::identity(2), Scalar::q());
  a.add(SignedPerm::generator(2, 2), Scalar::p());
  const auto rows = a.serialized();
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].first == "[1, 2]");
  CHECK(rows[1].first == "[1, -2]");
  CHECK(rows[2].first == "[-1, -2]");
  CHECK(rows[1].second == "p");
}
