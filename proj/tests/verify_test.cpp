#include <doctest.h>

#include "heckespheres/verify.hpp"

using namespace hsp;

TEST_CASE("suite names round-trip") {
  for (Suite s : {Suite::All, Suite::Coxeter, Suite::Hecke, Suite::Module, Suite::Characters,
                  Suite::Jimbo, Suite::Spherical, Suite::Krawtchouk})
    CHECK(suiteFromName(suiteName(s)) == s);
  CHECK(!suiteFromName("bogus").has_value());
}

TEST_CASE("full suite passes at rank 2") {
  const VerifyReport report = runSuite(Suite::All, 2);
  for (const CheckResult& check : report.checks) {
    INFO(check.id, " ", check.witness);
    CHECK(check.pass);
  }
  CHECK(report.pass());
  CHECK(!report.toJson().empty());
}

TEST_CASE("table exports") {
  TableOptions plain;
  const std::string csv = sphericalTable(1, "csv", plain);
  CHECK(csv == "f\\d,0,1\n0,1,1\n1,1,(-1)/(p)\n");
  const std::string json = characterTable(1, "json", plain);
  CHECK(json.find("\"p\"") != std::string::npos);
  CHECK(json.find("\"-1\"") != std::string::npos);

  // deterministic output
  CHECK(sphericalTable(2, "json", plain) == sphericalTable(2, "json", plain));

  // preset specialisation stays rational
  TableOptions preset;
  preset.pqValues = {Rational(3), Rational(3)};
  const std::string specialised = sphericalTable(2, "csv", preset);
  CHECK(specialised.find('p') == std::string::npos);

  // a genuine pole: phi_1(w_1) = -1/p at p^(1/2) = 0
  TableOptions atZero;
  atZero.halfValues = {Rational(0), Rational(1)};
  CHECK_THROWS_AS(sphericalTable(1, "csv", atZero), DenominatorVanishes);
}

TEST_CASE("module element serialisation") {
  const VElt v = VElt::basisVector(1, VBasis::U, 1).scaled(Scalar::q());
  CHECK(veltJson(v) == R"({"basis":"u","coords":["0","q"],"n":1})");
}
