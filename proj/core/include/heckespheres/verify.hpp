#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heckespheres/spherical.hpp"

namespace hsp {

enum class Suite { All, Coxeter, Hecke, Module, Characters, Jimbo, Spherical, Krawtchouk };

std::optional<Suite> suiteFromName(const std::string& name);
std::string suiteName(Suite suite);

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string witness;  // failing instance, empty on success
};

struct VerifyReport {
  std::string suite;
  int n = 0;
  std::vector<CheckResult> checks;
  double elapsedMs = 0.0;

  bool pass() const;
  std::string toJson() const;
};

// Runs the named suite with ranks up to n; factorially-bounded checks cap
// themselves lower internally and say so in the check id.
VerifyReport runSuite(Suite suite, int n);

// Table exports (format "json" or "csv").  Entries are canonical scalar
// strings, or exact rationals under a specialisation.
struct TableOptions {
  // values for p^(1/2), q^(1/2)
  std::optional<std::pair<Rational, Rational>> halfValues;
  // values for p, q themselves (preset path; requires whole exponents)
  std::optional<std::pair<Rational, Rational>> pqValues;
};

std::string characterTable(int n, const std::string& format, const TableOptions& options);
std::string sphericalTable(int n, const std::string& format, const TableOptions& options);

// Module elements serialise as 2^n canonical scalar strings in bitmask
// order together with their basis tag.
std::string veltJson(const VElt& v);

}  // namespace hsp
