#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "heckespheres/qseries.hpp"
#include "heckespheres/verify.hpp"

namespace {

constexpr int kDefaultMaxRank = 8;
constexpr int kHardMaxRank = 10;

int maxRank() {
  const char* env = std::getenv("HECKE_SPHERES_MAX_N");
  if (env == nullptr) return kDefaultMaxRank;
  try {
    const int value = std::stoi(env);
    return std::min(std::max(value, 1), kHardMaxRank);
  } catch (...) {
    return kDefaultMaxRank;
  }
}

void requireRank(int n) {
  const int cap = maxRank();
  if (n < 1 || n > cap)
    throw hsp::DomainError("n must satisfy 1 <= n <= " + std::to_string(cap) +
                           " (HECKE_SPHERES_MAX_N overrides, hard limit " +
                           std::to_string(kHardMaxRank) + ")");
}

hsp::LieType presetFromName(const std::string& name) {
  if (name == "B") return hsp::LieType::B;
  if (name == "C") return hsp::LieType::C;
  if (name == "2D") return hsp::LieType::TwistedD;
  if (name == "2A-odd") return hsp::LieType::TwistedAOdd;
  if (name == "2A-even") return hsp::LieType::TwistedAEven;
  throw hsp::DomainError("unknown preset '" + name + "' (B, C, 2D, 2A-odd, 2A-even)");
}

struct SpecializationFlags {
  std::string pHalf, qHalf, preset, q0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p-half", pHalf, "exact rational value for p^(1/2)");
    cmd->add_option("--q-half", qHalf, "exact rational value for q^(1/2)");
    cmd->add_option("--preset", preset, "Lie type preset: B, C, 2D, 2A-odd, 2A-even");
    cmd->add_option("--q0", q0, "prime power for --preset");
  }

  hsp::TableOptions resolve() const {
    hsp::TableOptions options;
    const bool halves = !pHalf.empty() || !qHalf.empty();
    const bool presets = !preset.empty() || !q0.empty();
    if (halves && presets)
      throw hsp::DomainError("--p-half/--q-half and --preset/--q0 are mutually exclusive");
    if (halves) {
      if (pHalf.empty() || qHalf.empty())
        throw hsp::DomainError("--p-half and --q-half must be given together");
      options.halfValues = {hsp::ratFromString(pHalf), hsp::ratFromString(qHalf)};
    }
    if (presets) {
      if (preset.empty() || q0.empty())
        throw hsp::DomainError("--preset and --q0 must be given together");
      options.pqValues = hsp::lieTypePreset(presetFromName(preset), hsp::ratFromString(q0));
    }
    return options;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hecke algebra of type B, its spherical functions and q-Krawtchouk tables"};
  app.require_subcommand(1);

  // verify
  auto* verifyCmd = app.add_subcommand("verify", "run a symbolic verification suite");
  int verifyN = 0;
  std::string suiteText = "all";
  verifyCmd->add_option("--n", verifyN, "rank of the Hecke algebra")->required();
  verifyCmd->add_option("--suite", suiteText,
                        "all, coxeter, hecke, module, characters, jimbo, spherical, krawtchouk");

  // table
  auto* tableCmd = app.add_subcommand("table", "emit a character or spherical table");
  std::string kind, format = "json";
  int tableN = 0;
  SpecializationFlags tableSpec;
  tableCmd->add_option("--kind", kind, "characters or spherical")->required();
  tableCmd->add_option("--n", tableN, "rank")->required();
  tableCmd->add_option("--format", format, "json or csv");
  tableSpec.attach(tableCmd);

  // krawtchouk
  auto* krawCmd = app.add_subcommand("krawtchouk", "evaluate K_f(q^{-d}; a, n; q)");
  int kf = 0, kd = 0, kn = 0;
  std::string aSpec;
  SpecializationFlags krawSpec;
  krawCmd->add_option("--f", kf, "degree")->required();
  krawCmd->add_option("--d", kd, "argument exponent")->required();
  krawCmd->add_option("--n", kn, "lattice size")->required();
  krawCmd->add_option("--a", aSpec, "parameter a as a scalar expression (default: p)");
  krawSpec.attach(krawCmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (verifyCmd->parsed()) {
      requireRank(verifyN);
      const auto suite = hsp::suiteFromName(suiteText);
      if (!suite) throw hsp::DomainError("unknown suite '" + suiteText + "'");
      const hsp::VerifyReport report = hsp::runSuite(*suite, verifyN);
      std::cout << report.toJson() << "\n";
      return report.pass() ? 0 : 1;
    }

    if (tableCmd->parsed()) {
      requireRank(tableN);
      if (format != "json" && format != "csv")
        throw hsp::DomainError("unknown format '" + format + "'");
      const hsp::TableOptions options = tableSpec.resolve();
      if (kind == "characters") {
        std::cout << hsp::characterTable(tableN, format, options);
      } else if (kind == "spherical") {
        std::cout << hsp::sphericalTable(tableN, format, options);
      } else {
        throw hsp::DomainError("unknown table kind '" + kind + "'");
      }
      if (format == "json") std::cout << "\n";
      return 0;
    }

    if (krawCmd->parsed()) {
      requireRank(kn);
      if (kf < 0 || kf > kn || kd < 0 || kd > kn)
        throw hsp::DomainError("indices must satisfy 0 <= f, d <= n");
      const hsp::TableOptions options = krawSpec.resolve();
      hsp::Scalar a = aSpec.empty() ? hsp::Scalar::p() : hsp::Scalar::parse(aSpec);
      if (options.pqValues && !aSpec.empty())
        throw hsp::DomainError("--a and --preset are mutually exclusive");
      const hsp::Scalar value = hsp::qKrawtchouk(hsp::QKrawParams{kf, kd, a, kn});
      if (options.pqValues) {
        std::cout << hsp::ratToString(
                         value.specializePQ(options.pqValues->first, options.pqValues->second))
                  << "\n";
      } else if (options.halfValues) {
        std::cout << hsp::ratToString(
                         value.specialize(options.halfValues->first, options.halfValues->second))
                  << "\n";
      } else {
        std::cout << value.str() << "\n";
      }
      return 0;
    }
  } catch (const hsp::DenominatorVanishes& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const hsp::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const hsp::CapExceeded& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const hsp::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
