// End-to-end exercises of the command line interface: spawns the installed
// binary and checks the exit-code contract and byte-exact outputs.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::string gCliPath;
int gFailures = 0;

struct RunResult {
  int exitCode = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + gCliPath + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    std::cerr << "failed to spawn: " << cmd << "\n";
    result.exitCode = -1;
    return result;
  }
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void expect(bool condition, const std::string& what) {
  if (condition) {
    std::cout << "[ok] " << what << "\n";
  } else {
    std::cout << "[FAILED] " << what << "\n";
    ++gFailures;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_test <path-to-hecke-spheres>\n";
    return 2;
  }
  gCliPath = argv[1];

  {
    const RunResult r = run("krawtchouk --f 1 --d 1 --n 1");
    expect(r.exitCode == 0 && r.out == "(-1)/(p)\n", "krawtchouk 1 1 1 prints (-1)/(p)");
  }
  {
    const RunResult r = run("krawtchouk --f 0 --d 5 --n 7");
    expect(r.exitCode == 0 && r.out == "1\n", "krawtchouk f=0 prints 1");
  }
  {
    const RunResult r = run("krawtchouk --f 1 --d 0 --n 3");
    expect(r.exitCode == 0 && r.out == "1\n", "krawtchouk d=0 prints 1");
  }
  {
    const RunResult r = run("krawtchouk --f 2 --d 1 --n 1");
    expect(r.exitCode == 2, "index violation exits 2");
  }
  {
    const RunResult r = run("krawtchouk --f 1 --d 1 --n 2 --a 1/2");
    expect(r.exitCode == 0 && !r.out.empty(), "rational parameter accepted");
  }
  {
    const RunResult r = run("krawtchouk --f 1 --d 1 --n 2 --p-half 1 --q-half 2");
    expect(r.exitCode == 0, "half-value specialisation works");
  }
  {
    const RunResult a = run("verify --n 2 --suite all");
    expect(a.exitCode == 0, "verify --n 2 --suite all exits 0");
    const RunResult b = run("verify --n 2 --suite all");
    // the elapsed-milliseconds field is a measurement; everything else is
    // required to be byte-identical
    auto stripTiming = [](std::string s) {
      const auto at = s.find("\"elapsedMs\"");
      if (at != std::string::npos) s.erase(at, s.find('\n', at) - at);
      return s;
    };
    expect(stripTiming(a.out) == stripTiming(b.out),
           "verify output is byte-identical across runs (modulo timing)");
  }
  {
    const RunResult r = run("verify --n 0 --suite all");
    expect(r.exitCode == 2, "verify --n 0 exits 2");
  }
  {
    const RunResult r = run("verify --n 3 --suite nonsense");
    expect(r.exitCode == 2, "unknown suite exits 2");
  }
  {
    const RunResult r = run("verify --n 3 --suite krawtchouk");
    expect(r.exitCode == 0 && r.out.find("qkraw.triple-agreement") != std::string::npos,
           "krawtchouk suite includes the triple-agreement check");
  }
  {
    const RunResult r = run("verify --n 3 --suite all", "HECKE_SPHERES_MAX_N=2");
    expect(r.exitCode == 2, "HECKE_SPHERES_MAX_N lowers the cap");
  }
  {
    const RunResult r = run("table --kind spherical --n 1 --format csv");
    expect(r.exitCode == 0 && r.out == "f\\d,0,1\n0,1,1\n1,1,(-1)/(p)\n",
           "spherical table n=1 matches the worked example");
  }
  {
    const RunResult r = run("table --kind characters --n 1 --format csv");
    expect(r.exitCode == 0 && r.out == "y\\x,+,-\n+,1,p\n-,1,-1\n",
           "character table n=1 has entries 1, p, 1, -1");
  }
  {
    const RunResult r = run("table --kind spherical --n 2 --preset B --q0 3 --format csv");
    expect(r.exitCode == 0 && r.out.find('p') == std::string::npos &&
               r.out.find("1/6") != std::string::npos,
           "preset table is fully rational");
  }
  {
    const RunResult a = run("table --kind characters --n 2 --format json");
    const RunResult b = run("table --kind characters --n 2 --format json");
    expect(a.exitCode == 0 && a.out == b.out, "table output is deterministic");
  }
  {
    const RunResult r = run("table --kind spherical --n 1 --p-half 0 --q-half 1");
    expect(r.exitCode == 1, "vanishing denominator exits 1");
  }
  {
    const RunResult r = run("table --kind bogus --n 1");
    expect(r.exitCode == 2, "unknown table kind exits 2");
  }
  {
    const RunResult r = run("table --kind spherical --n 2 --preset B --q0 3 --p-half 1");
    expect(r.exitCode == 2, "preset and half-values are mutually exclusive");
  }

  if (gFailures != 0) {
    std::cout << gFailures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
