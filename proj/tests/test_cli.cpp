// End-to-end tests of the kkcex binary: human output, JSON stability, and
// the exit-code contract (0 pass, 1 failure, 2 usage, 3 cap/budget).
//
// The binary path arrives as --kkcex=PATH ahead of the doctest arguments.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "kk/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string g_kkcex;

struct RunResult {
  int code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
  const std::string cmd = g_kkcex + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) {
    res.output.append(buf, got);
  }
  const int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  REQUIRE(is.good());
  std::string bytes((std::istreambuf_iterator<char>(is)),
                    std::istreambuf_iterator<char>());
  return bytes;
}

}  // namespace

TEST_CASE("range: the published lines, verbatim") {
  const RunResult r13 = run("range 13");
  CHECK(r13.code == 0);
  CHECK(r13.output.find("k = 13   d = 1325   q ~= 1561.91") != std::string::npos);
  CHECK(r13.output.find("Counterexample for 1325 <= d <= 1560") != std::string::npos);

  const RunResult r16 = run("range 16");
  CHECK(r16.code == 0);
  CHECK(r16.output.find("Counterexample for 2015 <= d <= 7501") != std::string::npos);

  const RunResult r11 = run("range 11");
  CHECK(r11.code == 0);
  CHECK(r11.output.find("Point set not verified as counterexample") != std::string::npos);

  // k=12 is not a prime power, so the premiss warning must show.
  const RunResult r12 = run("range 12");
  CHECK(r12.code == 0);
  CHECK(r12.output.find("warning:") != std::string::npos);
  CHECK(r12.output.find("not a prime power") != std::string::npos);
}

TEST_CASE("q: exact fraction next to the rounded decimal") {
  const RunResult q13 = run("q 13");
  CHECK(q13.code == 0);
  CHECK(q13.output.find("q = 898101/575 ~= 1561.91") != std::string::npos);
  CHECK(q13.output.find("formulas agree") != std::string::npos);
  CHECK(run("q 13 --digits 4").output.find("1561.9148") != std::string::npos);
}

TEST_CASE("params: derived values and the prime-power note") {
  const RunResult p = run("params 13");
  CHECK(p.code == 0);
  CHECK(p.output.find("m = 4k = 52") != std::string::npos);
  CHECK(p.output.find("d = |W| - 1 = 1325") != std::string::npos);
  CHECK(p.output.find("k prime power: yes (13^1)") != std::string::npos);

  const kk::Json j = kk::Json::parse(run("params 13 --json").output);
  CHECK(j["type"] == "params");
  CHECK(j["m"] == "52");
  CHECK(j["prime-power"]["base"] == "13");
}

TEST_CASE("plan and chain") {
  CHECK(run("plan 1325").output.find("k = 13") != std::string::npos);
  CHECK(run("plan 8000").output.find("k = 17") != std::string::npos);
  CHECK(run("plan 1000").output.find("no prime power certifies") != std::string::npos);
  CHECK(run("plan 1000").code == 0);
  CHECK(run("plan 0").code == 2);

  const RunResult chain = run("chain");
  CHECK(chain.code == 0);
  CHECK(chain.output.find("verified up to k=4096") != std::string::npos);
  CHECK(chain.output.find("(q-exact) ok") != std::string::npos);
  CHECK(chain.output.find("(lower-bound) ok") != std::string::npos);
  CHECK(chain.output.find("GAP") == std::string::npos);

  CHECK(run("chain --max-k 48").code == 2);
  const RunResult gap = run("chain --start-dim 2014");
  CHECK(gap.code == 1);
  CHECK(gap.output.find("FAIL") != std::string::npos);
}

TEST_CASE("spectrum: closed form, with optional brute-force cross-check") {
  const RunResult s2 = run("spectrum 2");
  CHECK(s2.code == 0);
  CHECK(s2.output.find("point pairs = 595") != std::string::npos);
  CHECK(s2.output.find("(diameter)") != std::string::npos);

  const RunResult brute = run("spectrum 2 --brute");
  CHECK(brute.code == 0);
  CHECK(brute.output.find("brute-force census: match") != std::string::npos);

  CHECK(run("spectrum 4 --brute").code == 3);  // default brute cap is k <= 3
}

TEST_CASE("verify: reports and their exit codes") {
  const RunResult ident = run("verify identities 2");
  CHECK(ident.code == 0);
  CHECK(ident.output.find("suite identities  k = 2") != std::string::npos);
  CHECK(ident.output.find("ordered-pairs = 4900") != std::string::npos);
  CHECK(ident.output.find("pass (") != std::string::npos);

  const RunResult diam = run("verify diameter 2");
  CHECK(diam.code == 0);
  CHECK(diam.output.find("witness = A={1,2,3,4} B={1,2,5,6}") != std::string::npos);

  CHECK(run("verify rank 2").code == 0);
  CHECK(run("verify cover 2").code == 0);

  const RunResult fw = run("verify fw 2");
  CHECK(fw.code == 0);
  CHECK(fw.output.find("family-size = 10") != std::string::npos);

  // Resource refusals are exit 3, never silent degradation.
  const RunResult capped = run("verify rank 5");
  CHECK(capped.code == 3);
  CHECK(capped.output.find("cap exceeded") != std::string::npos);
  CHECK(run("verify identities 4").code == 3);
  CHECK(run("verify fw 2 --budget 10").code == 3);

  // Unknown suite is invalid usage.
  CHECK(run("verify bogus 2").code == 2);
}

TEST_CASE("export and import round trip; corruption is exit 1") {
  const std::string path = "kk_cli_pointset_k1.txt";
  const RunResult exp = run("export 1 --out " + path);
  CHECK(exp.code == 0);
  CHECK(exp.output.find("wrote 3 points") != std::string::npos);
  CHECK(slurp(path) ==
        "kk-pointset v1 k=1 m=4 w=6 n=3\n"
        "1e\n"
        "2d\n"
        "33\n");

  const RunResult imp = run("import " + path);
  CHECK(imp.code == 0);
  CHECK(imp.output.find("valid kk-pointset v1, k=1, 3 points") != std::string::npos);

  // Flip one point's bit so the popcount is wrong.
  std::string bytes = slurp(path);
  bytes.replace(bytes.find("1e\n"), 3, "1f\n");
  std::ofstream(path) << bytes;
  const RunResult bad = run("import " + path);
  CHECK(bad.code == 1);
  CHECK(bad.output.find("popcount") != std::string::npos);
  std::remove(path.c_str());

  CHECK(run("import kk_no_such_file.txt").code == 1);
  CHECK(run("export 5 --out kk_never_written.txt").code == 3);  // above cap
  CHECK(run("export 1").code == 2);                             // --out required
}

TEST_CASE("JSON output is byte-stable and clock-free") {
  const std::string a = run("q 13 --json").output;
  const std::string b = run("q 13 --json").output;
  const std::string c = run("--json q 13").output;  // flag position is free
  CHECK(a == b);
  CHECK(a == c);
  CHECK(kk::Json::parse(a)["q"] == "898101/575");

  const RunResult ident = run("verify identities 2 --json");
  CHECK(ident.code == 0);
  CHECK(ident.output.find("elapsed") == std::string::npos);
  const kk::Json j = kk::Json::parse(ident.output);
  CHECK(j["pass"] == true);
  CHECK(j["counters"]["ordered-pairs"] == "4900");

  CHECK(run("verify identities 2 --json").output == ident.output);

  const kk::Json range = kk::Json::parse(run("range 11 --json").output);
  CHECK(range["is-counterexample"] == false);
  CHECK(range["d-low"].is_null());
}

TEST_CASE("usage errors are exit 2, help is exit 0") {
  CHECK(run("").code == 2);
  CHECK(run("q 0").code == 2);
  CHECK(run("q 13 --digits 60").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("q --help").code == 0);
}

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    const std::string arg = argv[i];
    const std::string prefix = "--kkcex=";
    if (arg.rfind(prefix, 0) == 0) {
      g_kkcex = arg.substr(prefix.size());
    } else {
      rest.push_back(argv[i]);
    }
  }
  if (g_kkcex.empty()) {
    std::fprintf(stderr, "usage: test_cli --kkcex=PATH [doctest options]\n");
    return 1;
  }
  doctest::Context ctx;
  ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
