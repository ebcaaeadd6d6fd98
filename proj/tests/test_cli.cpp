#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef CYCLOW_BIN
#error "CYCLOW_BIN must point at the built command-line binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CYCLOW_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("a2 prints the gcd and the count") {
  const RunResult r = run_cli("a2 --p 3 --m 2 --exps 1,5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "D = 2"));
  CHECK(contains(r.output, "A2 = 8"));
  CHECK(contains(r.output, "modulus = x^2 + x + 2"));
}

TEST_CASE("a2 reports canonical coset representatives") {
  const RunResult r = run_cli("a2 --p 2 --m 3 --exps 1,5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "exponents = 1,3"));
  CHECK(contains(r.output, "A2 = 0"));
}

TEST_CASE("a3-c1t on the worked BCH example") {
  const RunResult r = run_cli("a3-c1t --m 4 --t 7");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "gcd degree = 4"));
  CHECK(contains(r.output, "A3 = 5"));
  CHECK(contains(r.output, "gcd = x^4 + x"));
}

TEST_CASE("family prints closed forms") {
  const RunResult r = run_cli("family --f 2 --k 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "A5 = 186"));
  CHECK(contains(r.output, "A6 = 806"));
  CHECK(contains(r.output, "N3 = 94"));
  CHECK(contains(r.output, "N6 = 1175552"));
  CHECK(contains(r.output, "exponents = 1,5"));
}

TEST_CASE("nw and invert round-trip through text") {
  const RunResult fwd = run_cli("nw --q 16 --weights 1,0,0,0,0 --w 3");
  CHECK(fwd.exit_code == 0);
  CHECK(contains(fwd.output, "N3 = 46"));

  const RunResult inv = run_cli("invert --q 32 --nw 32,94,3008,36736,1175552");
  CHECK(inv.exit_code == 0);
  CHECK(contains(inv.output, "A5 = 186"));
  CHECK(contains(inv.output, "A6 = 806"));
}

TEST_CASE("brute subcommands expose the oracles") {
  const RunResult bw = run_cli("brute-weights --p 2 --m 5 --exps 1,5 --wmax 6");
  CHECK(bw.exit_code == 0);
  CHECK(contains(bw.output, "A5 = 186"));

  const RunResult bn = run_cli("brute-nw --m 4 --exps 1,2,3,4 --w 3");
  CHECK(bn.exit_code == 0);
  CHECK(contains(bn.output, "N3 = 46"));
}

TEST_CASE("no-w3 evaluates the cheap criterion") {
  const RunResult r = run_cli("no-w3 --m 31 --t 33");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "no weight-3 guaranteed = yes"));
  const RunResult r2 = run_cli("no-w3 --m 4 --t 7");
  CHECK(r2.exit_code == 0);
  CHECK(contains(r2.output, "no weight-3 guaranteed = no"));
}

TEST_CASE("a3-bound lists witnesses on request") {
  const RunResult r = run_cli(
      "a3-bound --p 5 --m 2 --g 1 --t 1 --exps 1,9 --witnesses");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "A3 lower bound = 288"));
  CHECK(contains(r.output, "x^18 + 3*x^6 + 1"));
}

TEST_CASE("verify cross-checks formulas against brute force") {
  const RunResult r = run_cli("verify --p 2 --m 4 --exps 1,7 --wmax 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "check A2: ok"));
  CHECK(contains(r.output, "check N5: ok"));
  CHECK(contains(r.output, "check roundtrip: ok"));
  CHECK(contains(r.output, "check A3: ok"));
  CHECK_FALSE(contains(r.output, "MISMATCH"));
}

TEST_CASE("json output is schema-stable and byte-deterministic") {
  const RunResult once = run_cli("a2 --p 3 --m 2 --exps 1,5 --format json");
  const RunResult twice = run_cli("a2 --p 3 --m 2 --exps 1,5 --format json");
  CHECK(once.exit_code == 0);
  CHECK(once.output == twice.output);

  const nlohmann::json doc = nlohmann::json::parse(once.output);
  CHECK(doc["field"]["p"] == 3);
  CHECK(doc["field"]["m"] == 2);
  CHECK(doc["field"]["modulus"] == nlohmann::json({2, 1, 1}));
  CHECK(doc["code"]["exponents"] == nlohmann::json({1, 5}));
  CHECK(doc["result"]["A2"] == "8");
  CHECK(doc["result"]["D"] == 2);
  CHECK(doc["method"] == "formula");

  const nlohmann::json brute =
      nlohmann::json::parse(run_cli("brute-nw --m 4 --exps 1,2,3,4 --w 3 "
                                    "--format json").output);
  CHECK(brute["method"] == "bruteforce");
  CHECK(brute["result"]["N"] == "46");

  const nlohmann::json fam =
      nlohmann::json::parse(run_cli("family --f 2 --k 2 --format json").output);
  CHECK(fam["result"]["A"][5] == "186");
  CHECK(fam["result"]["N"]["N4"] == "3008");
}

TEST_CASE("exit codes distinguish the failure kinds") {
  CHECK(run_cli("").exit_code == 2);                  // no subcommand
  CHECK(run_cli("a2 --p 3").exit_code == 2);          // missing required flags
  CHECK(run_cli("a2 --bogus 1").exit_code == 2);      // unknown option
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("a2 --p 4 --m 2 --exps 1").exit_code == 3);    // p not prime
  CHECK(run_cli("a2 --p 2 --m 4 --exps 1,2").exit_code == 3);  // shared coset
  CHECK(run_cli("invert --q 32 --nw 33").exit_code == 3);      // non-integral
  CHECK(run_cli("nw --q 16 --weights 1,x --w 2").exit_code == 3);
  CHECK(run_cli("brute-weights --p 2 --m 5 --exps 1,5 --wmax 6 --budget 10")
            .exit_code == 4);
  CHECK(run_cli("brute-nw --m 5 --exps 3,5 --w 7 --budget 1000").exit_code == 4);
}

TEST_CASE("a2 against a pinned non-default modulus") {
  const RunResult r = run_cli("a2 --p 2 --m 4 --modulus 1,0,0,1,1 --exps 1,7");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "modulus = x^4 + x^3 + 1"));
  CHECK(contains(r.output, "A2 = 0"));
  const RunResult bad = run_cli("a2 --p 2 --m 4 --modulus 1,1,1,1,1 --exps 1,7");
  CHECK(bad.exit_code == 3);
  CHECK(contains(bad.output, "primitive"));
}

}  // TEST_SUITE
