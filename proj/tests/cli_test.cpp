#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;  // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(MASSFORM_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(MASSFORM_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("golden outputs are byte-exact") {
  struct Case {
    const char* args;
    const char* golden;
  };
  const Case cases[] = {
      {"total --char 0 --p 3 --f 1 --e 2", "total_q3e2.txt"},
      {"cyclic --char p --p 3 --f 1", "cyclic_f3t.txt"},
      {"verify --case q2", "verify_q2.txt"},
      {"by-gamma --char 0 --p 3 --f 1 --e 1 --order 2", "by_gamma_q3.txt"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.args);
    RunResult r = run_cli(c.args);
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_golden(c.golden));
  }
}

TEST_CASE("identical invocations give identical bytes") {
  const std::string args =
      "contribution --char 0 --p 5 --f 2 --e 3 --omega-b 1 --chi 3,2 --format json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("json output parses and round-trips through the serializer") {
  for (const std::string args : {
           std::string("total --char 0 --p 3 --f 1 --e 1 --format json"),
           std::string("contribution --char 0 --p 3 --f 1 --e 1 --chi 0,0 --format json"),
           std::string("contribution --char p --p 3 --f 1 --vbar 1 --format json"),
           std::string("by-gamma --char 0 --p 3 --f 1 --e 1 --order 2 --format json"),
           std::string("by-subfield --char 0 --p 3 --f 1 --e 1 --gen 0,1 --format json"),
           std::string("unramified-tame --char p --p 3 --f 2 --format json"),
           std::string("count --char 0 --p 3 --f 1 --e 1 --max-c 3 --format json"),
           std::string("verify --case f3t --format json"),
           std::string("identity --p 7 --max-i 100 --format json"),
           std::string("census --case q2 --format json"),
       }) {
    CAPTURE(args);
    RunResult r = run_cli(args);
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("json rationals carry num and den as strings") {
  RunResult r = run_cli("cyclic --char 0 --p 5 --f 1 --e 1 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["mass"]["num"] == "1");
  CHECK(j["mass"]["den"] == "125");
  CHECK(j["chi"] == nlohmann::json::array({1, 2}));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("bogus").exit_code == 2);
  CHECK(run_cli("total").exit_code == 2);  // missing field flags
  CHECK(run_cli("total --char 0 --p 3 --f 1 --e 1 --format yaml").exit_code == 2);
  CHECK(run_cli("contribution --char 0 --p 3 --f 1 --e 1").exit_code == 2);  // no selector
  CHECK(run_cli("contribution --char 0 --p 3 --f 1 --e 1 --chi 1,0 --vbar 0").exit_code == 2);
  CHECK(run_cli("count --char 0 --p 3 --f 1 --e 1").exit_code == 2);  // missing --max-c
  CHECK(run_cli("verify --case nonsense").exit_code == 2);
  CHECK(run_cli("by-gamma --char 0 --p 3 --f 1 --e 1").exit_code == 2);  // missing --order
  CHECK(run_cli("contribution --char 0 --p 3 --f 1 --e 1 --chi 1").exit_code == 2);
}

TEST_CASE("domain errors exit 3 with a diagnostic") {
  RunResult r = run_cli("total --char 0 --p 4 --f 1 --e 1");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("error:") != std::string::npos);

  CHECK(run_cli("total --char 0 --p 3 --f 1").exit_code == 3);   // missing e
  CHECK(run_cli("total --char p --p 3 --f 1 --e 2").exit_code == 3);  // spurious e
  CHECK(run_cli("cyclic --char 0 --p 3 --f 1 --e 2").exit_code == 3); // omega data missing
  CHECK(run_cli("by-gamma --char 0 --p 3 --f 1 --e 1 --order 5").exit_code == 3);
  // module verify needs omega pinned down for ramified p >= 3
  CHECK(run_cli("verify --case module --char 0 --p 3 --f 1 --e 2").exit_code == 3);
}

TEST_CASE("table outputs end with a newline and stay stable across formats") {
  RunResult table = run_cli("count --char 0 --p 3 --f 1 --e 1 --max-c 3");
  REQUIRE(table.exit_code == 0);
  CHECK(table.out == "c=1 count=6\nc=2 count=6\nc=3 count=9\ncount = 21\n");

  RunResult one = run_cli("count --char 0 --p 3 --f 1 --e 1 --max-c 3 --chi 0,0");
  REQUIRE(one.exit_code == 0);
  CHECK(one.out == "c=1 count=3\nc=3 count=9\ncount = 12\n");
}

TEST_CASE("contribution table layout") {
  RunResult r = run_cli("contribution --char 0 --p 3 --f 1 --e 1 --chi 0,0");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out ==
        "chi=(0,0) vbar=0\n"
        "  i=0 j=1 term=1/3\n"
        "prefactor = 3/1\n"
        "special = 1/3\n"
        "mass = 4/3 (1.333333)\n");
}

TEST_CASE("decimal digit control") {
  RunResult r = run_cli("cyclic --char p --p 3 --f 1 --decimal-digits 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "mass = 9/20 (0.45)\n");
  RunResult r1 = run_cli("cyclic --char p --p 3 --f 1 --decimal-digits 1");
  REQUIRE(r1.exit_code == 0);
  CHECK(r1.out == "mass = 9/20 (0.5)\n");  // half away from zero
  RunResult r0 = run_cli("by-gamma --char 0 --p 3 --f 1 --e 1 --order 2 --decimal-digits 0");
  REQUIRE(r0.exit_code == 0);
  CHECK(r0.out.substr(0, r0.out.find('\n')) == "mass = 8/3 (3)");
}

TEST_CASE("census of the dyadic case lists the seven classes") {
  RunResult r = run_cli("census --case q2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out ==
        "chi=(0,0) level=0 rep=5\n"
        "chi=(0,0) level=1 rep=-1\n"
        "chi=(0,0) level=1 rep=-5\n"
        "chi=(0,0) level=2 rep=2\n"
        "chi=(0,0) level=2 rep=-2\n"
        "chi=(0,0) level=2 rep=10\n"
        "chi=(0,0) level=2 rep=-10\n");
}

TEST_CASE("verify module case passes for assorted fields") {
  CHECK(run_cli("verify --case module --char 0 --p 3 --f 1 --e 1").out ==
        "PASS: 4 chars, 10 lines, module matches closed forms\n");
  CHECK(run_cli("verify --case module --char 0 --p 2 --f 1 --e 2").exit_code == 0);
  CHECK(run_cli("verify --case module --char p --p 2 --f 1 --max-level 9").out ==
        "PASS: 1 chars, 63 lines, module matches closed forms\n");
  CHECK(run_cli("verify --case f2t").out == "PASS: 63 lines, mass 31/16, counts ok\n");
  CHECK(run_cli("verify --case f3t").out == "PASS: 79 lines, mass 728/243, counts ok\n");
}
