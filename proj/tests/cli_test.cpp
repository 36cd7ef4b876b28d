#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("TLAB_CLI");
  REQUIRE_MESSAGE(p != nullptr, "TLAB_CLI must point at the binary");
  return p;
}

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
    r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("analyze") {
  RunResult r = run("analyze T3:A0");
  REQUIRE(r.exit_code == 0);
  auto a = nlohmann::json::parse(r.out);
  CHECK(a["n"] == 3);
  CHECK(a["code"] == "T3:A0");
  CHECK(a["indecomposable"] == true);
  CHECK(a["big_delta"] == 0);
  CHECK(a["small_delta"].is_null());
  CHECK(a["witness_arcs"].is_null());
  CHECK(a["forms"].empty());

  auto t5 = nlohmann::json::parse(run("analyze 'name:transitive(5)'").out);
  CHECK(t5["big_delta"] == 3);
  CHECK(t5["small_delta"] == 2);
  CHECK(t5["delta_decomposition"] ==
        nlohmann::json::parse("[[0],[4],[1,2]]"));
  CHECK(t5["delta_maximal"] == true);
  CHECK(t5["Delta_maximal"] == true);

  auto t4 = nlohmann::json::parse(run("analyze 'name:transitive(4)'").out);
  CHECK(t4["small_delta"].is_null());
  CHECK(t4["delta_maximal"].is_null());
}

TEST_CASE("enum") {
  CHECK(run("enum 4 --count-only").out == "4\n");
  CHECK(run("enum 5 --count-only").out == "12\n");
  CHECK(run("enum 5 --predicate indecomposable --count-only").out == "3\n");
  RunResult listing = run("enum 3");
  CHECK(listing.out == "T3:00\nT3:40\n");
  CHECK(run("enum 9 --count-only").exit_code == 3);
  CHECK(run("enum 5 --predicate eulerian").exit_code == 2);
}

TEST_CASE("verify") {
  RunResult ok = run("verify --checks fact-4.1,fact-4.2 --n-range 4..5");
  CHECK(ok.exit_code == 0);
  // one JSON report line per check
  auto nl = ok.out.find('\n');
  auto first = nlohmann::json::parse(ok.out.substr(0, nl));
  CHECK(first["pass"] == true);
  CHECK(run("verify --checks bogus").exit_code == 4);
  CHECK(run("verify --checks cor-3.6 --n-range 5..9").exit_code == 3);
}

TEST_CASE("gen and match") {
  RunResult gen = run("gen F3 --n 1");
  REQUIRE(gen.exit_code == 0);
  std::string code = gen.out.substr(0, gen.out.find('\n'));
  CHECK(code.rfind("T5:", 0) == 0);
  RunResult match = run("match " + code);
  auto tags = nlohmann::json::parse(match.out);
  CHECK(std::find(tags.begin(), tags.end(), "F3") != tags.end());
  CHECK(nlohmann::json::parse(run("match name:U5").out).empty());
  CHECK(run("gen F3 --n 0").exit_code == 5);
  CHECK(run("gen F99 --n 1").exit_code == 5);
}

TEST_CASE("convert") {
  CHECK(run("convert T3:A0 --to trn").out == "3\n010\n001\n100\n");
  CHECK(run("convert name:C3 --to code").out == "T3:A0\n");
  CHECK(run("analyze T3:A1").exit_code == 2);  // padding bit set
  CHECK(run("analyze /nonexistent.trn").exit_code == 2);
}
