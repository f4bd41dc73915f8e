#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(MAJD_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
    r.output.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("enumerate counts and lists") {
  RunResult r = run("enumerate --shape 3,2 --count");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "count: 5"));

  r = run("enumerate --shape 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "1\n"));
  CHECK(contains(r.output, "count: 1"));

  r = run("enumerate --shape 3,3,3 --count --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"count\": 42"));
}

TEST_CASE("stat evaluates permutations and tableaux") {
  RunResult r = run("stat 1,2,5/3,6,7/4,8,9 --stat inv_hs");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "= 19"));

  r = run("stat 1,2/3,4 --stat maj_tab");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "= 2"));

  r = run("stat 3142 --stat maj");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "= 4"));
}

TEST_CASE("dist emits coefficient vectors") {
  RunResult r = run("dist --n 3 --stat inv --no-cache");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "[1,2,2,1]"));

  r = run("dist --shape 2,2 --stat maj_tab --no-cache --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"coeffs\""));

  r = run("dist --shape 2,2 --stat majd_tab --d 3 --no-cache");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "[0,0,1,0,1]"));
}

TEST_CASE("trace renders the pipeline") {
  RunResult r = run("trace 1,2,5/3,6,7/4,8,9 --d 8");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "T_1 = 1,4,5/2,6,8/3,7,9"));
  CHECK(contains(r.output, "maj_8 = 19"));

  r = run("trace 1,2,5/3,6,7/4,8,9 --d 8 --swap-mode RecomputedPath");
  CHECK(r.exit_code == 0);
  CHECK_FALSE(contains(r.output, "diverges"));
}

TEST_CASE("verify propagates pass and failure exit codes") {
  RunResult r = run("verify paper-fixtures oracle-counts --no-cache --max-n 6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "PASS paper-fixtures"));

  r = run("verify figure4-search --no-cache");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "counterexample"));
}

TEST_CASE("usage and bounds errors exit with 2") {
  CHECK(run("stat 1,1/2,3 --stat maj_tab").exit_code == 2);
  CHECK(run("stat 3142 --stat nosuch").exit_code == 2);
  CHECK(run("stat 3142 --stat majd").exit_code == 2);  // missing --d
  CHECK(run("enumerate --shape 5,5,5,5").exit_code == 2);  // enumeration bound
  CHECK(run("dist --n 11 --stat inv --no-cache").exit_code == 2);
  CHECK(run("nosuchcommand").exit_code == 2);
}
