#include "doctest.h"
#include "json.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

using json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(COMPBAL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.output.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("table emits the worked example") {
  const RunResult r = run("table --parts 1,3 --n-max 8");
  REQUIRE(r.exit_code == 0);
  const json body = json::parse(r.output);
  REQUIRE(body.at("rows").size() == 9);
  const json& last = body.at("rows").back();
  CHECK(last.at("n") == 8);
  CHECK(last.at("coeffs") == json::array({"1", "6", "6"}));
  CHECK(body.at("rows")[3].at("coeffs") == json::array({"1", "1"}));
}

TEST_CASE("balance verdict for the degenerate set") {
  const RunResult r = run("balance --parts 2,4,5 --q 2 --n-max 100");
  REQUIRE(r.exit_code == 0);
  const json body = json::parse(r.output);
  CHECK(body.at("balanced") == false);
  CHECK(body.at("reason").get<std::string>().find("gcd") != std::string::npos);
  CHECK(body.at("degenerate_uniform") == true);
}

TEST_CASE("minrec emits order and taps") {
  const RunResult r = run("minrec --parts 1,3 --terms 20");
  REQUIRE(r.exit_code == 0);
  const json body = json::parse(r.output);
  CHECK(body.at("order") == 3);
  CHECK(body.at("coefficients") == json::array({"1", "0", "1"}));
}

TEST_CASE("output is byte-for-byte deterministic") {
  const std::string cmds[] = {
      "table --parts 1,2,3 --n-max 15",
      "balance --parts 1,3 --q 2 --n-max 80 --format csv",
      "roots --parts 1,2,3 --q 5",
      "properties --parts 1,3 --n-max 15 --mod 3",
  };
  for (const auto& cmd : cmds) {
    const RunResult a = run(cmd);
    const RunResult b = run(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK_FALSE(a.output.empty());
  }
}

TEST_CASE("csv output has the documented balance columns") {
  const RunResult r = run("balance --parts 1,3 --q 2 --n-max 10 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.rfind("n,r,count,probability,deviation\n", 0) == 0);
  CHECK(r.output.find("8,0,7,7/13,") != std::string::npos);
}

TEST_CASE("exact evaluation through --at") {
  const RunResult r = run("table --parts 1,3 --n-max 6 --at -1 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output == "n,value\n0,1\n1,1\n2,1\n3,0\n4,-1\n5,-2\n6,-2\n");
}

TEST_CASE("exit codes map error classes") {
  CHECK(run("validate --parts 1,1").exit_code == 1);
  CHECK(run("validate --parts 0").exit_code == 1);
  CHECK(run("balance --parts 3,5 --q 2 --r 0 --n-max 10").exit_code == 1);
  CHECK(run("table --parts 1,2 --n-max 50000").exit_code == 3);

  const std::string env_cmd = std::string("COMPBAL_MAX_CELLS=10 ") + COMPBAL_CLI_PATH +
                              " table --parts 1,2 --n-max 100 2>/dev/null >/dev/null";
  const int status = std::system(env_cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);

  CHECK(run("nonsense --parts 1,2").exit_code == 1);
  CHECK(run("table --parts 1,2").exit_code == 1);
}

TEST_CASE("--out writes the same bytes as stdout") {
  const std::string path = "/tmp/compbal_test_out.json";
  std::remove(path.c_str());
  const RunResult direct = run("roots --parts 1,3 --q 2");
  const RunResult redirected = run("roots --parts 1,3 --q 2 --out " + path);
  REQUIRE(redirected.exit_code == 0);
  CHECK(redirected.output.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(contents == direct.output);
  std::remove(path.c_str());
}

TEST_CASE("scan preserves job order and isolates failures") {
  const std::string path = "/tmp/compbal_test_scan.json";
  {
    std::ofstream out(path);
    out << R"({"jobs":[
      {"analysis":"minrec","parts":[1,2],"terms":12},
      {"analysis":"balance","parts":[9,9],"q":2},
      {"analysis":"validate","parts":[2,4,5]}
    ]})";
  }
  const RunResult r = run("scan --config " + path);
  REQUIRE(r.exit_code == 0);
  const json body = json::parse(r.output);
  REQUIRE(body.at("jobs").size() == 3);
  CHECK(body.at("jobs")[0].at("status") == "ok");
  CHECK(body.at("jobs")[0].at("result").at("order") == 2);
  CHECK(body.at("jobs")[1].at("status") == "error");
  CHECK(body.at("jobs")[2].at("status") == "ok");
  CHECK(body.at("jobs")[2].at("result").at("gcd_prefix") == 2);
  std::remove(path.c_str());

  CHECK(run("scan --config /nonexistent/file.json").exit_code != 0);
}

TEST_CASE("rationals and big integers serialize as strings") {
  const RunResult r = run("balance --parts 1,3 --q 2 --r 0 --n-max 25 --n-min 20");
  REQUIRE(r.exit_code == 0);
  const json body = json::parse(r.output);
  for (const auto& row : body.at("rows")) {
    CHECK(row.at("p").is_string());
    CHECK(row.at("deviation").is_string());
  }
  CHECK(body.at("fitted_rho").is_string());
}
