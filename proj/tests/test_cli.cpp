#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(ENTANGLE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args) {
  RunResult r = run_cli(args);
  INFO(r.out);
  REQUIRE(r.exit_code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("invariants subcommand") {
  nlohmann::json j =
      run_json("invariants --dims 3,3,3 --vector '[1,1,1]'");
  CHECK(j["n"] == nlohmann::json({2, 2, 2}));
  CHECK(j["n_pairs"] == nlohmann::json({8, 8, 8}));
  CHECK(j["n123"] == 20);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::string args =
      "census --dims 2,2,2 --samples 200 --seed 11";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  RunResult r1 = run_cli("reach --class C_9 --kmax 1 --samples 50 --seed 3");
  RunResult r2 = run_cli("reach --class C_9 --kmax 1 --samples 50 --seed 3");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
}

TEST_CASE("classify round trip through a representative") {
  nlohmann::json byvec = run_json(
      "classify --dims 3,3,3 --vector "
      "'[1,1,1]+[2,1,2]+[1,2,2]+[1,3,3]+[3,3,2]'");
  CHECK(byvec["class"] == "C_19");
  CHECK(byvec["known"] == true);

  nlohmann::json bysig = run_json("classify --dims 3,3,3 --signature 0,0,0,10");
  CHECK(bysig["class"] == "C_19");

  nlohmann::json unknown =
      run_json("classify --dims 3,3,3 --signature 0,0,0,11");
  CHECK(unknown["class"] == "unknown");
  CHECK(unknown["known"] == false);
}

TEST_CASE("count and admissible subcommands") {
  nlohmann::json c = run_json("count --dims 5,5,5 --approx");
  CHECK(c["N"] == 75);
  CHECK(std::lround(c["approx"].get<double>()) == 67);

  nlohmann::json a = run_json("admissible --dims 2,2,2");
  CHECK(a["count"] == 6);
  CHECK(a["triples"][0] == nlohmann::json({0, 0, 0}));
}

TEST_CASE("compose subcommand") {
  nlohmann::json j = run_json(
      "compose --expr '(W_5^{3,3,3} (+)123 I_3^{3,3,3})' --construct");
  CHECK(j["signature"]["n123"] == 124);
  CHECK(j["constructed_signature"] == j["signature"]);
  CHECK(j["bounds"]["n123"] == "124");

  // Partial-axis nodes report bounds only.
  nlohmann::json b = run_json(
      "compose --expr '(D_3^{2,2,3} (+)12 0_0^{1,1,3})'");
  CHECK_FALSE(b.contains("signature"));
  CHECK(b["bounds"]["n1"] == "1");
  CHECK(b["bounds"]["n123"] == ">=12");
}

TEST_CASE("table format emits non-JSON lines") {
  RunResult r = run_cli("count --dims 2,2,2 --format table");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("N\t6") != std::string::npos);
}

TEST_CASE("verify-tables passes on shipped data") {
  nlohmann::json j = run_json("verify-tables");
  CHECK(j["overall"] == "pass");
  CHECK(j["failures"] == 0);
  CHECK(j["checks_run"].get<long>() > 100);
}

TEST_CASE("verify-tables detects corrupted data") {
  const std::string data =
      std::string(ENTANGLE_SOURCE_DIR) + "/tests/fixtures/corrupt_data";
  RunResult r = run_cli("--data " + data + " verify-tables");
  CHECK(r.exit_code == 1);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["overall"] == "fail");
  REQUIRE(j["failures"] == 1);
  int seen = 0;
  for (const nlohmann::json& c : j["checks"])
    if (!c["pass"].get<bool>()) {
      ++seen;
      CHECK(c["name"].get<std::string>().find("C_19") != std::string::npos);
    }
  CHECK(seen == 1);
}

TEST_CASE("bad input exits nonzero") {
  CHECK(run_cli("invariants --dims 2,2 --vector '[1,1,1]'").exit_code != 0);
  CHECK(run_cli("invariants --dims 2,2,2 --vector '[3,1,1]'").exit_code != 0);
  CHECK(run_cli("classify --dims 2,2,2").exit_code != 0);
  CHECK(run_cli("nonsense").exit_code != 0);
}
