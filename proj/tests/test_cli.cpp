#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(ZDISK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("classify") {
  RunResult r = run("classify --n -4 --json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["n"] == -4);
  CHECK(j["finite"] == true);
  CHECK(j["shape"] == "Z4");
  CHECK(j["cardinality"] == 4);
  CHECK(j["pm"]["cardinality"] == 2);
  CHECK(j["coset_reps"].size() == 4);

  RunResult r6 = run("classify --n 6 --json");
  json j6 = json::parse(r6.out);
  CHECK(j6["finite"] == false);
  CHECK(j6["rank"] == 1);

  RunResult r0 = run("classify --n 0");
  CHECK(r0.exit_code == 0);
  CHECK(r0.out.find("trivial") != std::string::npos);
}

TEST_CASE("classify golden JSON") {
  RunResult r = run("classify --n -4 --json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == read_file(std::string(ZDISK_GOLDEN_DIR) + "/classify_n-4.json"));
}

TEST_CASE("disks") {
  RunResult r = run("disks --poly \"-2*t+3-2*t^-1\" --json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["n"] == -2);
  CHECK(j["isotopy"]["count"] == 2);
  CHECK(j["equivalence"]["count"] == 1);
  CHECK(j.contains("caveat"));

  RunResult r1 = run("disks --n -1 --json");
  json j1 = json::parse(r1.out);
  CHECK(j1["isotopy"]["count"] == 1);

  // Outside the family: an unsupported verdict, still exit 0.
  RunResult r2 = run("disks --poly \"t^2+1\" --json");
  REQUIRE(r2.exit_code == 0);
  json j2 = json::parse(r2.out);
  CHECK(j2["isotopy"]["kind"] == "unsupported");

  // In-family syntax but outside the quadratic span: also unsupported.
  RunResult r3 = run("disks --poly \"-t^2 + t - 1 + t^-1 - t^-2\" --json");
  REQUIRE(r3.exit_code == 0);
  CHECK(json::parse(r3.out)["isotopy"]["kind"] == "unsupported");

  RunResult bad = run("disks --poly \"t^^\"");
  CHECK(bad.exit_code == 1);
  RunResult none = run("disks");
  CHECK(none.exit_code == 1);
}

TEST_CASE("oracle") {
  RunResult r = run("oracle --n -4 --json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["count"] == 4);
  CHECK(j["complete_within_bounds"] == true);
  CHECK(j["config"]["degree_bound"] == 3);

  RunResult rpm = run("oracle --n 1 --pm --json");
  json jpm = json::parse(rpm.out);
  CHECK(jpm["count"] == 1);

  RunResult r3 = run("oracle --n 3 --deg 2 --coeff 3 --json");
  REQUIRE(r3.exit_code == 0);
  json j3 = json::parse(r3.out);
  CHECK(j3["complete_within_bounds"] == false);

  CHECK(run("oracle --n 0").exit_code == 1);
  CHECK(run("oracle --n -4 --deg 0").exit_code == 1);
}

TEST_CASE("knot-table") {
  std::string input = std::string(ZDISK_DATA_DIR) + "/knots_5crossings.csv";
  RunResult r = run("knot-table --input " + input);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == read_file(std::string(ZDISK_GOLDEN_DIR) + "/knot_table.csv"));

  RunResult rj = run("knot-table --input " + input + " --format json");
  REQUIRE(rj.exit_code == 0);
  json j = json::parse(rj.out);
  REQUIRE(j.size() == 5);
  CHECK(j[0]["isotopy"]["count"] == 1);
  CHECK(j[3]["isotopy"]["kind"] == "unsupported");

  CHECK(run("knot-table --input /nonexistent.csv").exit_code == 1);
}

TEST_CASE("exit codes") {
  CHECK(run("classify").exit_code == 1);          // missing --n
  CHECK(run("nonsense").exit_code == 1);          // unknown subcommand
  CHECK(run("classify --n 100", "ZDISK_FACTOR_LIMIT=10").exit_code == 2);
  CHECK(run("classify --n 100", "ZDISK_FACTOR_LIMIT=1000000").exit_code == 0);
}

TEST_CASE("units subcommand mirrors classify") {
  RunResult r = run("units --n -9 --json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["shape"] == "Z4");
}
