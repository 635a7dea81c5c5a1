// Drives the installed command-line binary end to end, including the
// text-versus-JSON verdict agreement and the exit-code contract.

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(FGWORD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string first_line(const std::string& s) {
  auto nl = s.find('\n');
  return nl == std::string::npos ? s : s.substr(0, nl);
}

}  // namespace

TEST_CASE("reduce prints the identity as 1") {
  RunResult r = run_cli("reduce aA --alphabet a,b");
  REQUIRE(r.code == 0);
  REQUIRE(first_line(r.out) == "1");
}

TEST_CASE("the candidate is not equivalent to its inverse via the CLI") {
  RunResult r = run_cli("equiv a^2c^2ac^-1 ca^-1c^-2a^-2");
  REQUIRE(r.code == 0);
  REQUIRE(first_line(r.out) == "false");
}

TEST_CASE("primitivity with witness") {
  RunResult r = run_cli("primitive ab --alphabet a,b");
  REQUIRE(r.code == 0);
  REQUIRE(first_line(r.out) == "true");
  REQUIRE(r.out.find("witness") != std::string::npos);
}

TEST_CASE("text and JSON verdicts agree") {
  for (const std::string& args :
       {std::string("inv-equiv a^2c^2ac^-1"), std::string("inv-equiv a"),
        std::string("equiv ab ba --alphabet a,b"), std::string("equiv a b --alphabet a,b"),
        std::string("primitive aba^-1b^-1 --alphabet a,b")}) {
    RunResult text = run_cli(args);
    RunResult machine = run_cli(args + " --json");
    REQUIRE(text.code == 0);
    REQUIRE(machine.code == 0);
    auto j = nlohmann::json::parse(machine.out);
    bool json_verdict = j.contains("equivalent") ? j.at("equivalent").get<bool>()
                                                 : j.at("primitive").get<bool>();
    REQUIRE((first_line(text.out) == "true") == json_verdict);
  }
}

TEST_CASE("orbit report") {
  RunResult r = run_cli("orbit a --alphabet a,b --contains b --contains ab --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.at("orbit_size") == 4);
  REQUIRE(j.at("min_length") == 1);
  REQUIRE(j.at("contains")[0].at("contained") == true);
  REQUIRE(j.at("contains")[1].at("contained") == true);
}

TEST_CASE("lift through the bundled cover") {
  RunResult r = run_cli("lift 'a^4 ab^-1 ab^-1 a^2 b a^-1'");
  REQUIRE(r.code == 0);
  REQUIRE(first_line(r.out) == "b^2 a^-2 b a");

  RunResult odd = run_cli("lift a");
  REQUIRE(odd.code == 1);
}

TEST_CASE("push subcommand") {
  RunResult r = run_cli("push 'p1:b p1:b^-1' --apply 'x y' --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.at("image") == "x y");

  RunResult kept = run_cli("push 'p1:b' --apply x --keep q1,q2 --json");
  REQUIRE(kept.code == 0);
  auto jk = nlohmann::json::parse(kept.out);
  REQUIRE(jk.at("moved") == false);
}

TEST_CASE("usage errors exit 2") {
  REQUIRE(run_cli("no-such-command").code == 2);
  REQUIRE(run_cli("reduce 'a^'").code == 2);
  REQUIRE(run_cli("reduce 'd'").code == 2);
  REQUIRE(run_cli("equiv onlyone").code == 2);
}

TEST_CASE("selftest runs clean") {
  RunResult r = run_cli("selftest --seed 7");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("checks passed") != std::string::npos);
}

TEST_CASE("verify-paper exits zero and writes a report") {
  std::string report_path = std::string(FGWORD_FIXTURE_DIR) + "/../build/cli_report.json";
  RunResult r = run_cli("verify-paper --fixtures " + std::string(FGWORD_FIXTURE_DIR) +
                        " --json " + report_path);
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("[PASS] candidate_not_inverse_equivalent") != std::string::npos);
  REQUIRE(r.out.find("[FAIL]") == std::string::npos);
  std::ifstream in(report_path);
  REQUIRE(in.good());
  auto j = nlohmann::json::parse(in);
  REQUIRE(j.at("schema") == 1);
  for (const auto& c : j.at("claims")) REQUIRE(c.at("result") == "PASS");
}

TEST_CASE("fixtures validate") {
  RunResult r = run_cli("fixtures --validate " + std::string(FGWORD_FIXTURE_DIR));
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("validate") != std::string::npos);
}
