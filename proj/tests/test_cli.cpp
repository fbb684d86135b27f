#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef WASSIGN_CLI
#error "WASSIGN_CLI must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(WASSIGN_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("cli_test_") + name + ".txt";
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("solve prints the fixture radius with 12 significant digits") {
  const std::string path = write_temp("fix2", "2 1\n0 0\n4 0\n0.5\n");
  for (const char* algo : {"exact", "parametric", "smallk", "auto"}) {
    auto res = run_cli("solve " + path + " --algo " + algo);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("radius: 2.66666666667") != std::string::npos);
  }
}

TEST_CASE("exact and parametric emit identical radius lines") {
  auto gen = run_cli("gen --n 8 --k 2 --seed 5 --out cli_test_gen.txt");
  REQUIRE(gen.exit_code == 0);
  auto a = run_cli("solve cli_test_gen.txt --algo exact");
  auto b = run_cli("solve cli_test_gen.txt --algo parametric");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  const auto radius_line = [](const std::string& s) {
    const auto p = s.find("radius:");
    return s.substr(p, s.find('\n', p) - p);
  };
  CHECK(radius_line(a.output) == radius_line(b.output));
}

TEST_CASE("malformed input exits 2 and names the line") {
  const std::string path = write_temp("bad", "2 1\n0 0\noops oops\n0.5\n");
  auto res = run_cli("solve " + path);
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("line 3") != std::string::npos);
  CHECK(run_cli("solve does_not_exist.txt").exit_code == 2);
}

TEST_CASE("precondition violations exit 3") {
  const std::string path = write_temp("heavy", "2 1\n0 0\n4 0\n1.5\n");
  auto res = run_cli("solve " + path + " --algo smallk");
  CHECK(res.exit_code == 3);
}

TEST_CASE("decide exit codes on the equilateral fixture") {
  const double s = 1.7320508075688772;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "3 1\n0 0\n%.17g 0\n%.17g %.17g\n1\n", s,
                s / 2, s * s / 2);
  const std::string path = write_temp("tri", buf);
  CHECK(run_cli("decide " + path + " --r 1.0").exit_code == 0);
  CHECK(run_cli("decide " + path + " --r 0.99").exit_code == 1);
}

TEST_CASE("gen is deterministic and round-trips") {
  auto a = run_cli("gen --n 6 --k 2 --seed 9");
  auto b = run_cli("gen --n 6 --k 2 --seed 9");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  const std::string path = write_temp("roundtrip", a.output);
  auto solved = run_cli("solve " + path + " --machine");
  CHECK(solved.exit_code == 0);
  CHECK(solved.output.find("radius ") == 0);
}

TEST_CASE("render emits svg") {
  const std::string path = write_temp("fix2r", "2 1\n0 0\n4 0\n0.5\n");
  auto res = run_cli("render " + path + " --solution --r 1.0");
  CHECK(res.exit_code == 0);
  CHECK(res.output.rfind("<svg", 0) == 0);
  CHECK(res.output.find("</svg>") != std::string::npos);
}

TEST_CASE("bench emits the fixed csv header") {
  auto res = run_cli("bench --sizes 10,20 --k 2 --reps 1");
  CHECK(res.exit_code == 0);
  CHECK(res.output.rfind("n,k,algo,ms,oracle_calls\n", 0) == 0);
  CHECK(res.output.find("10,2,decide,") != std::string::npos);
  CHECK(res.output.find("20,2,decide,") != std::string::npos);
}

TEST_CASE("count-centers runs on a small fixture") {
  const std::string path = write_temp("cc", "2 1\n0 0\n4 0\n0.5\n");
  auto res = run_cli("count-centers " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.output == "2\n");
}

TEST_CASE("oracle matches solve on the fixture") {
  const std::string path = write_temp("fix2o", "2 1\n0 0\n4 0\n0.5\n");
  auto res = run_cli("oracle " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("radius: 2.66666666667") != std::string::npos);
}
