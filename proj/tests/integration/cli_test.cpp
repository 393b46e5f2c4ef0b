#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

const std::string kCli = SHIFTCODE_CLI;
const std::string kData = SHIFTCODE_TEST_DATA;

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run(const std::string& args) {
  const fs::path log = fs::temp_directory_path() / ("shiftcode_cli_" + std::to_string(::getpid()) + ".log");
  const std::string command = kCli + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(command.c_str());
  std::ifstream in(log);
  std::stringstream text;
  text << in.rdbuf();
  fs::remove(log);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("shiftcode_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  return dir;
}

TEST(Cli, AnalyzeQuadratic) {
  const CliResult r = run("analyze --config " + kData + "/quadratic.json --depth 6");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("hypothesis: ok, N = 2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("diameters strictly decreasing: yes"), std::string::npos);
}

TEST(Cli, VerifyQuadratic) {
  const CliResult r = run("verify --config " + kData + "/quadratic.json --depth 8");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("5/5 checks pass, 256 cylinders"), std::string::npos) << r.out;
}

TEST(Cli, ChiOfCubicCriticalPoint) {
  const CliResult r = run("chi --config " + kData + "/cubic.json --depth 4 --critical 1");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("\"value\": 2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("certified"), std::string::npos);
}

TEST(Cli, ConnectedJuliaSetIsAHypothesisViolation) {
  EXPECT_EQ(run("analyze --config " + kData + "/square.json --depth 2").exit_code, 4);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("analyze --config /nonexistent.json").exit_code, 2);
  EXPECT_EQ(run("analyze").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("chi --config " + kData + "/quadratic.json --depth 2").exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}

TEST(Cli, PointOutsideTheLevelSetIsACertificationFailure) {
  EXPECT_EQ(run("chi --config " + kData + "/quadratic.json --depth 3 --point 0,0").exit_code, 3);
}

TEST(Cli, OutputsAreByteIdenticalAcrossRuns) {
  const fs::path a = scratch("a"), b = scratch("b");
  for (const fs::path& dir : {a, b}) {
    const std::string base = " --config " + kData + "/cubic.json --depth 4 --out " + dir.string();
    ASSERT_EQ(run("analyze --covers" + base).exit_code, 0);
    ASSERT_EQ(run("code" + base).exit_code, 0);
    ASSERT_EQ(run("render --level 3" + base).exit_code, 0);
  }
  for (const char* name : {"tree.json", "coding.json", "render.svg"}) {
    const std::string x = slurp(a / name);
    EXPECT_FALSE(x.empty()) << name;
    EXPECT_EQ(x, slurp(b / name)) << name;
  }
  fs::remove_all(a.parent_path());
}

TEST(Cli, OracleTest) {
  const CliResult r = run("oracle-test --cases 20 --d 3 --depth 4");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("20/20 cases pass"), std::string::npos);
}

}  // namespace
