#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int exit_code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CPA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string("'") + CPA_TEST_DATA_DIR + "/" + name + "'"; }

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("catalog list").exit_code, 0);
  EXPECT_EQ(run("validate " + data("heisenberg.json")).exit_code, 0);
  EXPECT_EQ(run("validate " + data("broken.json")).exit_code, 1);
  EXPECT_EQ(run("verify heisenberg " + data("a_mu_1.json")).exit_code, 0);
  EXPECT_EQ(run("verify " + data("borel_sl2.json") + " " + data("alpha1.json")).exit_code, 1);
  EXPECT_EQ(run("classify heisenberg --method inner").exit_code, 1);
  EXPECT_EQ(run("verify 'nosuch(3)' " + data("a_mu_1.json")).exit_code, 2);
  EXPECT_EQ(run("classify sl2 --method bogus").exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("verify heisenberg " + data("missing.json")).exit_code, 2);
}

TEST(Cli, VerifyReportsFirstViolation) {
  const auto r = run("verify 'borel_sl(2)' " + data("alpha1.json"));
  EXPECT_NE(r.out.find("\"bracket_action\": false"), std::string::npos);
  EXPECT_NE(r.out.find("\"axiom\": \"bracket_action\""), std::string::npos);
}

TEST(Cli, ClassifyBorelInner) {
  const auto r = run("classify 'borel_sl(2)' --method inner");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"kind\": \"ComponentUnion\""), std::string::npos);
}

TEST(Cli, DecomposeAndChain) {
  const auto d = run("decompose 'borel_sl(2)' " + data("phi_alpha2.json"));
  EXPECT_EQ(d.exit_code, 0);
  EXPECT_NE(d.out.find("\"eigenvalues\""), std::string::npos);
  const auto c = run("chain heisenberg " + data("a_mu_1.json"));
  EXPECT_EQ(c.exit_code, 0);
  EXPECT_NE(c.out.find("\"chain_dims\""), std::string::npos);
}

TEST(Cli, ConstructOutputVerifies) {
  const auto p = run("construct center-construction heisenberg");
  ASSERT_EQ(p.exit_code, 0);
  const std::string path = ::testing::TempDir() + "cpa_cli_center.json";
  FILE* f = std::fopen(path.c_str(), "w");
  ASSERT_NE(f, nullptr);
  std::fwrite(p.out.data(), 1, p.out.size(), f);
  std::fclose(f);
  EXPECT_EQ(run("verify heisenberg '" + path + "'").exit_code, 0);
  EXPECT_EQ(run("construct center-construction 'sl(2)'").exit_code, 1);
}

TEST(Cli, SuiteJsonIsStable) {
  const auto a = run("suite --json");
  const auto b = run("suite --json");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"summary\""), std::string::npos);
}
