#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kData = DATA_DIR;

}  // namespace

TEST(Cli, SolveSucceeds) {
  const CliRun r = run("solve --family matching:2 --troops 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("Draw", 0), 0u);
  const CliRun j = run("solve --family cycle:3 --troops 2 --json");
  EXPECT_EQ(j.code, 0);
  EXPECT_NE(j.out.find("\"result\":\"draw\""), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run("verify --strategy raj_mirror_matching --family matching:3 --troops 4").code, 0);
  EXPECT_EQ(run("verify --strategy raj_three_edges --family matching:3 --troops 9 --mode paper_faithful").code, 1);
  EXPECT_EQ(run("verify --strategy raj_three_edges --family matching:2 --troops 9").code, 2);
  EXPECT_EQ(run("verify --strategy raj_mirror_matching --family matching:3 --troops 4 --max-positions 3").code, 3);
}

TEST(Cli, RespondExitCodes) {
  const CliRun yes = run("respond --instance " + kData + "/planted_instance.json");
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out.rfind("yes", 0), 0u);
  const CliRun no = run("respond --instance " + kData + "/clique_free_instance.json");
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out.rfind("no", 0), 0u);
  EXPECT_EQ(run("respond --instance " + kData + "/clique_free_instance.json --node-limit 5").code, 3);
  EXPECT_EQ(run("respond --instance " + kData + "/missing.json").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("fly").code, 2);
  EXPECT_EQ(run("solve --family hexagon:3 --troops 2").code, 2);
  EXPECT_EQ(run("solve --family cycle:5").code, 2);
  EXPECT_EQ(run("solve --family cycle:5 --troops 40 --node-limit 50").code, 3);
}

TEST(Cli, ReduceThenRespond) {
  const std::string out = testing::TempDir() + "cli_reduced.json";
  EXPECT_EQ(run("reduce --input " + kData + "/planted_k3_n6.json --output " + out).code, 0);
  const CliRun r = run("respond --instance " + out + " --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"decision\":\"yes\""), std::string::npos);
  std::remove(out.c_str());
}

TEST(Cli, Replay) {
  const CliRun r = run("play --family cycle:3 --troops 2 --replay " + kData + "/c3_stack_line.json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("result Draw"), std::string::npos);
}
