#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"
#include "test_util.h"

namespace {

namespace fs = std::filesystem;
using padya::testing::flat;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(PADYA_CLI_PATH) + " " + args + " 2>&1";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("padya_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

}  // namespace

TEST(Cli, ScanTableTwo) {
  const auto f = temp_file("t2.txt",
                           "vande gurūṇāṃ caraṇāravinde\nsandarśitasvātmasukhāvabodhe\n"
                           "janasya ye jāṅgalikāyamāne\nsaṃsārahālāhalamohaśāntyai\n");
  const CliRun r = run("scan --input " + f.string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("ggl ggl lgl gg"), std::string::npos);
  EXPECT_NE(r.out.find("lgl ggl lgl gg"), std::string::npos);
  EXPECT_NE(r.out.find("Upajāti"), std::string::npos);
}

TEST(Cli, EmptyFileIsError) {
  const auto f = temp_file("empty.txt", "");
  const CliRun r = run("compose --input " + f.string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("EmptyInput"), std::string::npos) << r.out;
}

TEST(Cli, UsageAndFileErrors) {
  EXPECT_EQ(run("compose").code, 64);
  EXPECT_EQ(run("frobnicate").code, 64);
  EXPECT_EQ(run("compose --input x --max-permutations 0").code, 64);
  EXPECT_EQ(run("compose --input /nonexistent/file.txt").code, 66);
  const auto f = temp_file("ok.txt", "rāma");
  EXPECT_EQ(run("compose --input " + f.string() + " --catalog /nonexistent/metres.txt").code, 66);
  EXPECT_EQ(run("compose --input " + f.string() + " --families sama,epic").code, 64);
}

TEST(Cli, BudgetOfOneOnReorderingInputIsClosestOnly) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto ws = padya::testing::words_for_pattern("lglglglglglglglglglglglglglglglg", 5, rng);
    std::shuffle(ws.begin(), ws.end(), rng);
    const auto f = temp_file("reorder.txt", padya::testing::join_words(ws));
    const auto report = fs::temp_directory_path() / ("padya_cli_report_" + std::to_string(::getpid()) + ".json");
    const CliRun full = run("compose --input " + f.string() + " --report " + report.string());
    ASSERT_EQ(full.code, 0) << full.out;
    const auto doc = nlohmann::json::parse(std::ifstream(report));
    if (doc["permutation"] == nlohmann::json({0, 1, 2, 3, 4})) continue;
    const CliRun one = run("compose --input " + f.string() + " --max-permutations 1");
    EXPECT_EQ(one.code, 2) << one.out;
    return;
  }
  FAIL() << "no reordering case built";
}

TEST(Cli, SpelledInputAndStdin) {
  const auto f = temp_file("spelled.txt", "r\nA\nm\na\n");
  const CliRun r = run("compose --spelled --input - < " + f.string());
  EXPECT_EQ(r.code, 2) << r.out;
  EXPECT_NE(flat(r.out).find("rāma"), std::string::npos);
}

TEST(Cli, InteractivePromptsOnStdin) {
  const auto prose = temp_file("phale.txt", "phale atra");
  const auto report = fs::temp_directory_path() / ("padya_cli_inter_" + std::to_string(::getpid()) + ".json");
  const std::string cmd = "compose --interactive --input " + prose.string() + " --report " + report.string();
  const auto answers = temp_file("answers.txt", "y\n");
  const CliRun r = run(cmd + " < " + answers.string());
  EXPECT_EQ(r.code, 2) << r.out;
  const auto doc = nlohmann::json::parse(std::ifstream(report));
  EXPECT_EQ(flat(doc["verse_text"].get<std::string>()).find("phale'tra"), std::string::npos);
}
