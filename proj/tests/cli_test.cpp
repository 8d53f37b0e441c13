#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " SUMSET_LAB_BIN " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

bool has_line(const std::string& out, const std::string& line) {
  return out.find(line + "\n") != std::string::npos;
}

TEST(Cli, ComputeOrdinaryInterval) {
  const Outcome r = run("compute -A 1..3 -H 1..2 --kind ordinary");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(has_line(r.out, "HA:       1..6")) << r.out;
  EXPECT_TRUE(has_line(r.out, "size:     6")) << r.out;
  EXPECT_TRUE(has_line(r.out, "bound:    6 (HA-positive)")) << r.out;
  EXPECT_TRUE(has_line(r.out, "equality: yes")) << r.out;
}

TEST(Cli, ComputeSingleton) {
  const Outcome r = run("compute -A 5 -H 3");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(has_line(r.out, "HA:       15")) << r.out;
  EXPECT_TRUE(has_line(r.out, "size:     1")) << r.out;
}

TEST(Cli, ComputeJson) {
  const Outcome r = run("compute -A 1,2,4 -H 2 --kind both --json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][0]["sumset"], nlohmann::json({2, 3, 4, 5, 6, 8}));
  EXPECT_EQ(j["results"][1]["sumset"], nlohmann::json({3, 5, 6}));
}

TEST(Cli, BoundFromK) {
  const Outcome r = run("bound -k 5 -H 1,2 --json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["bounds"]["HA-positive"], 10);  // 2*(5-1)+2
  EXPECT_EQ(j["bounds"]["HhatA-positive"], 9);
}

TEST(Cli, CheckReportsAllowedNonstructured) {
  const Outcome r = run("check -A 1,2,4 -H 2 --kind restricted");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(has_line(r.out, "consistent:  yes")) << r.out;
  EXPECT_NE(r.out.find("allowed non-structured"), std::string::npos) << r.out;
}

TEST(Cli, VerifySmallSpaceIsClean) {
  const Outcome r = run("verify --universe 10 --k 2..5 --hmax 4 --r 1..4 --json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["bound_violations"].empty());
  EXPECT_TRUE(j["inverse_inconsistencies"].empty());
  EXPECT_TRUE(j["clean"].get<bool>());
  EXPECT_FALSE(j.contains("wall_time_seconds"));
  // Parsing and re-serializing with the same settings reproduces the bytes.
  EXPECT_EQ(nlohmann::ordered_json::parse(r.out).dump(2) + "\n", r.out);
}

TEST(Cli, VerifyExitsTwoOnInconsistency) {
  const Outcome r = run("verify --universe 15 --k 6 --hmax 5 --r 2 --kinds restricted --no-witness --json");
  EXPECT_EQ(r.status, 2);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["inverse_inconsistencies"].empty());
}

TEST(Cli, BadInputExitsOne) {
  EXPECT_EQ(run("compute -A 1...3 -H 2").status, 1);
  EXPECT_EQ(run("compute -A 1,2 -H -1").status, 1);
  EXPECT_EQ(run("compute -A 1,2 -H 2 --json --text").status, 1);
  EXPECT_EQ(run("nosuchcommand").status, 1);
  EXPECT_EQ(run("verify --universe 40 --k 10 --hmax 20 --r 5 --cap 1000").status, 1);
}

TEST(Cli, FormatFromEnvironment) {
  const Outcome r = run("compute -A 1..3 -H 2", "SUMSET_LAB_FORMAT=json");
  ASSERT_EQ(r.status, 0);
  EXPECT_NO_THROW(nlohmann::json::parse(r.out));
  const Outcome t = run("compute -A 1..3 -H 2 --text", "SUMSET_LAB_FORMAT=json");
  EXPECT_TRUE(has_line(t.out, "size:     5")) << t.out;
  EXPECT_EQ(run("compute -A 1..3 -H 2", "SUMSET_LAB_FORMAT=yaml").status, 1);
}

}  // namespace
