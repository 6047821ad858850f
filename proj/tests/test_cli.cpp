#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

using namespace linper;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "linper");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  cli::RunConfig config;
  const auto early = cli::parse_command_line(static_cast<int>(argv.size()), argv.data(), config, out, err);
  Outcome o;
  o.code = early ? *early : cli::run(config, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST(Cli, HelpExitsCleanly) {
  const auto o = invoke({"--help"});
  EXPECT_EQ(o.code, cli::kOk);
  EXPECT_NE(o.out.find("selftest"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, cli::kInvalidConfig);
  EXPECT_EQ(invoke({"schur", "1", "1"}).code, cli::kInvalidConfig);
  EXPECT_EQ(invoke({"schur", "1", "x", "1"}).code, cli::kInvalidConfig);
  EXPECT_EQ(invoke({"nosuch"}).code, cli::kInvalidConfig);
  EXPECT_EQ(invoke({"--format", "xml", "flagdim", "2"}).code, cli::kInvalidConfig);
  EXPECT_EQ(invoke({"--jobs", "0", "flagdim", "2"}).code, cli::kInvalidConfig);
}

TEST(Cli, DomainErrors) {
  EXPECT_EQ(invoke({"schur", "1", "2", "1"}).code, cli::kInvalidConfig);
  EXPECT_EQ(invoke({"orbits", "3", "3", "2"}).code, cli::kInvalidConfig);
  EXPECT_EQ(invoke({"orbits", "1", "1", "5"}).code, cli::kInvalidConfig);
  EXPECT_EQ(invoke({"levi", "4", "[[1,3],[2]]", "1", "1"}).code, cli::kInvalidConfig);
  EXPECT_EQ(invoke({"levi", "3", "[[1,3],[2,4]]", "1", "1"}).code, cli::kInvalidConfig);
  EXPECT_EQ(invoke({"levi", "4", "[[1,3],[2,4]]", "4", "1"}).code, cli::kInvalidConfig);
  EXPECT_EQ(invoke({"fibermass", "2", "1"}).code, cli::kInvalidConfig);
}

TEST(Cli, BoundsCanOnlyBeRaised) {
  const auto lowered = invoke({"--bound", "levi.bound=1", "levi", "4", "[[1,3],[2,4]]", "1", "1"});
  EXPECT_EQ(lowered.code, cli::kInvalidConfig);
  EXPECT_EQ(invoke({"--bound", "nosuch=3", "flagdim", "1"}).code, cli::kInvalidConfig);
  EXPECT_EQ(invoke({"--bound", "levi.bound=99", "flagdim", "1"}).code, cli::kInvalidConfig);
  const auto raised = invoke({"--bound", "levi.bound=3", "levi", "2", "[[1],[2]]", "3", "1"});
  EXPECT_EQ(raised.code, cli::kOk);
  EXPECT_NE(raised.err.find("warning"), std::string::npos);
}

TEST(Cli, OrbitsTable) {
  const auto o = invoke({"orbits", "1", "1", "2"});
  EXPECT_EQ(o.code, cli::kOk);
  EXPECT_TRUE(has_line(o.out, "status\tok"));
  EXPECT_NE(o.out.find("# "), std::string::npos);
}

TEST(Cli, FiberMassJson) {
  const auto o = invoke({"--format", "json", "fibermass", "1", "2"});
  ASSERT_EQ(o.code, cli::kOk);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["command"], "fibermass");
  EXPECT_TRUE(j["ok"].get<bool>());
  const auto& row = j["tables"]["collided_fiber_mass"][0];
  EXPECT_EQ(row["degree"], -2);
  EXPECT_EQ(row["leading"], 3);
  EXPECT_EQ(row["|E|"], 3);
  EXPECT_TRUE(j["failures"].empty());
}

TEST(Cli, SchurTableMatches) {
  const auto o = invoke({"--format", "json", "schur", "2", "1", "2"});
  ASSERT_EQ(o.code, cli::kOk);
  const auto j = nlohmann::json::parse(o.out);
  for (const auto& row : j["tables"]["schur_decomposition"]) EXPECT_TRUE(row["match"].get<bool>());
  EXPECT_TRUE(j["tables"]["dimension"][0]["match"].get<bool>());
}

TEST(Cli, EveryCommandRuns) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"strata", "2", "3"},
                                                                  {"flagdim", "3"},
                                                                  {"levi", "4", "[[1,3],[2,4]]", "1", "1"}}) {
    const auto o = invoke(args);
    EXPECT_EQ(o.code, cli::kOk) << args[0] << "\n" << o.err;
    EXPECT_TRUE(has_line(o.out, "status\tok")) << args[0];
  }
}

TEST(Cli, OutputIsDeterministicAcrossJobCounts) {
  const auto a = invoke({"--jobs", "1", "levi", "4", "[[1,3],[2,4]]", "2", "2"});
  const auto b = invoke({"--jobs", "4", "levi", "4", "[[1,3],[2,4]]", "2", "2"});
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(invoke({"strata", "1", "3"}).out, invoke({"strata", "1", "3"}).out);
}
