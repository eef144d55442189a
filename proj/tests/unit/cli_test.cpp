#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "uxagent/level.hpp"
#include "uxagent/trace.hpp"

namespace uxagent {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("uxagent-cli-" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "uxagent");
    out_.str({});
    err_.str({});
    return cli::run(args, out_, err_);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(Cli, NoCommandIsAUsageError) { EXPECT_EQ(run({}), cli::kUsage); }

TEST_F(Cli, HelpExitsCleanly) {
  EXPECT_EQ(run({"--help"}), cli::kOk);
  EXPECT_NE(out_.str().find("ensemble"), std::string::npos);
}

TEST_F(Cli, ValidateAcceptsAShippedMap) {
  write("M3.level", std::string(builtin_text(MapId::M3)));
  EXPECT_EQ(run({"validate", path("M3.level")}), cli::kOk);
  EXPECT_NE(out_.str().find(": ok"), std::string::npos);
}

TEST_F(Cli, ValidateReportsInvalidLevels) {
  write("bad.level", "labrecruits-level v1\nS#G\ngoal g 2 0\n");
  EXPECT_EQ(run({"validate", path("bad.level")}), cli::kInvalid);
  EXPECT_NE(err_.str().find("goal unreachable"), std::string::npos);
  write("broken.level", "labrecruits-level v1\nS.\n..x\n");
  EXPECT_EQ(run({"validate", path("broken.level")}), cli::kInvalid);
  EXPECT_NE(err_.str().find("line 3"), std::string::npos);
}

TEST_F(Cli, MissingFileIsAUsageError) {
  EXPECT_EQ(run({"validate", path("nope.level")}), cli::kUsage);
  EXPECT_EQ(run({"render", path("nope.json"), "--out", path("x.svg")}), cli::kUsage);
}

TEST_F(Cli, RunWritesCsvAndJson) {
  ASSERT_EQ(run({"run", "--map", "M1", "--seed", "1", "--out", path("m1")}), cli::kOk) << err_.str();
  EXPECT_NE(out_.str().find("goal_found"), std::string::npos);
  const RunResult result = read_json(fs::path(path("m1.json")));
  EXPECT_EQ(result.outcome, Outcome::GoalFound);
  EXPECT_EQ(read_csv(fs::path(path("m1.csv"))), result.trace);
}

TEST_F(Cli, RunOutputIsByteIdenticalAcrossInvocations) {
  ASSERT_EQ(run({"run", "--map", "M4", "--seed", "5", "--out", path("a")}), cli::kOk);
  ASSERT_EQ(run({"run", "--map", "M4", "--seed", "5", "--out", path("b")}), cli::kOk);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(Cli, GoalFirstOnMapFourIsQuickAndCalm) {
  const auto start = std::chrono::steady_clock::now();
  ASSERT_EQ(run({"run", "--map", "M4", "--door-order", "goal-first", "--out", path("best")}),
            cli::kOk);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(10));
  const RunResult result = read_json(fs::path(path("best.json")));
  EXPECT_LT(result.duration_s, 10.0);
  for (const auto& r : result.trace) EXPECT_EQ(r.arousal, 0.0);
}

TEST_F(Cli, ConfigFileIsApplied) {
  write("cfg.json", R"({"fov_radius": 3, "seed": 4})");
  ASSERT_EQ(run({"run", "--map", "M3", "--config", path("cfg.json"), "--out", path("c")}),
            cli::kOk);
  const RunResult result = read_json(fs::path(path("c.json")));
  EXPECT_EQ(result.config.fov_radius, 3);
  EXPECT_EQ(result.seed, 4u);
  write("bad.json", R"({"fov": 3})");
  EXPECT_EQ(run({"run", "--map", "M3", "--config", path("bad.json")}), cli::kUsage);
}

TEST_F(Cli, TickLimitHasItsOwnExitCode) {
  EXPECT_EQ(run({"run", "--map", "M1", "--tick-limit", "20", "--out", path("t")}), cli::kTickLimit);
}

TEST_F(Cli, BadArgumentsAreUsageErrors) {
  EXPECT_EQ(run({"run", "--map", "M9"}), cli::kUsage);
  EXPECT_EQ(run({"run"}), cli::kUsage);
  EXPECT_EQ(run({"run", "--map", "M1", "--level", "x"}), cli::kUsage);
  EXPECT_EQ(run({"run", "--map", "M3", "--door-order", "zz"}), cli::kUsage);
  EXPECT_EQ(run({"render", "t.json", "--mode", "3d", "--out", "x"}), cli::kUsage);
}

TEST_F(Cli, RenderBothModes) {
  ASSERT_EQ(run({"run", "--map", "M2", "--out", path("m2")}), cli::kOk);
  ASSERT_EQ(run({"render", path("m2.json"), "--out", path("space.svg")}), cli::kOk) << err_.str();
  ASSERT_EQ(run({"render", path("m2.json"), "--mode", "temporal", "--out", path("time.svg")}),
            cli::kOk);
  ASSERT_EQ(run({"render", path("m2.csv"), "--map", "M2", "--out", path("csv.svg")}), cli::kOk);
  EXPECT_EQ(slurp(path("space.svg")).rfind("<?xml", 0), 0u);
  EXPECT_NE(slurp(path("time.svg")).find("#78b4ff"), std::string::npos);
}

TEST_F(Cli, RenderRejectsABadPalette) {
  ASSERT_EQ(run({"run", "--map", "M1", "--out", path("m1")}), cli::kOk);
  write("pal.json", R"({"low_low": "blue"})");
  EXPECT_EQ(run({"render", path("m1.json"), "--palette", path("pal.json"), "--out", path("x.svg")}),
            cli::kUsage);
}

TEST_F(Cli, EnsembleReportToStdoutAndFile) {
  ASSERT_EQ(run({"ensemble", "--map", "M3", "--runs", "3"}), cli::kOk) << err_.str();
  const auto report = nlohmann::json::parse(out_.str());
  EXPECT_EQ(report["runs"], 3);
  ASSERT_EQ(run({"ensemble", "--map", "M3", "--seeds", "1,2,3", "--out", path("r.json")}), cli::kOk);
  EXPECT_EQ(nlohmann::json::parse(slurp(path("r.json"))), report);
}

TEST_F(Cli, EnsembleIsByteIdenticalAcrossWorkerCounts) {
  ASSERT_EQ(run({"ensemble", "--map", "M4", "--runs", "8", "--workers", "1", "--out", path("a.json")}),
            cli::kOk);
  ASSERT_EQ(run({"ensemble", "--map", "M4", "--runs", "8", "--workers", "4", "--out", path("b.json")}),
            cli::kOk);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(Cli, EnsembleArgumentErrors) {
  EXPECT_EQ(run({"ensemble", "--map", "M1", "--runs", "0"}), cli::kUsage);
  EXPECT_EQ(run({"ensemble", "--map", "M1"}), cli::kUsage);
  EXPECT_EQ(run({"ensemble", "--map", "M1", "--seeds", "1,1"}), cli::kUsage);
  EXPECT_EQ(run({"ensemble", "--map", "M1", "--seeds", "1,x"}), cli::kUsage);
  write("env.json", R"([{"from_s": 3, "to_s": 1, "v_min": 0, "v_max": 1, "a_min": 0, "a_max": 1}])");
  EXPECT_EQ(run({"ensemble", "--map", "M1", "--runs", "1", "--envelope", path("env.json")}),
            cli::kUsage);
}

TEST_F(Cli, MapsWritesLevelsThatRevalidate) {
  ASSERT_EQ(run({"maps", "--out", path("maps")}), cli::kOk);
  for (const char* name : {"M1", "M2", "M3", "M4"}) {
    const std::string file = path("maps/" + std::string(name) + ".level");
    ASSERT_TRUE(fs::exists(file)) << file;
    EXPECT_EQ(run({"validate", file}), cli::kOk) << err_.str();
  }
  std::istringstream m4(slurp(path("maps/M4.level")));
  int doors = 0;
  for (std::string line; std::getline(m4, line);) doors += line.rfind("door ", 0) == 0;
  EXPECT_EQ(doors, 28);
}

}  // namespace
}  // namespace uxagent
