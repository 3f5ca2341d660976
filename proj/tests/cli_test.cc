// Copyright 2026 The Liquidity Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "liqgame/cli.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

namespace liqgame {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun InProcess(std::vector<std::string> args) {
  args.insert(args.begin(), "liqgame");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun run;
  run.code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

// Runs the built binary through the shell; stderr is folded into `err`.
CliRun Subprocess(const std::string& args, const std::string& env = "") {
  const std::string err_path = ::testing::TempDir() + "liqgame_cli_err.txt";
  const std::string cmd =
      env + " " + std::string(LIQGAME_CLI_PATH) + " " + args + " 2>" + err_path;
  CliRun run;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) run.out.append(buf, n);
  const int status = ::pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_path);
  std::stringstream ss;
  ss << in.rdbuf();
  run.err = ss.str();
  return run;
}

std::string Fixture(const std::string& name) {
  return (FixtureDir() / name).string();
}

TEST(CliSolveTest, MatchesLibraryReport) {
  const CliRun run = Subprocess("solve --bi 2 --bj -2");
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_EQ(run.out, RenderJson(SolveReport(BuildInstance(2, -2, 2), {})));
  const Json report = Json::parse(run.out);
  EXPECT_EQ(report["mixed"].size(), 3u);
  EXPECT_EQ(report["mixed"][2]["probs_j"], Json::array({"1/2", "1/2"}));
}

TEST(CliSolveTest, ConfigFileAndCap) {
  const std::string path = ::testing::TempDir() + "liqgame_instance.json";
  std::ofstream(path) << R"({"balance_i": -3, "balance_j": 3, "issue_cap": 5})";
  const CliRun run = InProcess({"solve", "--config", path});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_EQ(run.out, RenderJson(SolveReport(BuildInstance(3, -3, 5), {})));
  EXPECT_EQ(InProcess({"solve", "--bi", "3", "--bj", "-3", "--cap", "5"}).out,
            run.out);
}

TEST(CliSolveTest, InputErrorsExitTwo) {
  const CliRun same = Subprocess("solve --bi 2 --bj 2");
  EXPECT_EQ(same.code, 2);
  EXPECT_NE(same.err.find("SameSignBalances"), std::string::npos);
  EXPECT_NE(same.err.find("balance_j"), std::string::npos);
  EXPECT_TRUE(same.out.empty());
  EXPECT_EQ(InProcess({"solve", "--bi", "2"}).code, 2);
  EXPECT_EQ(InProcess({"solve", "--bi", "13", "--bj", "-13"}).code, 2);
  EXPECT_EQ(InProcess({"solve", "--bi", "13", "--bj", "-13", "--max-dim", "13",
                       "--format", "csv"})
                .code,
            0);
  EXPECT_EQ(InProcess({"solve", "--bi", "x", "--bj", "-1"}).code, 2);
  EXPECT_EQ(InProcess({"frobnicate"}).code, 2);
}

TEST(CliSolveTest, CsvMatrix) {
  const CliRun run = InProcess({"solve", "--bi", "2", "--bj", "-2", "--format", "csv"});
  EXPECT_EQ(run.out, "2|2,0|0\n1|1,1|1\n");
}

TEST(CliOutputTest, AtomicFileAndNoPartialOnError) {
  const std::string path = ::testing::TempDir() + "liqgame_cli_out.json";
  std::filesystem::remove(path);
  CliRun run = InProcess({"--output", path, "solve", "--bi", "2", "--bj", "-2"});
  ASSERT_EQ(run.code, 0);
  EXPECT_TRUE(run.out.empty());
  EXPECT_EQ(ReadFile(path), RenderJson(SolveReport(BuildInstance(2, -2, 2), {})));
  const std::string bad = ::testing::TempDir() + "liqgame_cli_bad.json";
  std::filesystem::remove(bad);
  run = InProcess({"solve", "--bi", "2", "--bj", "2", "--output", bad});
  EXPECT_EQ(run.code, 2);
  EXPECT_FALSE(std::filesystem::exists(bad));
}

TEST(CliBayesTest, BundledFixture) {
  const CliRun run = InProcess({"bayes"});
  ASSERT_EQ(run.code, 0) << run.err;
  const auto path = Fixture("bayes_large_small.json");
  EXPECT_EQ(run.out,
            RenderJson(BayesReport(BayesFromJson(ParseJson(ReadFile(path), path)))));
  const Json report = Json::parse(run.out);
  EXPECT_NEAR(report["threshold_p"].get<double>(), 5.0 / 9.0, 1e-12);
  EXPECT_EQ(report["responses_j"]["a"], "high");
  EXPECT_EQ(report["responses_j"]["b"], "high");
}

TEST(CliBayesTest, DegeneratePriorAndCounterfactual) {
  Json report = Json::parse(InProcess({"bayes", "--prior", "1,0"}).out);
  EXPECT_EQ(report["preferred_i"], "high");
  EXPECT_EQ(report["expected_payoffs_i"]["high"].get<double>(), 10.0);
  report = Json::parse(InProcess({"bayes", "--response", "a=high,b=low"}).out);
  EXPECT_EQ(report["threshold_p"].get<double>(), 0.0);
  EXPECT_EQ(report["response_source"]["b"], "given");
  EXPECT_EQ(InProcess({"bayes", Fixture("bayes_low_response.json")}).out,
            InProcess({"bayes", "--response", "a=high,b=low"}).out);
  EXPECT_EQ(InProcess({"bayes", "--prior", "0.5,0.6"}).code, 2);
  EXPECT_EQ(InProcess({"bayes", "--response", "c=high"}).code, 2);
  EXPECT_EQ(InProcess({"bayes", "/nonexistent.json"}).code, 2);
}

TEST(CliBayesTest, CurveCsv) {
  const CliRun run = InProcess({"bayes", "--format", "csv"});
  std::istringstream lines(run.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "p,payoff_high,payoff_low");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 101);
}

TEST(CliMarketTest, Published) {
  const CliRun run = Subprocess("market --published final_4x4");
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_EQ(run.out, RenderJson(QuadrantReportToJson(
                         QuadrantAnalysis(LoadPublishedMatrix(kFinalTable)))));
  const Json report = Json::parse(run.out);
  EXPECT_EQ(report["system_total"].get<double>(), 41.1);
  EXPECT_EQ(report["hit_ratio"].get<double>(), 0.75);
  EXPECT_EQ(report["best_quadrant"]["sum"].get<double>(), 18.6);
  EXPECT_EQ(InProcess({"market", "--published", "nope"}).code, 2);
}

TEST(CliMarketTest, Constructive) {
  const CliRun run = InProcess({"market", "--constructive", "--priors", "1,0",
                             "--format", "csv"});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_NE(run.out.find("L+H,L+H,10.0,10.0,20.0\n"), std::string::npos);
  EXPECT_NE(run.out.find("L+l,L+H,6.0,6.0,12.0\n"), std::string::npos);
  EXPECT_NE(run.out.find("s+l,s+l,0.0,0.0,0.0\n"), std::string::npos);

  const std::string path = ::testing::TempDir() + "liqgame_pairs.json";
  std::ofstream(path) << R"({"types": ["L", "s"], "strategies_i": ["H"],
    "strategies_j": ["H"], "matrices": {"L": {"L": [[[1, 1]]]}}})";
  const CliRun missing = InProcess({"market", "--constructive", "--matrices", path});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("MissingTypePairMatrix"), std::string::npos);
  EXPECT_EQ(InProcess({"market"}).code, 2);
}

TEST(CliSimulateTest, DeterministicForSeed) {
  const CliRun a = Subprocess("simulate --seed 42");
  const CliRun b = Subprocess("simulate --seed 42");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  SimConfig c = SimConfigFromJson(
      ParseJson(ReadFile(Fixture("sim_default.json")), "sim_default.json"));
  c.seed = 42;
  EXPECT_EQ(a.out, RenderJson(SimReportToJson(RunSimulation(c))));
}

TEST(CliSimulateTest, DrawnSeedIsPrintedAndEmbedded) {
  const std::string path = ::testing::TempDir() + "liqgame_noseed.json";
  std::ofstream(path) << R"({"trials": 100, "mode": "repeated"})";
  const CliRun run = InProcess({"simulate", path});
  ASSERT_EQ(run.code, 0) << run.err;
  ASSERT_EQ(run.err.rfind("seed: ", 0), 0u);
  const std::uint64_t seed = std::stoull(run.err.substr(6));
  EXPECT_EQ(Json::parse(run.out)["seed"].get<std::uint64_t>(), seed);
  // Replaying with the printed seed reproduces the report.
  EXPECT_EQ(InProcess({"simulate", path, "--seed", std::to_string(seed)}).out,
            run.out);
}

TEST(CliSimulateTest, HistogramAndErrors) {
  const std::string cfg = ::testing::TempDir() + "liqgame_rep.json";
  std::ofstream(cfg) << R"({"trials": 500, "mode": "repeated", "seed": 3})";
  const std::string hist = ::testing::TempDir() + "liqgame_hist.csv";
  const CliRun run = InProcess({"simulate", cfg, "--histogram", hist});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_EQ(ReadFile(hist).rfind("rounds,count\n", 0), 0u);
  EXPECT_EQ(InProcess({"simulate", cfg, "--format", "csv"}).out, ReadFile(hist));

  const std::string bad = ::testing::TempDir() + "liqgame_badrange.json";
  std::ofstream(bad) << R"({"balance_range_i": [10, 1]})";
  const CliRun err = InProcess({"simulate", bad, "--seed", "1"});
  EXPECT_EQ(err.code, 2);
  EXPECT_NE(err.err.find("balance_range_i"), std::string::npos);
}

TEST(CliLpTest, PrintsInteger) {
  const CliRun run = Subprocess("lp --receiver 10 --sender 20");
  EXPECT_EQ(run.code, 0);
  EXPECT_EQ(run.out, "10\n");
  EXPECT_EQ(InProcess({"lp", "--receiver", "-1", "--sender", "2"}).code, 2);
  EXPECT_EQ(InProcess({"lp", "--receiver", "1"}).code, 2);
}

TEST(CliTest, FixtureEnvironmentOverride) {
  const CliRun run = Subprocess("market --published final_4x4",
                             "LIQGAME_FIXTURES=/nonexistent");
  EXPECT_EQ(run.code, 2);
  EXPECT_NE(run.err.find("IoError"), std::string::npos);
}

}  // namespace
}  // namespace liqgame
