// Copyright 2026 The Barrier Coverage Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "barrier/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "barrier/io.hpp"
#include "barrier/model.hpp"
#include "json.hpp"

namespace barrier {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("barrier_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string Write(const std::string& name, const std::string& text) const {
    WriteTextFile(Path(name), text);
    return Path(name);
  }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::Run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

constexpr char kI1[] = "L 4\nN 2\n0 1\n5 1\n";

TEST_F(CliTest, GenFig5WritesI2) {
  ASSERT_EQ(Run({"gen", "--family", "fig5", "--rho", "2", "--length", "12"}), 0);
  EXPECT_EQ(ParseInstance(out_.str()), Instance(12, {{0, 2}, {1, 1}, {3, 1}, {5, 1}, {7, 1}}));
}

TEST_F(CliTest, GenRandomEmpty) {
  ASSERT_EQ(Run({"gen", "--family", "random", "--n", "0", "--length", "10", "--out",
                 Path("e.bc")}),
            0);
  const Instance inst = ParseInstance(ReadTextFile(Path("e.bc")));
  EXPECT_TRUE(inst.empty());
  EXPECT_EQ(inst.length(), 10);
}

TEST_F(CliTest, GenFig6) {
  ASSERT_EQ(Run({"gen", "--family", "fig6", "--m", "4", "--delta", "1/8"}), 0);
  EXPECT_EQ(ParseInstance(out_.str()).size(), 5u);
}

TEST_F(CliTest, GenExactCoverWithSidecar) {
  const std::string spec = Write("e1.json", R"({"m": 2, "sets": [[1], [1, 2], [2]], "k": 2})");
  ASSERT_EQ(Run({"gen", "--family", "exact-cover", "--spec", spec, "--out", Path("e1.bc")}), 0);
  const Instance inst = ParseInstance(ReadTextFile(Path("e1.bc")));
  EXPECT_EQ(inst.length(), 5);
  EXPECT_EQ(inst[0].x, Rational(-645, 2));
  const auto side = nlohmann::json::parse(ReadTextFile(Path("e1.bc.json")));
  EXPECT_EQ(side["B"], "330");
  EXPECT_EQ(side["k"], 2);
}

TEST_F(CliTest, GenParameterErrors) {
  EXPECT_EQ(Run({"gen", "--family", "fig5", "--rho", "2", "--length", "9"}), 2);
  EXPECT_EQ(Run({"gen", "--family", "warp"}), 2);
  EXPECT_EQ(Run({"gen"}), 2);
  EXPECT_EQ(Run({"gen", "--family", "exact-cover", "--spec", Path("missing.json")}), 2);
  EXPECT_EQ(Run({"gen", "--family", "exact-cover", "--spec", Write("bad.json", "{\"m\": 1}")}), 2);
  EXPECT_EQ(Run({}), 2);
  EXPECT_EQ(Run({"frobnicate"}), 2);
}

TEST_F(CliTest, SolveExamples) {
  const std::string i1 = Write("i1.bc", kI1);
  ASSERT_EQ(Run({"solve", "--algo", "fpt", "--budget", "3", i1}), 0);
  EXPECT_EQ(ParseSolution(out_.str()).cost, 3);
  EXPECT_EQ(Run({"solve", "--algo", "dp-exact", "--budget", "2", i1}), 1);
  const std::string covering = Write("c.bc", "L 4\nN 2\n1 1\n3 1\n");
  ASSERT_EQ(Run({"solve", "--algo", "oracle", "--budget", "0", covering}), 0);
  EXPECT_EQ(ParseSolution(out_.str()).cost, 0);
}

TEST_F(CliTest, SolveEveryAlgorithm) {
  const std::string i1 = Write("i1.bc", kI1);
  for (const std::string algo : {"oracle", "exact", "fpt", "dp-exact", "dp-optimal", "dp-eps",
                                 "untangle-oracle"}) {
    ASSERT_EQ(Run({"solve", "--algo", algo, "--budget", "5", "--out", Path(algo + ".sol"), i1}),
              0)
        << algo << ": " << err_.str();
    EXPECT_EQ(Run({"verify", i1, Path(algo + ".sol")}), 0) << algo << ": " << out_.str();
  }
}

TEST_F(CliTest, SolveErrors) {
  const std::string i1 = Write("i1.bc", kI1);
  EXPECT_EQ(Run({"solve", "--algo", "dp-exact", i1}), 2);
  EXPECT_EQ(Run({"solve", "--algo", "nope", i1}), 2);
  EXPECT_EQ(Run({"solve", "--algo", "fpt", Path("missing.bc")}), 2);
  EXPECT_EQ(Run({"solve", "--algo", "fpt", Write("bad.bc", "L x\n")}), 2);
  EXPECT_EQ(Run({"solve", "--algo", "fpt", Write("inf.bc", "L 10\nN 1\n0 1\n")}), 1);
}

TEST_F(CliTest, SolveResourceLimit) {
  std::string text = "L 40\nN 25\n";
  for (int i = 0; i < 25; ++i) text += std::to_string(100 + i) + " 1\n";
  EXPECT_EQ(Run({"solve", "--algo", "exact", Write("big.bc", text)}), 3);
}

TEST_F(CliTest, VerifyExamples) {
  const std::string i1 = Write("i1.bc", kI1);
  EXPECT_EQ(Run({"verify", i1, Write("good.sol", "COST 3\n1\n3\n"), "--max-cost", "3"}), 0);
  EXPECT_NE(out_.str().find("covered: yes"), std::string::npos);
  EXPECT_NE(Run({"verify", i1, Write("still.sol", "COST 0\n0\n5\n")}), 0);
  EXPECT_NE(out_.str().find("gap: (1, 4)"), std::string::npos);
  const std::string covering = Write("c.bc", "L 4\nN 2\n1 1\n3 1\n");
  EXPECT_EQ(Run({"verify", covering, Write("c.sol", "COST 0\n1\n3\n"), "--max-movers", "0"}), 0);
}

TEST_F(CliTest, VerifyBoundsAndMismatches) {
  const std::string i1 = Write("i1.bc", kI1);
  const std::string good = Write("good.sol", "COST 3\n1\n3\n");
  EXPECT_EQ(Run({"verify", i1, good, "--max-cost", "2"}), 1);
  EXPECT_EQ(Run({"verify", i1, good, "--max-movers", "1"}), 1);
  EXPECT_EQ(Run({"verify", i1, Write("lie.sol", "COST 2\n1\n3\n")}), 1);
  EXPECT_EQ(Run({"verify", i1, Write("short.sol", "COST 1\n1\n")}), 2);
}

TEST_F(CliTest, BenchFig5) {
  ASSERT_EQ(Run({"bench", "--family", "fig5", "--rho", "2", "--lengths", "8,12"}), 0);
  const std::string csv = out_.str();
  EXPECT_EQ(csv.rfind("instance,algo,status,cost,ref_cost,ratio,time_ms\n", 0), 0u);
  EXPECT_NE(csv.find(",dp-optimal,ok,18,10,9/5,"), std::string::npos);
  EXPECT_NE(csv.find(",dp-optimal,ok,10,6,5/3,"), std::string::npos);
}

TEST_F(CliTest, BenchFig6) {
  ASSERT_EQ(Run({"bench", "--family", "fig6", "--ms", "2,4", "--out", Path("f6.csv")}), 0);
  const std::string csv = ReadTextFile(Path("f6.csv"));
  EXPECT_NE(csv.find("untangle-oracle,ok,"), std::string::npos);
}

TEST_F(CliTest, BenchDirectory) {
  fs::create_directories(dir_ / "empty");
  ASSERT_EQ(Run({"bench", "--dir", Path("empty")}), 0);
  EXPECT_EQ(out_.str(), "instance,algo,status,cost,ref_cost,ratio,time_ms\n");

  fs::create_directories(dir_ / "some");
  Write("some/b.bc", kI1);
  Write("some/a.bc", "L 10\nN 1\n0 1\n");
  Write("some/notes.json", "{}");
  ASSERT_EQ(Run({"bench", "--dir", Path("some"), "--algos", "dp-optimal,fpt"}), 0);
  EXPECT_EQ(out_.str().substr(out_.str().find('\n') + 1, 26), "a.bc,dp-optimal,infeasible");
  EXPECT_NE(out_.str().find("b.bc,fpt,ok,3,3,1,"), std::string::npos);
  EXPECT_EQ(out_.str().find("notes.json"), std::string::npos);
}

TEST_F(CliTest, BenchUsageErrors) {
  EXPECT_EQ(Run({"bench"}), 2);
  EXPECT_EQ(Run({"bench", "--family", "fig5", "--dir", Path("x")}), 2);
  EXPECT_EQ(Run({"bench", "--dir", Path("nothing-here")}), 2);
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(Run({"--help"}), 0); }

}  // namespace
}  // namespace barrier
