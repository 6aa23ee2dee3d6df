// Copyright 2026 The hubcover Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "test_util.h"

namespace hubcover::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hubcover_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string Data(const std::string& name) { return test::DataPath(name); }
  static std::string Slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  void Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
  }

  fs::path dir_;
};

TEST_F(CliTest, GreedyOnChain) {
  const CliRun r = Call({"solve", Data("chain_v3.hcpi"), "--algo", "greedy-v3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cost 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("open H1 H3\n"), std::string::npos);
}

TEST_F(CliTest, QueensThreeReducesToInfeasible) {
  const std::string target = Path("q.hcpi");
  EXPECT_EQ(Call({"reduce", Data("queens3_c3.hcpi"), "--to", "queens-sa2", "--out",
                  target})
                .code,
            0);
  EXPECT_TRUE(fs::exists(target + ".map"));
  const CliRun r = Call({"solve", target, "--algo", "exact"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("infeasible"), std::string::npos);
}

TEST_F(CliTest, VerifyReportsClosedHub) {
  Write("bad.hcps", "hcps 1\nopen H2\ntour B1 H1 H1 B2\n");
  const CliRun r = Call({"verify", Data("relay_v2.hcpi"), Path("bad.hcps")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("ClosedHubUsed"), std::string::npos);
  Write("good.hcps", "hcps 1\nopen H1\ntour B1 H1 H1 B2\n");
  EXPECT_EQ(Call({"verify", Data("relay_v2.hcpi"), Path("good.hcps")}).code, 0);
}

TEST_F(CliTest, ReduceSolveLiftVerify) {
  struct Case {
    std::string source;
    std::string to;
  };
  for (const Case& c : std::vector<Case>{{"relay_v2.hcpi", "v1"},
                                         {"chain_v3.hcpi", "v2"},
                                         {"chain_v3.hcpi", "setcover"},
                                         {"chain.setcover", "v3"}}) {
    const std::string target = Path("t_" + c.to);
    ASSERT_EQ(Call({"reduce", Data(c.source), "--to", c.to, "--out", target}).code, 0);
    std::string target_solution = Path("t_" + c.to + ".sol");
    if (c.to == "setcover") {
      Write("pick", "cover 1\nchoose H1\nchoose H3\n");
      target_solution = Path("pick");
    } else {
      ASSERT_EQ(Call({"solve", target, "--out", target_solution}).code, 0) << c.to;
    }
    const std::string lifted = Path("lifted_" + c.to);
    ASSERT_EQ(Call({"lift", target + ".map", target_solution, "--out", lifted}).code,
              0)
        << c.to;
    EXPECT_EQ(Call({"verify", Data(c.source), lifted}).code, 0) << c.to;
  }
}

TEST_F(CliTest, QueensLiftGivesPlacement) {
  Write("board", "queens 1\nn 4\nqueen 1 2\n");
  ASSERT_EQ(Call({"reduce", Path("board"), "--to", "queens-sa2", "--out", Path("t")}).code,
            0);
  ASSERT_EQ(Call({"solve", Path("t"), "--out", Path("t.sol")}).code, 0);
  const CliRun lift = Call({"lift", Path("t.map"), Path("t.sol")});
  ASSERT_EQ(lift.code, 0);
  EXPECT_EQ(lift.out, "placement 1\nn 4\nqueen 1 2\nqueen 2 4\nqueen 3 1\nqueen 4 3\n");
  Write("p", lift.out);
  EXPECT_EQ(Call({"verify", Path("board"), Path("p")}).code, 0);
}

TEST_F(CliTest, GenIsDeterministic) {
  const std::vector<std::string> args = {"gen", "--family", "euclidean-v1", "--seed", "5",
                                         "--branches", "3", "--hubs", "3"};
  const CliRun a = Call(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, Call(args).out);
  EXPECT_EQ(a.out.rfind("hcpi 1\nvariant v1\n", 0), 0u);
}

TEST_F(CliTest, BenchWritesCsv) {
  const CliRun r = Call({"bench", "--family", "bipartite-v3", "--count", "4", "--seed", "2",
                      "--algos", "exact,greedy-v3", "--csv", Path("b.csv"),
                      "--no-wall-time"});
  EXPECT_EQ(r.code, 0);
  const std::string csv = Slurp(Path("b.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
  const CliRun again = Call({"bench", "--family", "bipartite-v3", "--count", "4", "--seed",
                          "2", "--algos", "exact,greedy-v3", "--no-wall-time",
                          "--workers", "3"});
  EXPECT_EQ(again.out, csv);
}

TEST_F(CliTest, UsageAndFormatErrorsExitTwo) {
  EXPECT_EQ(Call({}).code, 2);
  EXPECT_EQ(Call({"solve"}).code, 2);
  EXPECT_EQ(Call({"solve", Data("relay_v2.hcpi"), "--algo", "magic"}).code, 2);
  EXPECT_EQ(Call({"solve", Path("missing.hcpi")}).code, 2);
  Write("broken.hcpi", "hcpi 1\nvariant v9\n");
  const CliRun r = Call({"solve", Path("broken.hcpi")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(Call({"reduce", Data("relay_v2.hcpi"), "--to", "setcover", "--out",
                  Path("x")})
                .code,
            2);
  EXPECT_EQ(Call({"solve", Data("relay_v2.hcpi"), "--algo", "greedy-v3"}).code, 2);
  EXPECT_EQ(Call({"--help"}).code, 0);
}

}  // namespace
}  // namespace hubcover::cli
