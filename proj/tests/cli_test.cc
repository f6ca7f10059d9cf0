// Copyright 2026 The motifclust Authors
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

#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace motifclust::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("motifclust_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  static std::string read(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
  int call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

constexpr const char* kBridged = "0 1\n1 2\n0 2\n2 3\n3 4\n4 5\n3 5\n";

TEST_F(CliTest, ClusterWritesJsonReport) {
  const std::string g = write("g.txt", kBridged);
  ASSERT_EQ(call({"cluster", "--graph", g, "--k", "3", "--method", "psmc",
                  "--out", path("r.json")}),
            kOk);
  const auto j = nlohmann::json::parse(read(path("r.json")));
  EXPECT_EQ(j["dataset"], "g");
  EXPECT_EQ(j["mc"].get<double>(), 0.0);
  EXPECT_EQ(j["size"], 3);
  EXPECT_TRUE(j["wall_ms"].is_null());
  EXPECT_EQ(j["cluster"].size(), 3u);
}

TEST_F(CliTest, ClusterPlusReportsBothConductances) {
  const std::string g = write("g.txt", kBridged);
  ASSERT_EQ(call({"cluster", "--graph", g, "--k", "3", "--method",
                  "psmc-plus"}),
            kOk);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_TRUE(j.contains("mc_estimated"));
  EXPECT_TRUE(j.contains("mc"));
  EXPECT_EQ(j["method"], "psmc-plus");
}

TEST_F(CliTest, ClusterSideOutputs) {
  const std::string g = write("g.txt", kBridged);
  const std::string truth = write("t.txt", "0 1 2\n3 4 5\n");
  ASSERT_EQ(call({"cluster", "--graph", g, "--k", "2", "--format", "csv",
                  "--trace", path("trace.csv"), "--cluster-out",
                  path("c.txt"), "--truth", truth, "--motif-graph",
                  path("w.txt"), "--timing"}),
            kOk);
  EXPECT_EQ(out_.str().substr(0, 8), "dataset,");
  EXPECT_NE(out_.str().find(",psmc,1,7,"), std::string::npos) << out_.str();
  EXPECT_EQ(read(path("trace.csv")).substr(0, 5), "step,");
  EXPECT_FALSE(read(path("c.txt")).empty());
  EXPECT_EQ(read(path("w.txt")).substr(0, 6), "0 1 1\n");
}

TEST_F(CliTest, TimingFillsWallTime) {
  const std::string g = write("g.txt", kBridged);
  ASSERT_EQ(call({"cluster", "--graph", g, "--timing"}), kOk);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_TRUE(j["wall_ms"].is_number());
  EXPECT_TRUE(j["peak_kb"].is_number());
}

TEST_F(CliTest, ErrorExitCodes) {
  const std::string g = write("g.txt", kBridged);
  EXPECT_EQ(call({"cluster", "--graph", g, "--k", "5"}), kNoMotif);
  EXPECT_NE(err_.str().find("no 5-clique"), std::string::npos);
  const std::string bad = write("bad.txt", "0 1\n1 two\n");
  EXPECT_EQ(call({"cluster", "--graph", bad}), kInputError);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);
  EXPECT_EQ(call({"cluster", "--graph", path("missing.txt")}), kInputError);
  EXPECT_EQ(call({"cluster", "--graph", g, "--method", "spectral"}),
            kInputError);
  EXPECT_EQ(call({"cluster", "--graph", g, "--k", "1"}), kInputError);
  EXPECT_EQ(call({"cluster", "--graph", g, "--threads", "0"}), kInputError);
  EXPECT_EQ(call({"cluster", "--bogus"}), kInputError);
  EXPECT_EQ(call({}), kInputError);
  EXPECT_EQ(call({"generate", "--model", "ba", "--n", "3", "--attach", "3"}),
            kInputError);
}

TEST_F(CliTest, OracleSingleGraph) {
  const std::string g = write("g.txt", kBridged);
  ASSERT_EQ(call({"oracle", "--graph", g, "--k", "3"}), kOk);
  EXPECT_NE(out_.str().find("holds true"), std::string::npos);
  EXPECT_NE(out_.str().find("phi_star 0/"), std::string::npos);
}

TEST_F(CliTest, OracleRejectsLargeGraphsAndLimits) {
  std::ostringstream big;
  for (int v = 0; v < 25; ++v) big << v << ' ' << (v + 1) % 25 << '\n';
  const std::string g = write("big.txt", big.str());
  EXPECT_EQ(call({"oracle", "--graph", g, "--k", "2"}), kInputError);
  const std::string small = write("g.txt", kBridged);
  EXPECT_EQ(call({"oracle", "--graph", small, "--limit", "21"}), kInputError);
  EXPECT_EQ(call({"oracle", "--k", "3"}), kInputError);
}

TEST_F(CliTest, OracleBatch) {
  ASSERT_EQ(call({"oracle", "--batch", "100", "--seed", "42"}), kOk);
  const std::string text = out_.str();
  const auto tail = text.substr(text.rfind("# checked"));
  int checked = 0;
  int holds = 0;
  ASSERT_EQ(std::sscanf(tail.c_str(), "# checked %d holds %d", &checked,
                        &holds),
            2);
  EXPECT_GT(checked, 50);
  EXPECT_EQ(holds, checked);
}

TEST_F(CliTest, GenerateEvaluateBounds) {
  ASSERT_EQ(call({"generate", "--model", "planted", "--n", "300",
                  "--communities", "3", "--seed", "7", "--out",
                  path("p.txt")}),
            kOk);
  const std::string truth = read(path("p.txt.truth"));
  EXPECT_EQ(std::count(truth.begin(), truth.end(), '\n'), 3);

  ASSERT_EQ(call({"cluster", "--graph", path("p.txt"), "--k", "3",
                  "--cluster-out", path("c.txt"), "--out", path("r.json")}),
            kOk);
  ASSERT_EQ(call({"evaluate", "--cluster", path("c.txt"), "--truth",
                  path("p.txt.truth"), "--graph", path("p.txt"), "--k", "3"}),
            kOk);
  const auto j = nlohmann::json::parse(out_.str());
  const auto r = nlohmann::json::parse(read(path("r.json")));
  EXPECT_EQ(j["mc_num"], r["mc_num"]);
  EXPECT_EQ(j["mc_den"], r["mc_den"]);
  EXPECT_TRUE(j["f1"].is_number());
  EXPECT_EQ(j["size"], r["size"]);

  ASSERT_EQ(call({"bounds", "--graph", path("p.txt"), "--k", "4"}), kOk);
  EXPECT_EQ(out_.str().substr(0, 33), "vertex,exact,lower,upper,estimate");
}

TEST_F(CliTest, EvaluateRejectsUnknownVertices) {
  const std::string g = write("g.txt", kBridged);
  const std::string c = write("c.txt", "0 1 99\n");
  const std::string t = write("t.txt", "0 1 2\n");
  EXPECT_EQ(call({"evaluate", "--cluster", c, "--truth", t, "--graph", g}),
            kInputError);
}

TEST_F(CliTest, OutputsAreByteIdenticalAcrossRunsAndThreads) {
  ASSERT_EQ(call({"generate", "--model", "plc", "--n", "400", "--attach", "4",
                  "--triangle-p", "0.6", "--seed", "11", "--out",
                  path("g.txt")}),
            kOk);
  const std::string first = read(path("g.txt"));
  ASSERT_EQ(call({"generate", "--model", "plc", "--n", "400", "--attach", "4",
                  "--triangle-p", "0.6", "--seed", "11", "--out",
                  path("g2.txt")}),
            kOk);
  EXPECT_EQ(first, read(path("g2.txt")));

  for (const std::string method : {"psmc", "psmc-plus"}) {
    std::vector<std::string> outputs;
    for (const std::string threads : {"1", "4", "1"}) {
      ASSERT_EQ(call({"cluster", "--graph", path("g.txt"), "--k", "3",
                      "--method", method, "--threads", threads, "--trace",
                      path("trace.csv")}),
                kOk);
      outputs.push_back(out_.str() + read(path("trace.csv")));
    }
    EXPECT_EQ(outputs[0], outputs[1]) << method;
    EXPECT_EQ(outputs[0], outputs[2]) << method;
  }
}

}  // namespace
}  // namespace motifclust::cli
