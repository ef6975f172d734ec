// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "secsel/cli.hpp"
#include "secsel/dataset.hpp"
#include "secsel/dataset_io.hpp"
#include "secsel/report.hpp"

namespace secsel {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.status = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("secsel_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, BoundsPairsExample) {
  const CliRun r = run({"bounds", "pairs", "--d", "1", "--eps", "0.1", "--l", "3", "--m-sensors", "10",
                     "--p", "0.05"});
  ASSERT_EQ(r.status, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["m"], 496);
  EXPECT_EQ(j["formula"], "pairs-uniform");
  EXPECT_TRUE(j.contains("config"));
  EXPECT_EQ(j["config"]["bounds"]["eps"], 0.1);
}

TEST_F(CliTest, BoundsCoverAndBase) {
  EXPECT_EQ(run({"bounds", "cover", "--d", "1", "--eps", "0.2", "--m-sensors", "10"}).json()["m"], 3103);
  EXPECT_EQ(run({"bounds", "base", "--delta", "0.1", "--m-sensors", "20"}).json()["m"], 843);
}

TEST_F(CliTest, ZeroBudgetIsInvalidArgument) {
  const CliRun r = run({"select", "--objective", "dd", "--gamma", "0.5", "--budget", "0"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.err.rfind("error: invalid-argument: ", 0), 0u) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST_F(CliTest, ParseErrorsAreInvalidArgument) {
  EXPECT_EQ(run({}).status, 1);
  EXPECT_EQ(run({"frobnicate"}).status, 1);
  EXPECT_EQ(run({"bounds", "pairs", "--eps", "abc"}).status, 1);
  EXPECT_EQ(run({"select", "--objective", "dd", "--budget", "2"}).status, 1);  // no gamma
}

TEST_F(CliTest, UnknownConfigKeyIsRejected) {
  std::ofstream(path("bad.json")) << R"({"bounds": {"formula": "base", "nonsense": 3}})";
  const CliRun r = run({"--config", path("bad.json")});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("invalid-argument"), std::string::npos);
}

TEST_F(CliTest, MissingDataIsIoError) {
  const CliRun r = run({"select", "--data", path("nowhere"), "--objective", "dd", "--gamma", "1",
                     "--budget", "1"});
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(r.err.rfind("error: io-error: ", 0), 0u) << r.err;
}

TEST_F(CliTest, GenerateSelectEvaluatePipeline) {
  ASSERT_EQ(run({"generate", "toy", "--out", path("toy"), "--n", "4", "--samples", "200", "--scales",
                 "1,1,2,2", "--seed", "3"})
                .status,
            0);
  const DataSet ds = read_dataset(path("toy"));
  EXPECT_EQ(ds.size(), 200);
  EXPECT_EQ(ds.sensor_count(), 4);

  const CliRun sel = run({"select", "--data", path("toy"), "--objective", "dd", "--gamma", "0.3",
                       "--budget", "2", "--accelerated"});
  ASSERT_EQ(sel.status, 0) << sel.err;
  const Json js = sel.json();
  EXPECT_EQ(js["chosen"].size(), 2u);
  EXPECT_EQ(js["values"].size(), 2u);
  EXPECT_EQ(js["stopped_reason"], "budget");
  EXPECT_EQ(js["objective"], "dd");
  EXPECT_EQ(js["secants"]["count"], 200 * 199 / 2);

  const CliRun cover = run({"select", "--data", path("toy"), "--objective", "sep", "--gamma", "0.05",
                         "--eps", "0.5", "--cover", "--secants", "pairs:2000", "--seed", "4"});
  ASSERT_EQ(cover.status, 0) << cover.err;
  EXPECT_EQ(cover.json()["stopped_reason"], "cover");
  EXPECT_EQ(cover.json()["secants"]["kind"], "sampled-pairs");

  const CliRun ev = run({"evaluate", "--data", path("toy"), "--sensors", "0,1", "--out", path("eval")});
  ASSERT_EQ(ev.status, 0) << ev.err;
  EXPECT_EQ(ev.json()["undetectable_pairs"], 0);
  std::vector<std::string> header;
  const Matrix meas = read_csv(path("eval/measurements.csv"), &header);
  EXPECT_EQ(meas.rows(), 200);
  EXPECT_EQ(header.back(), "theta");

  const CliRun bad = run({"evaluate", "--data", path("toy"), "--sensors", "2,3"});
  ASSERT_EQ(bad.status, 0);
  EXPECT_GT(bad.json()["undetectable_pairs"].get<int>(), 0);
}

TEST_F(CliTest, BaselineAndPcaAndBisect) {
  ASSERT_EQ(run({"generate", "toy", "--out", path("toy"), "--samples", "300", "--scales", "1,1,2,2"})
                .status,
            0);
  for (const char* method : {"qr", "bayes-dopt"}) {
    const CliRun r = run({"baseline", "--data", path("toy"), "--method", method, "--k", "2"});
    ASSERT_EQ(r.status, 0) << r.err;
    std::vector<int> chosen = r.json()["chosen"].get<std::vector<int>>();
    std::sort(chosen.begin(), chosen.end());
    EXPECT_EQ(chosen, (std::vector<int>{2, 3})) << method;
  }
  const CliRun pca = run({"pca", "--data", path("toy"), "--out", path("pca"), "--r", "4"});
  ASSERT_EQ(pca.status, 0) << pca.err;
  EXPECT_TRUE(fs::exists(path("pca/modes.csv")));

  const CliRun b = run({"bisect-l", "--data", path("toy"), "--budget", "2", "--l-lo", "1", "--l-hi", "50",
                     "--secants", "base:20"});
  ASSERT_EQ(b.status, 0) << b.err;
  const Json jb = b.json();
  EXPECT_LE(jb["chosen"].size(), 2u);
  EXPECT_GE(jb["l_upper"].get<double>(), 1.0);
  EXPECT_LE(jb["l_upper"].get<double>(), 50.0);

  const CliRun infeasible = run({"bisect-l", "--data", path("toy"), "--budget", "1", "--l-lo", "1",
                              "--l-hi", "2"});
  EXPECT_EQ(infeasible.status, 2);
  EXPECT_EQ(infeasible.err.rfind("error: budget-infeasible-in-range: ", 0), 0u) << infeasible.err;
}

TEST_F(CliTest, ConfigRoundTripReproducesReport) {
  ASSERT_EQ(run({"generate", "toy", "--out", path("toy"), "--samples", "150"}).status, 0);
  const CliRun first = run({"--threads", "1", "select", "--data", path("toy"), "--objective", "amp",
                         "--lipschitz", "3", "--budget", "2", "--secants", "base:10", "--seed", "9"});
  ASSERT_EQ(first.status, 0) << first.err;
  const Json j = first.json();
  std::ofstream(path("run.json")) << j["config"].dump(2);
  const CliRun second = run({"--config", path("run.json")});
  ASSERT_EQ(second.status, 0) << second.err;
  EXPECT_EQ(second.json(), j);
}

TEST_F(CliTest, ThreadCountDoesNotChangeResults) {
  ASSERT_EQ(run({"generate", "toy", "--out", path("toy"), "--samples", "300"}).status, 0);
  const std::vector<std::string> tail = {"select", "--data", path("toy"), "--objective", "sep",
                                         "--gamma", "0.2", "--eps", "0.5", "--budget", "3"};
  std::vector<std::string> one = {"--threads", "1"}, two = {"--threads", "2"};
  one.insert(one.end(), tail.begin(), tail.end());
  two.insert(two.end(), tail.begin(), tail.end());
  Json a = run(one).json(), b = run(two).json();
  EXPECT_EQ(a["config"]["threads"], 1);
  EXPECT_EQ(b["config"]["threads"], 2);
  a["config"].erase("threads");
  b["config"].erase("threads");
  EXPECT_EQ(a, b);
}

TEST_F(CliTest, ThreadsFallBackToEnvironment) {
  ::setenv("SECSEL_THREADS", "3", 1);
  const Json j = run({"bounds", "base"}).json();
  ::unsetenv("SECSEL_THREADS");
  EXPECT_EQ(j["config"]["threads"], 3);
}

TEST_F(CliTest, DisconnectedIsomapIsRuntimeError) {
  DataSet ds;
  ds.name = "clusters";
  ds.points = Matrix(8, 1);
  ds.points << 0, 0.1, 0.2, 0.3, 100, 100.1, 100.2, 100.3;
  ds.sensors = scalar_sensors(ds.points);
  write_dataset(ds, path("clusters"));
  const CliRun r = run({"isomap", "--data", path("clusters"), "--out", path("emb"), "--k", "2", "--r", "2"});
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(r.err.rfind("error: graph-disconnected: ", 0), 0u) << r.err;
}

TEST_F(CliTest, IsomapWritesEmbedding) {
  ASSERT_EQ(run({"generate", "torus", "--out", path("torus"), "--samples", "300"}).status, 0);
  const CliRun r = run({"isomap", "--data", path("torus"), "--out", path("emb"), "--k", "10", "--r", "5",
                     "--register-sensors"});
  ASSERT_EQ(r.status, 0) << r.err;
  const DataSet emb = read_dataset(path("emb"));
  EXPECT_EQ(emb.target_dim(), 5);
  EXPECT_EQ(emb.sensor_count(), 5);
  EXPECT_TRUE(fs::exists(path("emb/eigenvalues.csv")));
}

TEST_F(CliTest, ReproToy) {
  const CliRun r = run({"repro", "toy"});
  ASSERT_EQ(r.status, 0) << r.err;
  const Json j = r.json();
  auto as_set = [](const Json& v) {
    std::vector<int> s = v.get<std::vector<int>>();
    std::sort(s.begin(), s.end());
    return s;
  };
  EXPECT_EQ(as_set(j["qr"]), (std::vector<int>{2, 3}));
  EXPECT_EQ(as_set(j["bayes_dopt"]), (std::vector<int>{2, 3}));
  EXPECT_EQ(j["undetectable_pairs"]["injective_pair"], 0);
  EXPECT_GT(j["undetectable_pairs"]["harmonic_pair"].get<int>(), 0);
}

TEST_F(CliTest, ReproTorusFindsFundamentalCoordinates) {
  const CliRun r = run({"repro", "torus"});
  ASSERT_EQ(r.status, 0) << r.err;
  const Json j = r.json();
  ASSERT_FALSE(j["chosen"].is_null());
  EXPECT_EQ(j["chosen"].get<std::vector<int>>(), (std::vector<int>{0, 1, 6}));
}

}  // namespace
}  // namespace secsel
