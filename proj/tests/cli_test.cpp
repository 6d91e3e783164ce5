// Copyright 2026 The hullfilter Authors.
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hullfilter/hull.hpp"
#include "hullfilter/point_io.hpp"

namespace hullfilter {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hullfilter_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  /// Runs the CLI with stdout and stderr captured to files; returns the exit
  /// status.
  int run(const std::string& args) {
    const std::string cmd = std::string(HULLFILTER_CLI_PATH) + " " + args + " > " +
                            path("stdout.txt").string() + " 2> " + path("stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string slurp(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, GenerateFilterAndHullAgreeWithLibrary) {
  const auto pts = path("pts.bin").string();
  ASSERT_EQ(run("generate --dist displaced --n 20000 --seed 3 --p 0.1 --precision f32 --out " + pts), 0)
      << slurp("stderr.txt");
  const auto points = read_points<float>(fs::path(pts));
  ASSERT_EQ(points.size(), 20000u);

  ASSERT_EQ(run("filter --in " + pts + " --strategy flagged --stats --out " + path("cand.bin").string()), 0);
  const std::string stats = slurp("stdout.txt");
  EXPECT_NE(stats.find("n_input=20000"), std::string::npos) << stats;
  EXPECT_NE(stats.find("discarded_fraction=0.9"), std::string::npos) << stats;
  const auto candidates = read_points<float>(path("cand.bin"));
  EXPECT_LT(candidates.size(), 2000u);

  ASSERT_EQ(run("hull --in " + pts + " --out " + path("hull.csv").string()), 0);
  ASSERT_EQ(run("hull --in " + pts + " --no-filter --out " + path("hull_nf.bin").string()), 0);
  std::ifstream csv(path("hull.csv"));
  const auto filtered = read_points_csv<float>(csv);
  const auto unfiltered = read_points<float>(path("hull_nf.bin"));
  EXPECT_EQ(filtered, unfiltered);
  EXPECT_EQ(filtered.to_points(), monotone_chain(points).vertices);
}

TEST_F(CliTest, GenerateF64Csv) {
  ASSERT_EQ(run("generate --dist normal --n 100 --seed 1 --precision f64 --out " +
                path("n.csv").string()),
            0);
  std::ifstream in(path("n.csv"));
  EXPECT_EQ(read_points_csv<double>(in).size(), 100u);
  ASSERT_EQ(run("hull --in " + path("n.csv").string() + " --csv-precision f64 --stats --out " +
                path("h.csv").string()),
            0);
  EXPECT_NE(slurp("stdout.txt").find("hull_size="), std::string::npos);
}

TEST_F(CliTest, BenchWritesOneRow) {
  ASSERT_EQ(run("bench --dist normal --n 2000 --strategy copyif --reps 2 --warmups 0 "
                "--baseline seqfilter --csv " + path("b.csv").string()),
            0)
      << slurp("stderr.txt");
  const std::string csv = slurp("b.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
  EXPECT_NE(csv.find("normal,2000,"), std::string::npos);
  EXPECT_NE(csv.find(",copyif,seqfilter,"), std::string::npos);
}

TEST_F(CliTest, Table1WritesSixRows) {
  ASSERT_EQ(run("--threads 2 table1 --n 5000 --seeds 1 --csv " + path("t.csv").string()), 0)
      << slurp("stderr.txt");
  const std::string csv = slurp("t.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
  EXPECT_NE(csv.find("displaced,5000,1,1,0.1000,"), std::string::npos) << csv;
}

TEST_F(CliTest, ErrorsExitNonzeroWithDiagnosticsOnStderr) {
  std::ofstream(path("bad.bin")) << "NOPE and some bytes";
  EXPECT_NE(run("hull --in " + path("bad.bin").string() + " --out " + path("h.bin").string()), 0);
  EXPECT_NE(slurp("stderr.txt").find("magic"), std::string::npos);
  EXPECT_TRUE(slurp("stdout.txt").empty());

  EXPECT_NE(run("filter --in " + path("bad.bin").string() + " --strategy atomic"), 0);
  EXPECT_NE(run("generate --dist displaced --n 10 --p 2 --out " + path("x.bin").string()), 0);
  EXPECT_NE(slurp("stderr.txt").find("p must be"), std::string::npos);
  EXPECT_NE(run("bogus"), 0);
}

}  // namespace
}  // namespace hullfilter
