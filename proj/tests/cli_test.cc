// Copyright 2026 The Ricci Authors
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

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.h"
#include "json.hpp"
#include "ricci/io.h"
#include "support/fixtures.h"

namespace ricci {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ricci_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

// Value column of a curvature CSV.
std::vector<std::string> Values(const std::string& csv) {
  std::vector<std::string> values;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("u,", 0) == 0) continue;
    values.push_back(line.substr(line.rfind(',') + 1));
  }
  return values;
}

TEST_F(CliTest, GenerateSbm) {
  const Outcome o = Invoke({"generate", "sbm", "-l", "10", "-k", "20", "-p", "0.7", "-q", "0.05",
                         "--seed", "1"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  EXPECT_EQ(ParseEdgeListString(o.out).num_vertices(), 200u);
}

TEST_F(CliTest, GenerateEmptyErdosRenyi) {
  const Outcome o = Invoke({"generate", "er", "-n", "5", "-p", "0"});
  ASSERT_EQ(o.code, cli::kExitOk);
  EXPECT_EQ(o.out, "0\n1\n2\n3\n4\n");
}

TEST_F(CliTest, GenerateHbgWritesLabelsAndManifest) {
  const std::string out = Path("hbg.txt");
  const Outcome o = Invoke({"generate", "hbg", "-n", "50", "-p", "0.5", "-q", "0.05", "--seed", "7",
                         "-o", out});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  const Graph g = ReadEdgeListFile(out);
  EXPECT_EQ(g.num_vertices(), 200u);
  const Partition truth = ReadLabelsFile(out + ".labels");
  EXPECT_EQ(truth.num_communities(), 2);
  const auto manifest = nlohmann::json::parse(Slurp(cli::ManifestPath(out)));
  EXPECT_EQ(manifest["command"], "generate");
  EXPECT_EQ(manifest["seeds"][0], 7);
  EXPECT_TRUE(manifest.contains("wall_time_seconds"));
  EXPECT_TRUE(manifest.contains("version"));
}

TEST_F(CliTest, GenerateRejectsBadParameters) {
  EXPECT_EQ(Invoke({"generate", "sbm", "-l", "2", "-k", "3", "-p", "0.1", "-q", "0.5"}).code,
            cli::kExitUsage);
  EXPECT_EQ(Invoke({"generate", "blob", "-n", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(Invoke({"generate", "er", "-p", "0.5"}).code, cli::kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, cli::kExitUsage);
}

TEST_F(CliTest, CurvatureOnWorkedExample) {
  const std::string g = Write("b.txt", fixtures::kWorkedExample);
  const Outcome af = Invoke({"curvature", g, "--method", "afrc", "--max-cycle", "4"});
  ASSERT_EQ(af.code, cli::kExitOk) << af.err;
  EXPECT_NE(af.out.find("\n1,2,0\n"), std::string::npos);
  EXPECT_EQ(af.out, Invoke({"curvature", g, "--method", "afrc4"}).out);
  const Outcome frc = Invoke({"curvature", g, "--method", "frc"});
  EXPECT_NE(frc.out.find("\n1,2,-5\n"), std::string::npos);
  EXPECT_EQ(Invoke({"curvature", g, "--method", "afrc3", "--max-cycle", "4"}).code, cli::kExitUsage);
  EXPECT_EQ(Invoke({"curvature", g, "--method", "afrc", "--max-cycle", "6"}).code, cli::kExitUsage);
}

TEST_F(CliTest, CurvatureJson) {
  const std::string g = Write("b.txt", fixtures::kWorkedExample);
  const Outcome o = Invoke({"curvature", g, "--method", "frc", "--format", "json"});
  ASSERT_EQ(o.code, cli::kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["method"], "FRC");
  EXPECT_EQ(j["edges"][0][2], -5);
}

TEST_F(CliTest, TreeAugmentedEqualsForman) {
  const std::string g = Write("tree.txt", "1 2\n1 3\n3 4\n3 5\n5 6\n");
  EXPECT_EQ(Values(Invoke({"curvature", g, "-m", "afrc3"}).out),
            Values(Invoke({"curvature", g, "-m", "frc"}).out));
}

TEST_F(CliTest, GapOnTwoCliques) {
  std::string edges, labels;
  for (int base : {0, 5}) {
    for (int i = 0; i < 5; ++i) {
      labels += std::to_string(base + i) + " " + std::to_string(base / 5) + "\n";
      for (int j = i + 1; j < 5; ++j) {
        edges += std::to_string(base + i) + " " + std::to_string(base + j) + "\n";
      }
    }
  }
  edges += "4 5\n0 9\n";
  const std::string g = Write("g.txt", edges);
  const std::string l = Write("l.txt", labels);
  const Outcome o = Invoke({"gap", g, "--labels", l, "-m", "afrc3", "--format", "json"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  const double gap = j["gap"];
  EXPECT_GT(gap, 0);
  EXPECT_TRUE(std::isfinite(gap));

  // No between edges: degenerate gap is a data error.
  const std::string lone = Write("lone.txt", "1 2\n2 3\n1 3\n");
  const std::string one = Write("one.txt", "1 0\n2 0\n3 0\n");
  EXPECT_EQ(Invoke({"gap", lone, "--labels", one, "-m", "frc"}).code, cli::kExitData);
}

TEST_F(CliTest, Correlate) {
  const std::string bg = Path("bg.txt");
  ASSERT_EQ(Invoke({"generate", "bg", "-n", "30", "-p", "0.2", "--seed", "3", "-o", bg}).code,
            cli::kExitOk);
  const Outcome o = Invoke({"correlate", bg, "--method-a", "frc", "--method-b", "afrc3",
                         "--format", "json"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  EXPECT_EQ(nlohmann::json::parse(o.out)["pearson"], 1.0);
  const Outcome self = Invoke({"correlate", bg, "--method-a", "orc", "--method-b", "orc",
                            "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(self.out)["pearson"], 1.0);
}

TEST_F(CliTest, DetectTwoDisjointCliques) {
  std::string edges, labels;
  for (int base : {0, 6}) {
    for (int i = 0; i < 6; ++i) {
      labels += std::to_string(base + i) + " " + std::to_string(base / 6) + "\n";
      for (int j = i + 1; j < 6; ++j) {
        edges += std::to_string(base + i) + " " + std::to_string(base + j) + "\n";
      }
    }
  }
  const std::string g = Write("g.txt", edges);
  const std::string l = Write("l.txt", labels);
  for (const char* method : {"frc", "afrc3", "afrc4", "afrc5", "orc"}) {
    const Outcome o = Invoke({"detect", g, "-m", method, "--threshold", "auto", "--labels", l,
                           "--format", "json"});
    ASSERT_EQ(o.code, cli::kExitOk) << o.err;
    EXPECT_EQ(nlohmann::json::parse(o.out)["accuracy"], 1.0) << method;
  }
  const std::string part = Path("part.txt");
  const Outcome csv = Invoke({"detect", g, "-m", "afrc3", "--labels", l, "--partition", part});
  ASSERT_EQ(csv.code, cli::kExitOk);
  EXPECT_NE(csv.out.find("accuracy=1"), std::string::npos);
  EXPECT_EQ(ReadLabelsFile(part).num_communities(), 2);
  EXPECT_EQ(Invoke({"detect", g, "-m", "afrc3", "--threshold", "soon"}).code, cli::kExitUsage);
  EXPECT_EQ(Invoke({"detect", g, "-m", "afrc3", "--direction", "up"}).code, cli::kExitUsage);
}

TEST_F(CliTest, HistogramOfConstantCurvature) {
  // Every edge of a cycle has FRC 0.
  const std::string g = Write("ring.txt", "1 2\n2 3\n3 4\n4 5\n5 1\n");
  const Outcome o = Invoke({"hist", g, "-m", "frc", "--bins", "8"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  int rows = 0;
  std::istringstream in(o.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("lower", 0) == 0) continue;
    ++rows;
    EXPECT_EQ(line.substr(line.rfind(',') + 1), "5");
  }
  EXPECT_EQ(rows, 1);
}

TEST_F(CliTest, HistogramSplitsByLabels) {
  const std::string g = Write("g.txt", "1 2\n2 3\n3 4\n");
  const std::string l = Write("l.txt", "1 0\n2 0\n3 1\n4 1\n");
  const Outcome o = Invoke({"hist", g, "-m", "frc", "--bins", "2", "--labels", l});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  EXPECT_NE(o.out.find("lower,upper,count,within,between"), std::string::npos);
}

TEST_F(CliTest, DataErrors) {
  EXPECT_EQ(Invoke({"curvature", Path("missing.txt"), "-m", "frc"}).code, cli::kExitData);
  const std::string bad = Write("bad.txt", "1 2\n3 x\n");
  const Outcome text = Invoke({"curvature", bad, "-m", "frc"});
  EXPECT_EQ(text.code, cli::kExitData);
  EXPECT_NE(text.err.find("line 2"), std::string::npos);
  const Outcome json = Invoke({"--error-format", "json", "curvature", bad, "-m", "frc"});
  EXPECT_EQ(json.code, cli::kExitData);
  const auto j = nlohmann::json::parse(json.err);
  EXPECT_EQ(j["error"]["exit_code"], 3);
  EXPECT_EQ(j["error"]["line"], 2);
  const std::string loop = Write("loop.txt", "1 2\n2 2\n");
  EXPECT_EQ(Invoke({"curvature", loop, "-m", "frc"}).code, cli::kExitData);
}

TEST_F(CliTest, UsageErrorsInJson) {
  const Outcome o = Invoke({"curvature", "--error-format", "json"});
  EXPECT_EQ(o.code, cli::kExitUsage);
  EXPECT_EQ(nlohmann::json::parse(o.err)["error"]["exit_code"], 2);
}

TEST_F(CliTest, ReplayReproducesOutputs) {
  const std::string g = Path("sbm.txt");
  ASSERT_EQ(Invoke({"generate", "sbm", "-l", "3", "-k", "10", "-p", "0.6", "-q", "0.1", "--seed",
                 "4", "-o", g}).code,
            cli::kExitOk);
  const std::string first_graph = Slurp(g);
  for (const char* method : {"afrc4", "orc"}) {
    const std::string out = Path(std::string("curv_") + method + ".csv");
    ASSERT_EQ(Invoke({"curvature", g, "-m", method, "-o", out}).code, cli::kExitOk);
    const std::string first = Slurp(out);
    fs::remove(out);
    const Outcome again = Invoke({"replay", cli::ManifestPath(out)});
    ASSERT_EQ(again.code, cli::kExitOk) << again.err;
    EXPECT_EQ(Slurp(out), first);
  }
  fs::remove(g);
  ASSERT_EQ(Invoke({"replay", cli::ManifestPath(g)}).code, cli::kExitOk);
  EXPECT_EQ(Slurp(g), first_graph);

  const std::string det = Path("det.json");
  const std::string labels = g + ".labels";
  ASSERT_EQ(Invoke({"detect", g, "-m", "afrc3", "--labels", labels, "--format", "json", "-o", det})
                .code,
            cli::kExitOk);
  const auto manifest = nlohmann::json::parse(Slurp(cli::ManifestPath(det)));
  EXPECT_TRUE(manifest["results"].contains("accuracy"));
  EXPECT_TRUE(manifest["results"].contains("deletion_loop_seconds"));
  auto strip = [](std::string s) {
    auto j = nlohmann::json::parse(s);
    j.erase("wall_time_seconds");
    return j;
  };
  const auto first = strip(Slurp(det));
  ASSERT_EQ(Invoke({"replay", cli::ManifestPath(det)}).code, cli::kExitOk);
  EXPECT_EQ(strip(Slurp(det)), first);

  EXPECT_EQ(Invoke({"replay", Path("nothing.json")}).code, cli::kExitData);
}

TEST_F(CliTest, Version) {
  const Outcome o = Invoke({"--version"});
  EXPECT_EQ(o.code, cli::kExitOk);
  EXPECT_FALSE(o.out.empty());
}

}  // namespace
}  // namespace ricci
