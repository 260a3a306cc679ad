// Copyright 2026 The cqedgate Authors.
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

#include "cli.hpp"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cqedgate {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("cqedgate_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

const fs::path kGolden = CQEDGATE_GOLDEN_DIR;

TEST(CliGoldenTest, SearchDefaults) {
  const Result r = run_cli({"search"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(kGolden / "search_default.json"));
}

TEST(CliGoldenTest, FidelityTraces) {
  const struct {
    std::vector<std::string> args;
    const char* file;
  } cases[] = {
      {{"trace", "--gate", "u1", "--delta-over-g", "0", "--gt-max", "100", "--samples", "2000"},
       "trace_u1_delta0.csv"},
      {{"trace", "--gate", "u2", "--delta-over-g", "0", "--gt-max", "100", "--samples", "2000"},
       "trace_u2_delta0.csv"},
      {{"trace", "--gate", "u2", "--delta-over-g", "2.353", "--gt-max", "100", "--samples",
        "2000"},
       "trace_u2_delta2.353.csv"},
  };
  for (const auto& c : cases) {
    const Result r = run_cli(c.args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, slurp(kGolden / c.file)) << c.file;
  }
}

TEST(CliTest, SearchFirstRowAndCsvSchema) {
  const Result r = run_cli({"search", "--gate", "u1", "--max-n", "30", "--eps", "0.03",
                            "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header, "gate,m,n,p_star,delta_over_g,gt,epsilon");
  EXPECT_EQ(first.rfind("U1,0,6,", 0), 0u) << first;
  EXPECT_NE(first.find(",37.6991118431,"), std::string::npos) << first;
}

TEST(CliTest, JsonSolutionKeys) {
  const Result r = run_cli({"search", "--gate", "u2", "--max-n", "10"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_FALSE(j.empty());
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.front().items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"gate", "m", "n", "p_star", "delta_over_g", "gt",
                                            "epsilon"}));
  EXPECT_EQ(j.front()["gate"], "U2");
}

TEST(CliTest, GridCsvSchema) {
  const Result vb = run_cli({"map-vb", "--samples", "3", "--v-min", "330", "--v-max", "336",
                             "--b-min", "-0.2", "--b-max", "0.2"});
  ASSERT_EQ(vb.code, 0) << vb.err;
  EXPECT_EQ(vb.out.substr(0, vb.out.find('\n', vb.out.find('\n') + 1) + 1),
            "# x: velocity [m/s], y: bfield [mG], value: fidelity\nx,y,value\n");
  EXPECT_NE(vb.out.find("\n333,0,"), std::string::npos);

  const Result cc =
      run_cli({"map-concurrence", "--samples", "2", "--mean-max", "0.5", "--n-max", "8"});
  ASSERT_EQ(cc.code, 0) << cc.err;
  EXPECT_EQ(cc.out.substr(0, cc.out.find("x,y,value")),
            "# x: mean_photons_plus [photons], y: mean_photons_minus [photons], value: "
            "concurrence\n");
}

TEST(CliTest, EvolveVacuum) {
  const Result r = run_cli({"evolve", "--input-state", "c00", "--g", "1", "--t", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\nc,0,0,1,0\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("atom,n_plus,n_minus,re,im\n"), std::string::npos);
}

TEST(CliTest, EvolveJsonAndCoherentInput) {
  const Result r = run_cli({"evolve", "--input-state", "coherent:0.5,0.5", "--t", "1",
                            "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  double norm2 = 0.0;
  for (const auto& e : j) norm2 += e["re"].get<double>() * e["re"].get<double>() +
                                   e["im"].get<double>() * e["im"].get<double>();
  EXPECT_NEAR(norm2, 1.0, 1e-9);
}

TEST(CliTest, ParseInputState) {
  auto s = cli::parse_input_state("b12");
  EXPECT_FALSE(s.coherent);
  EXPECT_EQ(s.label, (BasisLabel{AtomLevel::b, 1, 2}));
  s = cli::parse_input_state("c,10,3");
  EXPECT_EQ(s.label, (BasisLabel{AtomLevel::c, 10, 3}));
  s = cli::parse_input_state("coherent:0.7,-0.1");
  EXPECT_TRUE(s.coherent);
  EXPECT_DOUBLE_EQ(s.alpha_plus, 0.7);
  EXPECT_DOUBLE_EQ(s.alpha_minus, -0.1);
  for (const char* bad : {"", "d00", "c0", "c,1", "c,-1,0", "coherent:1", "coherent:1,2,3"}) {
    EXPECT_THROW(cli::parse_input_state(bad), InvalidArgument) << bad;
  }
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  const Result unknown_flag = run_cli({"search", "--bogus"});
  EXPECT_EQ(unknown_flag.code, 2);
  EXPECT_NE(unknown_flag.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run_cli({"search", "--gate", "u3"}).code, 2);
  EXPECT_EQ(run_cli({"search", "--max-n", "0"}).code, 2);
  EXPECT_EQ(run_cli({"search", "--help"}).code, 0);

  const Result trunc = run_cli({"map-concurrence", "--mean-max", "2", "--n-max", "8"});
  EXPECT_EQ(trunc.code, 1);
  EXPECT_NE(trunc.err.find("need n_max >= 12"), std::string::npos) << trunc.err;

  const Result coarse =
      run_cli({"evolve", "--input-state", "c11", "--t", "50", "--dt", "0.5"});
  EXPECT_EQ(coarse.code, 1);
  EXPECT_NE(coarse.err.find("norm drift"), std::string::npos);
}

TEST(CliTest, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> invocations = {
      {"search", "--format", "csv"},
      {"trace", "--gate", "u2", "--samples", "300", "--engine", "analytic"},
      {"map-vb", "--samples", "4"},
      {"map-concurrence", "--samples", "3", "--mean-max", "0.5", "--format", "json"},
      {"evolve", "--input-state", "coherent:0.3,0.6", "--delta-plus", "0.2", "--t", "4"},
  };
  for (const auto& args : invocations) {
    const Result first = run_cli(args);
    ASSERT_EQ(first.code, 0) << args.front() << ": " << first.err;
    EXPECT_EQ(first.out, run_cli(args).out) << args.front();
  }
  // Threading must not leak into the output.
  EXPECT_EQ(run_cli({"map-vb", "--samples", "4", "--threads", "1"}).out,
            run_cli({"map-vb", "--samples", "4", "--threads", "3"}).out);
}

TEST(CliProcessTest, OutputDirectoryOverrideAndDeterminism) {
  const fs::path dir = scratch_dir("outdir");
  const std::string cmd = std::string("CQEDGATE_OUTPUT_DIR=") + dir.string() + " " +
                          CQEDGATE_CLI_PATH + " search -o ";
  ASSERT_EQ(std::system((cmd + "a.json").c_str()), 0);
  ASSERT_EQ(std::system((cmd + "sub/b.json").c_str()), 0);
  EXPECT_EQ(slurp(dir / "a.json"), slurp(kGolden / "search_default.json"));
  EXPECT_EQ(slurp(dir / "a.json"), slurp(dir / "sub" / "b.json"));
  const int status = std::system((std::string(CQEDGATE_CLI_PATH) + " nosuch 2>/dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

}  // namespace
}  // namespace cqedgate
