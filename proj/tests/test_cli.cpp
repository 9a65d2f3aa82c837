/*
Copyright (c) 2026 The frameness authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "frameness/operator_core.hpp"
#include "json.hpp"

namespace frameness::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FRAMENESS_TEST_DATA_DIR) + "/" + name; }

TEST(CliTest, ReeBellDiagonalIsTight) {
  const Result r = invoke({"ree", "--family", "bell-diagonal", "--p", "0.75"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = json::parse(r.out);
  const double expected = 1.0 - binary_entropy(0.75);
  EXPECT_NEAR(j["upper"].get<double>(), expected, 1e-4);
  EXPECT_NEAR(j["lower"].get<double>(), expected, 1e-4);
  EXPECT_TRUE(j["tight"].get<bool>());
}

TEST(CliTest, ExtremalSu2TwoQubits) {
  const Result r = invoke({"extremal", "--group", "su2", "--qubits", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NEAR(json::parse(r.out)["asymmetry"].get<double>(), 2.0, 1e-8);
}

TEST(CliTest, AsymmetryOfInvariantStateIsZero) {
  const Result r = invoke({"asymmetry", "--group", "u1", "--state", data("invariant_diag4.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["result"]["asymmetry"].get<double>(), 0.0, 1e-10);
  EXPECT_TRUE(j["invariant"].get<bool>());
}

TEST(CliTest, AsymmetryWithChargesAndFiniteGroup) {
  const Result u1 = invoke({"asymmetry", "--group", "u1", "--state", data("uniform4.json"), "--charges", data("charges4.json")});
  ASSERT_EQ(u1.code, kOk) << u1.err;
  EXPECT_NEAR(json::parse(u1.out)["result"]["asymmetry"].get<double>(), 2.0, 1e-10);
  const Result z2 = invoke({"asymmetry", "--group", "finite", "--rep", data("z2.json"), "--state", data("plus.json")});
  ASSERT_EQ(z2.code, kOk) << z2.err;
  EXPECT_NEAR(json::parse(z2.out)["result"]["asymmetry"].get<double>(), 1.0, 1e-10);
}

TEST(CliTest, TwirlDumpsState) {
  const Result r = invoke({"twirl", "--group", "finite", "--rep", data("z2.json"), "--state", data("plus.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(json::parse(r.out)["result"].contains("twirled_state"));
}

TEST(CliTest, OutputEmbedsVersionConfigAndSeed) {
  const Result r = invoke({"verify", "--seed", "17"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["version"], FRAMENESS_VERSION);
  EXPECT_EQ(j["seed"], 17);
  EXPECT_EQ(j["config"]["command"], "verify");
  EXPECT_TRUE(j["all_passed"].get<bool>());

  const Result csv = invoke({"scaling", "--format", "csv", "--copies", "50"});
  ASSERT_EQ(csv.code, kOk) << csv.err;
  EXPECT_EQ(csv.out.rfind("# frameness " FRAMENESS_VERSION, 0), 0u);
  EXPECT_NE(csv.out.find("# seed="), std::string::npos);
  EXPECT_NE(csv.out.find("N,A_bits,model_bits,gap_bits,A_over_N\n"), std::string::npos);
}

TEST(CliTest, IdenticalConfigGivesIdenticalBytes) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "--seed", "5"},
        std::vector<std::string>{"estimate", "--group", "u1", "--state", data("uniform4.json"), "--order", "4"},
        std::vector<std::string>{"ree", "--sweep", "--format", "csv", "--grid", "16"}}) {
    const Result a = invoke(args);
    const Result b = invoke(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(CliTest, EstimateReportsHolevoBound) {
  const Result r = invoke({"estimate", "--group", "finite", "--rep", data("z2.json"), "--state", data("plus.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["best_info"].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(j["A_G"].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(j["ratio"].get<double>(), 1.0, 1e-9);
  EXPECT_TRUE(j.contains("povm"));
}

TEST(CliTest, BoundsFiniteAndSu2) {
  const Result f = invoke({"bounds", "--group", "finite", "--rep", data("z2.json"), "--state", data("plus.json"), "--copies", "3"});
  ASSERT_EQ(f.code, kOk) << f.err;
  EXPECT_TRUE(json::parse(f.out)["all_hold"].get<bool>());
  const Result s = invoke({"bounds", "--group", "su2", "--qubits", "4"});
  ASSERT_EQ(s.code, kOk) << s.err;
  const json j = json::parse(s.out);
  EXPECT_NEAR(j["asymmetry"].get<double>(), std::log2(15.0), 1e-7);
  EXPECT_NEAR(j["exact_bound"].get<double>(), 2 * std::log2(5.0), 1e-12);
}

TEST(CliTest, ReeSweepCsvHasTwentyOneRows) {
  const Result r = invoke({"ree", "--sweep", "--format", "csv", "--grid", "16"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("p,upper,lower,theta,gamma,tight,expected\n"), std::string::npos);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#' && line[0] != 'p') ++rows;
  EXPECT_EQ(rows, 21);
}

TEST(CliTest, WritesOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "frameness_cli_out.json";
  const Result r = invoke({"extremal", "--group", "u1", "--nmax", "3", "--out", path.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_NEAR(json::parse(in)["asymmetry"].get<double>(), 2.0, 1e-10);
  std::filesystem::remove(path);
}

TEST(CliTest, UnknownSubcommandPrintsUsage) {
  const Result r = invoke({"frobnicate"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("unknown subcommand"), std::string::npos);
  EXPECT_NE(r.err.find("asymmetry"), std::string::npos);
  EXPECT_EQ(invoke({}).code, kUsage);
}

TEST(CliTest, ParseErrorsAreUsageErrors) {
  EXPECT_EQ(invoke({"ree", "--p", "1.5"}).code, kUsage);
  EXPECT_EQ(invoke({"asymmetry", "--group", "so3", "--state", data("plus.json")}).code, kUsage);
  EXPECT_EQ(invoke({"asymmetry", "--group", "u1"}).code, kUsage);
  EXPECT_EQ(invoke({"extremal", "--group", "su2"}).code, kUsage);
}

TEST(CliTest, HelpDocumentsCsvColumns) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("N,A_bits,model_bits,gap_bits,A_over_N"), std::string::npos);
}

TEST(CliTest, ValidationFailuresExitTwo) {
  EXPECT_EQ(invoke({"asymmetry", "--group", "u1", "--state", data("bad_trace.json")}).code, kValidationFailure);
  EXPECT_EQ(invoke({"asymmetry", "--group", "u1", "--state", data("malformed.json")}).code, kValidationFailure);
  EXPECT_EQ(invoke({"asymmetry", "--group", "u1", "--state", data("missing.json")}).code, kValidationFailure);
  const Result bad_rep =
      invoke({"asymmetry", "--group", "finite", "--rep", data("z2_nonunitary.json"), "--state", data("plus.json")});
  EXPECT_EQ(bad_rep.code, kValidationFailure);
  EXPECT_NE(bad_rep.err.find("unitarity"), std::string::npos);
  EXPECT_EQ(invoke({"asymmetry", "--group", "finite", "--rep", data("z2.json"), "--state", data("uniform4.json")}).code,
            kValidationFailure);
}

TEST(CliTest, ResourceLimitsExitThree) {
  EXPECT_EQ(invoke({"extremal", "--group", "su2", "--qubits", "14"}).code, kResourceLimit);
  ::setenv("FRAMENESS_MAX_DIM", "8", 1);
  const int code = invoke({"bounds", "--group", "su2", "--qubits", "4"}).code;
  ::unsetenv("FRAMENESS_MAX_DIM");
  EXPECT_EQ(code, kResourceLimit);
}

}  // namespace
}  // namespace frameness::cli
