// Copyright 2026 The zzcode Authors
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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "zzcode_cli/cli.hpp"

namespace zzcode::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("zzcode_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), {"zzcode", "--out", dir_.string(), "--data-dir", ZZCODE_TEST_DATA_DIR});
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  json read_json(const std::string& name) {
    std::ifstream in(dir_ / name);
    return json::parse(in);
  }

  std::string read_text(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path write_fixture(const std::string& text) {
    const fs::path p = dir_ / "fixture.txt";
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
};

TEST_F(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"capacity", "2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"capacity", "0", "1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"code", "build", "fig2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"experiment", "sx1", "--corrected", "--uncorrected"}).code, kExitUsage);
}

TEST_F(Cli, VerifyTablePasses) {
  const Outcome o = run_cli({"verify", "table", "--phi", "0,0.449,1.571,3.1416"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  const json r = read_json("verify_table.json");
  EXPECT_EQ(r["schema"], 1);
  EXPECT_EQ(r["rows"].size(), 16u);
  EXPECT_EQ(r["phis"].size(), 4u);
  EXPECT_DOUBLE_EQ(r["tolerances"]["operator_equality"].get<double>(), 1e-10);
  for (const json& row : r["rows"]) EXPECT_TRUE(row["pass"].get<bool>()) << row["row"];
}

TEST_F(Cli, CorruptedFixtureRowIsNamed) {
  std::ifstream in(std::string(ZZCODE_TEST_DATA_DIR) + "/table_fixture.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  const std::size_t row = text.find("row YX\n");
  const std::size_t cell = text.find("decoded", row);
  text.replace(text.find("+0.5", cell), 4, "-0.5");
  const Outcome o = run_cli({"verify", "table", "--fixtures", write_fixture(text).string()});
  EXPECT_EQ(o.code, kExitCheckFailed);
  EXPECT_NE(o.err.find("row YX"), std::string::npos) << o.err;
  EXPECT_EQ(o.err.find("row XX"), std::string::npos) << o.err;
}

TEST_F(Cli, MissingOrBrokenFixturesExitTwo) {
  EXPECT_EQ(run_cli({"verify", "table", "--fixtures", (dir_ / "none.txt").string()}).code, kExitMissingFixtures);
  EXPECT_EQ(run_cli({"verify", "table", "--fixtures", write_fixture("row XI\nbogus\n").string()}).code,
            kExitMissingFixtures);
  EXPECT_EQ(run_cli({"verify", "table", "--fixtures",
                     write_fixture("row II\ninitial +0.5 III +0.5 IIZ\nend\n").string()})
                .code,
            kExitMissingFixtures);
  EXPECT_EQ(run_cli({"verify", "pulses", "--system", (dir_ / "none.json").string()}).code, kExitMissingFixtures);
  EXPECT_EQ(run_cli({"experiment", "sx1", "--system", (dir_ / "none.json").string()}).code, kExitMissingFixtures);
}

TEST_F(Cli, VerifyCodesWithRandomAncillas) {
  const Outcome o = run_cli({"verify", "codes", "--code", "fig3", "--random-ancilla", "20"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  const json r = read_json("verify_codes.json");
  ASSERT_EQ(r["codes"].size(), 1u);
  EXPECT_EQ(r["codes"][0]["random_ancillas"], 20);
  EXPECT_LT(r["codes"][0]["ancilla_flip_deviation"].get<double>(), 1e-10);
}

TEST_F(Cli, VerifyAllCodesIsDeterministic) {
  ASSERT_EQ(run_cli({"--seed", "5", "verify", "codes"}).code, kExitOk);
  const std::string first = read_text(dir_ / "verify_codes.json");
  ASSERT_EQ(run_cli({"--seed", "5", "verify", "codes"}).code, kExitOk);
  EXPECT_EQ(read_text(dir_ / "verify_codes.json"), first);
  EXPECT_EQ(json::parse(first)["codes"].size(), 5u);
}

TEST_F(Cli, VerifyPulses) {
  const Outcome o = run_cli({"verify", "pulses", "--phi", "0,0.5,1.0,2.0,3.14159"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  const json r = read_json("verify_pulses.json");
  EXPECT_LT(r["pipeline_max_deviation"].get<double>(), 1e-8);
  EXPECT_LT(r["refocused_max_deviation"].get<double>(), 1e-10);
}

TEST_F(Cli, CapacityPrintsJson) {
  Outcome o = run_cli({"capacity", "2", "1"});
  ASSERT_EQ(o.code, kExitOk);
  json r = json::parse(o.out);
  EXPECT_EQ(r["min_ancillae"], 4);
  EXPECT_EQ(r["error_count"], 16);
  o = run_cli({"capacity", "1", "99", "--nspins", "5"});
  EXPECT_EQ(json::parse(o.out)["error_count"], 16);
  o = run_cli({"capacity", "2", "2"});
  EXPECT_EQ(json::parse(o.out)["min_ancillae"], 8);
}

TEST_F(Cli, CodeBuildEmitsOneBasedRecords) {
  for (const char* name : {"fig1", "fig3", "fig4", "fig5", "first6"}) {
    const std::string file = std::string(name) + ".json";
    ASSERT_EQ(run_cli({"code", "build", name, "--emit", file}).code, kExitOk) << name;
    const json r = read_json(file);
    EXPECT_EQ(r["schema"], 1);
    EXPECT_EQ(r["code"], name);
    EXPECT_GE(r["data_spins"][0].get<int>(), 1);
    EXPECT_FALSE(r["encoder"].empty());
  }
  const json fig1 = read_json("fig1.json");
  EXPECT_EQ(fig1["ancilla_spins"], json::array({3}));
  EXPECT_EQ(fig1["correction"][0]["control"], 3);
  EXPECT_EQ(read_json("fig3.json")["required_ancilla_state"], "arbitrary");
  const Outcome printed = run_cli({"code", "build", "fig5"});
  EXPECT_EQ(json::parse(printed.out)["nspins"], 2);
}

TEST_F(Cli, ExperimentOutputs) {
  ASSERT_EQ(run_cli({"experiment", "sx1", "--uncorrected"}).code, kExitOk);
  const json un = read_json("peaks_sx1_uncorrected.json");
  bool cross = false;
  for (const json& p : un["peaks"]) cross = cross || std::abs(std::abs(p["f1_hz"].get<double>()) - 27.1) < 1.0;
  EXPECT_TRUE(cross);
  EXPECT_FALSE(un["suppression"]["suppressed"].get<bool>());

  ASSERT_EQ(run_cli({"experiment", "sx1", "--corrected"}).code, kExitOk);
  EXPECT_TRUE(read_json("peaks_sx1_corrected.json")["suppression"]["suppressed"].get<bool>());
  EXPECT_TRUE(fs::exists(dir_ / "spectrum_sx1_corrected.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "slice_sx1_corrected.csv"));

  ASSERT_EQ(run_cli({"experiment", "sx1sz2"}).code, kExitOk);
  EXPECT_EQ(read_json("peaks_sx1sz2_corrected.json")["slice_phase"], "antiphase");
}

TEST_F(Cli, OutputDirectoryFromEnvironment) {
  ::setenv("ZZCODE_OUT_DIR", dir_.string().c_str(), 1);
  const char* argv[] = {"zzcode", "--data-dir", ZZCODE_TEST_DATA_DIR, "verify", "pulses"};
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run(5, argv, out, err), kExitOk);
  ::unsetenv("ZZCODE_OUT_DIR");
  EXPECT_TRUE(fs::exists(dir_ / "verify_pulses.json"));
}

}  // namespace
}  // namespace zzcode::cli
