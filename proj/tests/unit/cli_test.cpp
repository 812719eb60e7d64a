// Copyright 2026 The qkolab Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qkolab::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qkolab_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, CodesVerifyPrintsDelta) {
  const auto r =
      invoke({"codes", "verify", "--code", "hadamard", "--n", "10", "--out", path("v.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("delta = 0.5", 0), 0u) << r.out;
  const auto j = nlohmann::json::parse(slurp(path("v.json")));
  EXPECT_EQ(j["delta"], 0.5);
  EXPECT_EQ(j["config"]["n"], 10);
  EXPECT_EQ(j["config"]["command"], "codes verify");
}

TEST_F(CliTest, UnknownFlagIsConfigErrorWithoutOutput) {
  const auto r = invoke({"equality", "--bogus", "1", "--out", path("o.json")});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_FALSE(fs::exists(path("o.json")));
  EXPECT_EQ(invoke({}).code, kExitConfig);
  EXPECT_EQ(invoke({"equality", "--protocol", "psychic"}).code, kExitConfig);
}

TEST_F(CliTest, CapViolationExitsThree) {
  const auto r = invoke({"equality", "--protocol", "quantum", "--n", "12", "--trials", "1"});
  EXPECT_EQ(r.code, kExitCap) << r.err;
}

TEST_F(CliTest, UnwritableOutputExitsOne) {
  const auto r = invoke({"sweep", "--out", path("no/such/dir/x.csv")});
  EXPECT_EQ(r.code, kExitIo);
}

TEST_F(CliTest, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("equality"), std::string::npos);
}

TEST_F(CliTest, ConfigFileMergesUnderCommandLine) {
  {
    std::ofstream f(path("run.cfg"));
    f << "# experiment\nn = 5\ntrials=200\nseed=7\nprotocol=classical\n";
  }
  const auto r = invoke({"equality", "--config", path("run.cfg"), "--n", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["config"]["n"], 3);
  EXPECT_EQ(j["config"]["trials"], 200);
  EXPECT_EQ(j["config"]["protocol"], "classical");
  EXPECT_EQ(j["trials"], 200);
  {
    std::ofstream f(path("bad.cfg"));
    f << "colour=blue\n";
  }
  EXPECT_EQ(invoke({"equality", "--config", path("bad.cfg")}).code, kExitConfig);
  EXPECT_EQ(invoke({"equality", "--config", path("missing.cfg")}).code, kExitConfig);
}

TEST_F(CliTest, ReadConfigFileParsesKeyValues) {
  {
    std::ofstream f(path("a.cfg"));
    f << "  --k = 3 \n\n# note\nsim-mode=sampled\n";
  }
  const auto kv = read_config_file(path("a.cfg"));
  ASSERT_EQ(kv.size(), 2u);
  EXPECT_EQ(kv[0], (std::pair<std::string, std::string>{"k", "3"}));
  EXPECT_EQ(kv[1], (std::pair<std::string, std::string>{"sim-mode", "sampled"}));
}

TEST_F(CliTest, SameSeedSameBytes) {
  const std::vector<std::string> args = {
      "equality", "--protocol", "classical-sim", "--n",    "3", "--trials",
      "200",      "--sim-mode", "sampled",       "--seed", "4"};
  auto a = args;
  a.insert(a.end(), {"--out", path("a.json")});
  auto b = args;
  b.insert(b.end(), {"--out", path("b.json")});
  ASSERT_EQ(invoke(a).code, kExitOk);
  ASSERT_EQ(invoke(b).code, kExitOk);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  auto c = args;
  c[c.size() - 1] = "5";
  EXPECT_NE(invoke(c).out, slurp(path("a.json")));
}

TEST_F(CliTest, FingerprintBuildThenExtract) {
  const auto built = invoke({"fingerprint", "build", "--n", "3", "--x", "110", "--out",
                             path("fp.json"), "--circuit-out", path("fp.qkce")});
  ASSERT_EQ(built.code, kExitOk) << built.err;
  EXPECT_TRUE(fs::exists(path("fp.qkce")));
  EXPECT_EQ(slurp(path("fp.qkce")).substr(0, 4), "QKCE");
  const auto r = invoke({"fingerprint", "extract", "--n", "3", "--state", path("fp.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "exact");
  EXPECT_EQ(j["message"], "110");
  const auto wrong = invoke({"fingerprint", "extract", "--n", "4", "--state", path("fp.json")});
  EXPECT_EQ(wrong.code, kExitConfig);
}

TEST_F(CliTest, SweepDefaultsToCsv) {
  const auto r = invoke({"sweep", "--n-min", "2", "--n-max", "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("protocol,n,q,classical_bits,qubits,ratio,", 0), 0u);
  EXPECT_NE(r.out.find("\r\nclassical-sim,2,3,640,0,"), std::string::npos);
  const auto j = invoke({"sweep", "--n-max", "2", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["rows"].size(), 6u);
}

TEST_F(CliTest, DemonCommands) {
  const auto run1 = invoke({"demon", "run", "--m", "4", "--seed", "2"});
  ASSERT_EQ(run1.code, kExitOk) << run1.err;
  EXPECT_EQ(nlohmann::json::parse(run1.out)["ledger"]["delta_total_bits"], 4);
  const auto multi = invoke({"demon", "multi", "--n", "2", "--eps", "0.0625"});
  ASSERT_EQ(multi.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(multi.out)["entangled"]["delta_total_bits"], 14);
  EXPECT_EQ(invoke({"demon", "multi", "--n", "20", "--mode", "simulated"}).code, kExitCap);
  EXPECT_EQ(invoke({"demon", "background", "--setting", "single"}).code, kExitOk);
}

TEST_F(CliTest, ComplexityReportSubjects) {
  for (const char* subject : {"bell", "hadamard-only", "fingerprint", "haar", "stepwise"}) {
    const auto r = invoke({"complexity", "report", "--subject", subject, "--n", "3", "--q", "3"});
    EXPECT_EQ(r.code, kExitOk) << subject << ": " << r.err;
  }
  const auto csv = invoke({"complexity", "report", "--subject", "observation1", "--n", "5",
                           "--corpus", "52", "--format", "csv"});
  ASSERT_EQ(csv.code, kExitOk);
  EXPECT_EQ(csv.out.rfind("family,x,kcl_x_bits,kcl_ex_bits,", 0), 0u);
}

}  // namespace
}  // namespace qkolab::cli
