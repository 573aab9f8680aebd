/* Copyright 2026 The isowein Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Runs the isowein executable and checks reports, exit codes and output files.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

#ifndef ISOWEIN_CLI_PATH
#error "ISOWEIN_CLI_PATH must point at the isowein executable"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult RunCli(const std::string& args) {
  const std::string cmd = std::string(ISOWEIN_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json RunCliJson(const std::string& args, int expected_exit) {
  const RunResult r = RunCli(args);
  EXPECT_EQ(r.exit_code, expected_exit) << args << "\n" << r.out;
  json j = json::parse(r.out, nullptr, false);
  EXPECT_FALSE(j.is_discarded()) << "stdout is not one JSON document:\n" << r.out;
  if (!j.is_discarded()) EXPECT_EQ(j["schema_version"], 1);
  return j;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("isowein_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, EvalLinearProduct) {
  const json j = RunCliJson("eval --surface \"(2*x+1)*(3*y+4)\" --at 0,0", 0);
  EXPECT_EQ(j["command"], "eval");
  EXPECT_EQ(j["surface"], "(2*x+1)*(3*y+4)");
  EXPECT_EQ(j["result"]["K"], -36.0);
  EXPECT_EQ(j["result"]["H"], 0.0);
  EXPECT_TRUE(j["pass"].is_null());
  EXPECT_EQ(j["result"]["jet"]["dxy"], 6.0);
}

TEST_F(CliTest, EvalParabolicSphere) {
  const json j = RunCliJson("eval --surface \"0.5*(x^2+y^2)\" --at 1,1", 0);
  EXPECT_EQ(j["result"]["K"], 1.0);
  EXPECT_EQ(j["result"]["H"], 1.0);
  EXPECT_EQ(j["result"]["h2_minus_k"], 0.0);
  EXPECT_EQ(j["result"]["euler_residual"], 0.0);
}

TEST_F(CliTest, EvalNegativeCoordinates) {
  const json j = RunCliJson("eval --surface \"x*y\" --at=-1,-2", 0);
  EXPECT_EQ(j["result"]["jet"]["v"], 2.0);
}

TEST_F(CliTest, EvalParseError) {
  const json j = RunCliJson("eval --surface \"x +\" --at 0,0", 2);
  EXPECT_EQ(j["error"]["kind"], "ParseError");
  EXPECT_EQ(j["error"]["offset"], 3);
}

TEST_F(CliTest, EvalDomainError) {
  const json j = RunCliJson("eval --surface \"ln(x)\" --at 0,0", 2);
  EXPECT_EQ(j["error"]["kind"], "DomainError");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli("").exit_code, 2);
  EXPECT_EQ(RunCli("eval --surface x").exit_code, 2);
  EXPECT_EQ(RunCli("frobnicate").exit_code, 2);
  EXPECT_EQ(RunCli("eval --surface x --at 1").exit_code, 2);
  EXPECT_EQ(RunCli("scan --surface x --grid 1,5").exit_code, 2);
}

TEST_F(CliTest, ScanLWPass) {
  const json j = RunCliJson("scan --surface \"(2*x+1)*(3*y+4)\" --residual lw --a 0 --b 1 --c -36", 0);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["result"]["n_samples"], 101 * 101);
  EXPECT_EQ(j["tolerances"]["max_abs"], 1e-9);
  EXPECT_EQ(j["params"]["normalized"]["n0"], -36.0);
}

TEST_F(CliTest, ScanEulerFail) {
  const json j = RunCliJson("scan --surface \"x*y\" --residual euler --domain 0,1,0,1", 1);
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["result"]["max_abs"], 4.0);
}

TEST_F(CliTest, ScanJacobianPass) {
  const json j = RunCliJson("scan --surface \"3*(2*y^2+y-1)\" --residual jacobian --grid 21,21", 0);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["tolerances"]["max_abs"], 1e-6);
}

TEST_F(CliTest, ScanDegenerateLWParams) {
  const json j = RunCliJson("scan --surface x --residual lw", 2);
  EXPECT_EQ(j["error"]["kind"], "DegenerateError");
}

TEST_F(CliTest, ScanIsByteStable) {
  const std::string args = "scan --surface \"sin(3*x)*y^2\" --residual lw --a 1 --b 2 --c 3";
  EXPECT_EQ(RunCli(args).out, RunCli(args).out);
}

TEST_F(CliTest, VerifyCaseA) {
  const std::string spec = Write("a.json", R"({"kind":"CaseA","f0":1,"m0":1,"n0":2,"d1":0,"d2":0})");
  const json j = RunCliJson("verify-family --spec " + spec, 0);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["result"]["prediction"]["K_expected"], 0.0);
  EXPECT_EQ(j["result"]["prediction"]["H_expected"], 2.0);
  EXPECT_LE(j["result"]["lw_residual"]["max_abs"].get<double>(), 1e-9);
}

TEST_F(CliTest, VerifyCase31Candidate) {
  const std::string spec = Write(
      "c31.json", R"({"kind":"Case31Candidate","c3":1,"c4":1,"d7":0,"d8":0,"d9":0,"m0":1,"n0":0})");
  const json j = RunCliJson("verify-family --spec " + spec + " --domain 0.5,2,-1,1 --grid 4,2", 0);
  EXPECT_EQ(j["pass"], true);
  EXPECT_GT(j["result"]["lw_residual_in_x"]["std_dev"].get<double>(), 0);
  ASSERT_EQ(j["result"]["samples"].size(), 4u);
  EXPECT_NEAR(j["result"]["samples"][0][1].get<double>(), -5, 1e-12);
  EXPECT_NEAR(j["result"]["samples"][3][1].get<double>(), -2, 1e-12);
}

TEST_F(CliTest, VerifyCase31CandidateSpanningPole) {
  const std::string spec = Write(
      "c31.json", R"({"kind":"Case31Candidate","c3":1,"c4":1,"d7":0,"d8":0,"d9":0,"m0":1})");
  const json j = RunCliJson("verify-family --spec " + spec, 0);
  EXPECT_EQ(j["result"]["lw_residual_in_x"]["n_samples"], 100);
}

TEST_F(CliTest, VerifyMalformedJson) {
  const std::string spec = Write("bad.json", "{\"kind\": \"CaseA\", ");
  const json j = RunCliJson("verify-family --spec " + spec, 2);
  EXPECT_EQ(j["error"]["kind"], "JsonError");
  const std::string unknown = Write("unknown.json", R"({"kind":"CaseQ"})");
  EXPECT_EQ(RunCliJson("verify-family --spec " + unknown, 2)["error"]["kind"], "InvalidSpec");
  EXPECT_EQ(RunCli("verify-family --spec " + (dir_ / "missing.json").string()).exit_code, 2);
}

TEST_F(CliTest, OdeCoshWritesCsv) {
  const std::string csv = (dir_ / "traj.csv").string();
  const json j =
      RunCliJson("ode --rhs eq318 --c5 1 --d10 0 --f0 1 --fp0 0 --t-end 1 --step 1e-3 --out " + csv, 0);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["result"]["oracle"], "linear");
  EXPECT_NEAR(j["result"]["final"]["f"].get<double>(), 1.5430806348, 1e-6);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "t,f,fp");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 1001);
}

TEST_F(CliTest, OdeEq311AgainstClosedForm) {
  const json j = RunCliJson("ode --rhs eq311 --c3 1 --m0 1 --oracle-312 1,2 --t-end 1", 0);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["params"]["f0"], -1.0);
  EXPECT_EQ(j["params"]["fp0"], 0.25);
  EXPECT_LE(j["result"]["max_deviation"].get<double>(), 1e-6);
}

TEST_F(CliTest, OdeDegenerateStart) {
  const json j = RunCliJson("ode --rhs eq311 --c3 1 --m0 1 --f0 -0.5 --fp0 1", 2);
  EXPECT_EQ(j["error"]["kind"], "DegenerateODE");
  EXPECT_EQ(j["error"]["t"], 0.0);
}

TEST_F(CliTest, OdeWithoutOracleHasNullPass) {
  const json j = RunCliJson("ode --rhs eq318 --c5 2 --d10 0.3 --f0 0.5 --fp0 0.1", 0);
  EXPECT_TRUE(j["pass"].is_null());
}

TEST_F(CliTest, MeshParabolicSphere) {
  const std::string obj = (dir_ / "s.obj").string();
  const json j = RunCliJson("mesh --surface \"0.5*(x^2+y^2)\" --grid 3,3 --out " + obj, 0);
  EXPECT_EQ(j["result"]["vertices"], 9);
  EXPECT_EQ(j["result"]["triangles"], 8);
  std::ifstream in(obj);
  int v = 0, f = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) ++f;
  }
  EXPECT_EQ(v, 9);
  EXPECT_EQ(f, 8);
}

TEST_F(CliTest, MeshCase31WithGap) {
  const std::string spec = Write(
      "c31.json", R"({"kind":"Case31Candidate","c3":1,"c4":1,"d7":0,"d8":0,"d9":0,"m0":1})");
  const std::string obj = (dir_ / "c31.obj").string();
  const json j = RunCliJson("mesh --spec " + spec + " --grid 11,11 --exclusion 0.1 --out " + obj, 0);
  EXPECT_LT(j["result"]["vertices"].get<int>(), 121);
  EXPECT_EQ(j["result"]["triangles"], 160);
}

}  // namespace
