// Copyright 2026 The ipbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
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

#include "cli.hpp"

namespace ipb::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ipbounds");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(IPB_TEST_TMPDIR) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

TEST(Cli, VerifyCleanRunExitsZero) {
  const auto r = run_cli({"verify", "--seed", "42", "--count", "200", "--variants", "all"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("variant,checked,held,violated,min_slack,min_rel_slack\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 180);
}

TEST(Cli, VerifyWritesCsvAndJsonFiles) {
  const auto dir = scratch("verify_files");
  const auto r = run_cli({"verify", "--count", "20", "--variants", "bb:1.2,cor23:sharp", "--csv",
                          (dir / "r.csv").string(), "--json", (dir / "r.json").string(),
                          "--threads", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir / "r.csv"));
  EXPECT_TRUE(fs::exists(dir / "r.json"));
}

// With zero tolerance, equality cases that land a rounding error below
// zero are reported as violations.
TEST(Cli, ZeroToleranceViolationExitsOne) {
  const auto r = run_cli({"verify", "--seed", "42", "--count", "1000", "--variants",
                          "lemma21:sum:sum,bb:4.5", "--tol-abs", "0", "--tol-rel", "0"});
  EXPECT_EQ(r.code, kExitViolation) << r.err;
  EXPECT_EQ(run_cli({"verify", "--count", "5", "--tol-abs=-1"}).code, kExitInvalidInput);
}

TEST(Cli, UnknownFlagExitsTwoWithUsage) {
  const auto r = run_cli({"verify", "--bogus"});
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_NE(r.err.find("--bogus"), std::string::npos);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, SubcommandRequired) {
  EXPECT_EQ(run_cli({}).code, kExitInvalidInput);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitInvalidInput);
}

TEST(Cli, BadFlagValues) {
  EXPECT_EQ(run_cli({"verify", "--variants", "lemma21:nope:max"}).code, kExitInvalidInput);
  EXPECT_EQ(run_cli({"verify", "--n", "5..2"}).code, kExitInvalidInput);
  EXPECT_EQ(run_cli({"verify", "--field", "quaternion"}).code, kExitInvalidInput);
  EXPECT_EQ(run_cli({"verify", "--count", "0"}).code, kExitInvalidInput);
  EXPECT_EQ(run_cli({"verify", "--variants", "bb:4.3:p=0.5"}).code, kExitInvalidInput);
}

TEST(Cli, DemoRemarkPrintsBothOrderings) {
  const auto r = run_cli({"demo-remark"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("1,1,1: A=2.449489742783178 B=2.000000000000000  A > B"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("1,0.5,1: A=1.732050807568877 B=2.000000000000000  B > A"),
            std::string::npos)
      << r.out;
}

TEST(Cli, GenThenCheckFile) {
  const auto dir = scratch("gen");
  auto r = run_cli({"gen", "--seed", "3", "--count", "4", "--out", dir.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (int i = 0; i < 4; ++i) EXPECT_TRUE(fs::exists(dir / ("instance_" + std::to_string(i) + ".json")));

  r = run_cli({"check-file", (dir / "instance_0.json").string(), "--variants", "all"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("variant,status,lhs,rhs,slack\n", 0), 0u);
  EXPECT_EQ(r.out.find("violated"), std::string::npos);

  const auto gram_dir = scratch("gen_gram");
  r = run_cli({"gen", "--seed", "3", "--count", "1", "--as-gram", "--out", gram_dir.string()});
  ASSERT_EQ(r.code, kExitOk);
  std::ifstream in(gram_dir / "instance_0.json");
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_NE(text.find("\"bordered_gram\""), std::string::npos);
  r = run_cli({"check-file", (gram_dir / "instance_0.json").string(), "--variants", "bb:1.2"});
  EXPECT_EQ(r.code, kExitOk);
}

TEST(Cli, CheckFileRejectsBadInput) {
  const auto dir = scratch("bad");
  write(dir / "broken.json", "{ not json");
  EXPECT_EQ(run_cli({"check-file", (dir / "broken.json").string()}).code, kExitInvalidInput);

  write(dir / "indefinite.json",
        R"({"field":"real","mode":"gram","bordered_gram":[[[1,0],[2,0]],[[2,0],[1,0]]]})");
  EXPECT_EQ(run_cli({"check-file", (dir / "indefinite.json").string()}).code,
            kExitInvalidInput);
  EXPECT_EQ(run_cli({"check-file", (dir / "missing.json").string()}).code, kExitInvalidInput);
}

TEST(Cli, CheckFileReportsSkips) {
  const auto dir = scratch("skips");
  write(dir / "e1e1.json",
        R"({"field":"real","mode":"vectors","x":[[1,0]],"y":[[[1,0]],[[1,0]]]})");
  const auto r = run_cli({"check-file", (dir / "e1e1.json").string(), "--variants",
                          "ortho:4.2,bb:1.2,lemma21:max:max"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("ortho:4.2,skipped (orthonormality gate)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("lemma21:max:max,skipped (no coefficient vector)"), std::string::npos);
  EXPECT_NE(r.out.find("bb:1.2,held,2,"), std::string::npos);
}

TEST(Cli, RankAndOptimize) {
  const auto dir = scratch("rank");
  write(dir / "pair.json",
        R"({"field":"real","mode":"vectors","x":[[1,0],[0,0]],)"
        R"("y":[[[1,0],[0,0]],[[0,0],[1,0]]],"coeffs":[[1,0],[2,0]]})");
  auto r = run_cli({"rank", (dir / "pair.json").string(), "--variants",
                    "lemma21:max:max,lemma21:sum:sum,cor23:weak"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("rank,variant,rhs,rel_slack\n1,cor23:weak,5,0\n2,lemma21:sum:sum,5,0\n", 0),
            0u)
      << r.out;

  r = run_cli({"optimize", (dir / "pair.json").string(), "--grid", "1.1,2,8,32", "--csv",
               (dir / "profile.csv").string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("family,exponent,value,at_boundary\nlemma21:holder:*:sum,1.001,", 0), 0u)
      << r.out;
  EXPECT_NE(r.out.find(",true\n"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "profile.csv"));

  EXPECT_EQ(run_cli({"optimize", (dir / "pair.json").string(), "--grid", "0.5,2"}).code,
            kExitInvalidInput);
  EXPECT_EQ(run_cli({"optimize", (dir / "pair.json").string(), "--family", "bb:1.2"}).code,
            kExitInvalidInput);
}

}  // namespace
}  // namespace ipb::cli
