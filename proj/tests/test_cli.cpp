// Copyright 2026 The uqlab Authors
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

// Drives the built uqlab executable as a subprocess.

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "uqlab/report.hpp"
#include "uqlab/serialize.hpp"

namespace uq {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome invoke(const std::string& args) {
  const std::string cmd = std::string(UQLAB_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("uqlab-cli-" + std::to_string(getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(Cli, ClassicalVerdictsAndExitCodes) {
  const auto ok = invoke("check-classical --gen parity --n 4 --k 3");
  ASSERT_EQ(ok.code, 0);
  EXPECT_EQ(json::parse(ok.out)["result"]["verdict"], "useless");

  const auto bad = invoke("check-classical --gen parity --n 4 --k 4 --csv " + path("r.csv"));
  ASSERT_EQ(bad.code, 1);
  const auto report = json::parse(bad.out)["result"];
  EXPECT_EQ(report["verdict"], "not useless");
  EXPECT_EQ(report["witness"]["transcript"], json({{1, 0}, {2, 0}, {3, 0}, {4, 0}}));
  std::ifstream csv(path("r.csv"));
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "problem,k,verdict,deviation,witness");
}

TEST_F(Cli, Bound) {
  const auto r = invoke("bound --gen shamir --p 5 --k 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["result"]["quantum_lower_bound"], 2);
}

TEST_F(Cli, ProblemFileAndAliases) {
  ASSERT_EQ(invoke("problem gen --gen image-parity --out " + path("P.json")).code, 0);
  const auto c = invoke("useless classical --problem " + path("P.json") + " --k 2");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(json::parse(c.out)["result"]["problem"], "P");
  const auto q = invoke("useless quantum --problem " + path("P.json") + " --queries 1 --trials 10 --seed 3");
  ASSERT_EQ(q.code, 0);
  EXPECT_LT(json::parse(q.out)["result"]["max_deviation"].get<double>(), 1e-8);
  EXPECT_EQ(json::parse(invoke("useless bound --problem " + path("P.json")).out)["result"]["max_useless_k"], 2);
  const auto dump = invoke("problem dump --problem " + path("P.json"));
  ASSERT_EQ(dump.code, 0);
  EXPECT_EQ(json::parse(dump.out)["result"]["part_priors"]["0"], "2/3");
}

TEST_F(Cli, QuantumFalsifiedWithGallerySeed) {
  const auto r = invoke("check-quantum --gen parity --n 2 --queries 1 --trials 5 --include-gallery");
  EXPECT_EQ(r.code, 1);
  EXPECT_GE(json::parse(r.out)["result"]["max_deviation"].get<double>(), 0.4);
}

TEST_F(Cli, GallerySimulateCompileAudit) {
  ASSERT_EQ(invoke("gallery emit --name deutsch --out " + path("A.json")).code, 0);
  const auto sim = invoke("simulate --alg " + path("A.json") + " --gen parity --n 2");
  ASSERT_EQ(sim.code, 0);
  EXPECT_NEAR(json::parse(sim.out)["result"]["success_probability"].get<double>(), 1.0, 1e-9);

  const auto comp = invoke("compile --alg " + path("A.json") + " --accept 0 --out " + path("C.json") +
                           " --certificate " + path("cert.csv"));
  ASSERT_EQ(comp.code, 0);
  const auto compiled = read_json_file(path("C.json"));
  EXPECT_NEAR(compiled["T"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(compiled["terms"][0]["S"], json({1, 2}));
  EXPECT_TRUE(fs::exists(path("cert.csv")));

  const auto audit = invoke("audit --alg " + path("A.json") + " --accept 0 --gen parity --n 2");
  ASSERT_EQ(audit.code, 0);
  const auto a = json::parse(audit.out)["result"];
  EXPECT_FALSE(a["hypothesis_2k_classical_useless"].get<bool>());
  EXPECT_FALSE(a["identity_holds"].get<bool>());
}

TEST_F(Cli, UsageAndInputErrors) {
  EXPECT_EQ(invoke("").code, 2);
  EXPECT_EQ(invoke("frobnicate").code, 2);
  EXPECT_EQ(invoke("check-classical --gen parity --n 4").code, 2);
  EXPECT_EQ(invoke("check-classical --gen parity --n 13 --k 1").code, 2);
  EXPECT_EQ(invoke("check-classical --gen parity --n 12 --k 8").code, 2);
  EXPECT_EQ(invoke("check-classical --gen parity --n 4 --k 2 --max-transcripts 5").code, 2);
  std::ofstream(path("bad.json")) << "{not json";
  EXPECT_EQ(invoke("bound --problem " + path("bad.json")).code, 2);
  std::ofstream(path("wrong.json")) << R"({"domain_size": 1, "group": [2], "functions": [[0]], "labels": [0],
                                          "prior": [[1, 2]]})";
  EXPECT_EQ(invoke("bound --problem " + path("wrong.json")).code, 2);
}

TEST_F(Cli, ReproduceIsDeterministic) {
  const auto a = invoke("reproduce --only shamir,image-parity --seed 11 --out " + path("r1.json"));
  const auto b = invoke("reproduce --only shamir,image-parity --seed 11 --out " + path("r2.json"));
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  const auto r1 = read_json_file(path("r1.json"));
  const auto r2 = read_json_file(path("r2.json"));
  EXPECT_EQ(payload_of(r1).dump(), payload_of(r2).dump());
  EXPECT_EQ(r1["result"]["criteria"].size(), 2u);
  EXPECT_TRUE(r1["result"]["all_pass"].get<bool>());
}

TEST_F(Cli, SeedFromEnvironment) {
  setenv("UQLAB_SEED", "123", 1);
  const auto r = invoke("check-quantum --gen parity --n 3 --trials 2");
  unsetenv("UQLAB_SEED");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["config"]["seed"], 123);
}

}  // namespace
}  // namespace uq
