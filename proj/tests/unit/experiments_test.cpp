// Copyright 2026 The trotterz Authors
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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <openssl/sha.h>

#include "json.hpp"
#include "trotterz/experiments.hpp"

namespace trotterz {
namespace {

namespace fs = std::filesystem;

std::string sha256_oracle(const std::string& s) {
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(s.data()), s.size(), md);
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (unsigned char c : md) {
    out += kHex[c >> 4];
    out += kHex[c & 15];
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("trotterz_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void write(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

TEST(QubitsSaved, Rows) {
  Artifacts a = cmd_qubits_saved(R"({"n_majorana": [4, 8, 16]})");
  EXPECT_EQ(a.file("qubits_saved.csv"),
            "n_majorana,gamma,saved,this_method_ancillas,n_qubits,simulated_width\n"
            "4,1,0,1,2,6\n"
            "8,70,7,1,4,10\n"
            "16,1820,11,1,8,18\n");
  EXPECT_THROW(cmd_qubits_saved(R"({"n_majorana": [5]})"), ConfigError);
  EXPECT_THROW(cmd_qubits_saved(R"({"n_majoranas": [8]})"), ConfigError);
}

TEST(Model, Types) {
  EXPECT_EQ(model_from_json(R"({"type": "syk", "n_majorana": 8, "seed": 7})").n_qubits, 4u);
  EXPECT_NEAR(model_from_json(R"({"type": "random", "n_qubits": 3, "terms": 5, "seed": 1})").one_norm, 1.0, 1e-15);
  HamiltonianTerms p = model_from_json(
      R"({"type": "pauli", "hamiltonian": {"n_qubits": 1, "terms": [{"coeff": 2.0, "pauli": "Z"}]}})");
  EXPECT_DOUBLE_EQ(p.one_norm, 2.0);
  EXPECT_THROW(model_from_json(R"({"type": "syk", "n_majorana": 8, "extra": 1})"), ConfigError);
  EXPECT_THROW(model_from_json(R"({"type": "lattice"})"), ConfigError);
  EXPECT_THROW(model_from_json("[1]"), ConfigError);
}

TEST(TrotterOrder, SlopesNearOrder) {
  Artifacts a = cmd_trotter_order(R"({"model": {"type": "random", "n_qubits": 3, "terms": 6, "seed": 2}})");
  EXPECT_TRUE(a.failures.empty());
  std::istringstream fits(a.file("trotter_fits.csv"));
  std::string line;
  std::getline(fits, line);
  EXPECT_EQ(line, "order,slope,r_squared,alpha");
  int rows = 0;
  while (std::getline(fits, line)) {
    int p = std::stoi(line.substr(0, line.find(',')));
    double slope = std::stod(line.substr(line.find(',') + 1));
    EXPECT_NEAR(slope, p, p == 4 ? 0.2 : 0.1);
    ++rows;
  }
  EXPECT_EQ(rows, 3);
}

TEST(LwfConvergence, PositiveSlopesAndMonotoneRows) {
  Artifacts a = cmd_lwf_convergence(R"({"betas": [1]})");
  EXPECT_TRUE(a.failures.empty());
  std::istringstream rows(a.file("lwf_convergence.csv"));
  std::string line;
  std::getline(rows, line);
  EXPECT_EQ(line, "expansion_type,beta,delta,M_or_K,sup_error");
  double prev = INFINITY;
  while (std::getline(rows, line)) {
    if (line.rfind("lwf,", 0) != 0) continue;
    double err = std::stod(line.substr(line.rfind(',') + 1));
    EXPECT_LE(err, prev);
    prev = err;
  }
  std::istringstream fits(a.file("lwf_fits.csv"));
  std::getline(fits, line);
  std::getline(fits, line);
  ASSERT_EQ(line.rfind("lwf,", 0), 0u);
  double r2 = std::stod(line.substr(line.rfind(',') + 1));
  EXPECT_GE(r2, 0.95);
}

TEST(Pipeline, ConfigErrors) {
  EXPECT_THROW(cmd_pipeline(R"({"beta": 1, "colour": 2})"), ConfigError);
  EXPECT_THROW(cmd_pipeline(R"({"m_cheb": 1})"), ConfigError);
  EXPECT_THROW(cmd_pipeline(R"({"iqae": {"shots": 10, "bogus": 1}})"), ConfigError);
  EXPECT_THROW(cmd_pipeline(R"({"beta": "hot"})"), ConfigError);
}

TEST(Pipeline, SingleTermSmokeModel) {
  Artifacts a = cmd_pipeline(
      R"({"model": {"type": "pauli", "hamiltonian": {"n_qubits": 2, "terms": [{"coeff": 0.5, "pauli": "XY"}]}},
          "beta": 1.0, "m_cheb": 4})");
  auto j = nlohmann::json::parse(a.file("partition_result.json"));
  EXPECT_NEAR(j["extrapolated"].get<double>(), j["oracle"].get<double>(), 1e-12);
}

TEST(Pipeline, SykFixtureRegression) {
  Artifacts a = cmd_pipeline(
      R"({"model": {"type": "syk", "n_majorana": 8, "seed": 7}, "beta": 2.0, "t": 2.0, "m_cheb": 8})");
  auto j = nlohmann::json::parse(a.file("partition_result.json"));
  // recorded from the first run
  EXPECT_NEAR(j["extrapolated"].get<double>(), 1.047671956370946, 1e-10);
  EXPECT_NEAR(j["oracle"].get<double>(), 1.0476719563733037, 1e-10);
}

TEST(RunCommand, WritesArtifactsAndManifest) {
  TempDir dir;
  write(dir.path() / "c.json", R"({"beta": 2.0, "t": 1.0, "m_cheb": 4, "mode": "sampled", "seed": 3})");
  std::ostringstream log;
  int rc = run_command("pipeline", (dir.path() / "c.json").string(), (dir.path() / "out").string(), {}, log);
  ASSERT_EQ(rc, kExitOk) << log.str();
  auto manifest = nlohmann::json::parse(slurp(dir.path() / "out" / "manifest.json"));
  EXPECT_EQ(manifest["master_seed"].get<std::uint64_t>(), 3u);
  EXPECT_EQ(manifest["config_sha256"].get<std::string>(), sha256_oracle(slurp(dir.path() / "c.json")));
  EXPECT_EQ(manifest["artifacts"].size(), 3u);
  for (const auto& f : manifest["artifacts"]) {
    std::string content = slurp(dir.path() / "out" / f["path"].get<std::string>());
    EXPECT_EQ(f["sha256"].get<std::string>(), sha256_oracle(content));
    EXPECT_EQ(f["bytes"].get<std::size_t>(), content.size());
  }
}

TEST(RunCommand, DeterministicAcrossInvocations) {
  TempDir dir;
  write(dir.path() / "c.json", R"({"beta": 1.0, "t": 1.0, "m_cheb": 4, "mode": "sampled"})");
  std::ostringstream log;
  Overrides ov;
  ov.seed = 77;
  ASSERT_EQ(run_command("pipeline", (dir.path() / "c.json").string(), (dir.path() / "a").string(), ov, log), 0);
  ASSERT_EQ(run_command("pipeline", (dir.path() / "c.json").string(), (dir.path() / "b").string(), ov, log), 0);
  for (const char* f : {"partition_result.json", "nodes.csv", "node_records.jsonl"})
    EXPECT_EQ(slurp(dir.path() / "a" / f), slurp(dir.path() / "b" / f)) << f;
  ov.seed = 78;
  ASSERT_EQ(run_command("pipeline", (dir.path() / "c.json").string(), (dir.path() / "c").string(), ov, log), 0);
  EXPECT_NE(slurp(dir.path() / "a" / "nodes.csv"), slurp(dir.path() / "c" / "nodes.csv"));
}

TEST(RunCommand, ExitCodes) {
  TempDir dir;
  std::ostringstream log;
  write(dir.path() / "bad.json", R"({"beta": 1.0, "unknown": true})");
  EXPECT_EQ(run_command("pipeline", (dir.path() / "bad.json").string(), (dir.path() / "o1").string(), {}, log),
            kExitConfig);
  auto err = nlohmann::json::parse(slurp(dir.path() / "o1" / "error.json"));
  EXPECT_EQ(err["exit_code"].get<int>(), kExitConfig);
  EXPECT_EQ(run_command("pipeline", (dir.path() / "missing.json").string(), (dir.path() / "o2").string(), {}, log),
            kExitConfig);
  EXPECT_EQ(run_command("nope", "", (dir.path() / "o3").string(), {}, log), kExitConfig);
  // gqsp mode with a step too large for the signal map
  write(dir.path() / "big.json", R"({"beta": 1.0, "t": 3.0, "m_cheb": 2, "mode": "gqsp"})");
  EXPECT_EQ(run_command("pipeline", (dir.path() / "big.json").string(), (dir.path() / "o4").string(), {}, log),
            kExitNumeric);
  auto e4 = nlohmann::json::parse(slurp(dir.path() / "o4" / "error.json"));
  EXPECT_NE(e4["message"].get<std::string>().find("node 0"), std::string::npos);
  EXPECT_EQ(run_command("qubits-saved", "", (dir.path() / "o5").string(), {}, log), kExitOk);
  EXPECT_TRUE(fs::exists(dir.path() / "o5" / "qubits_saved.csv"));
}

TEST(Manifest, Fields) {
  Artifacts a;
  a.files.emplace_back("x.csv", "a,b\n1,2\n");
  a.master_seed = 9;
  auto m = nlohmann::json::parse(build_manifest("qubits-saved", "{}", a, "t0", "t1"));
  EXPECT_EQ(m["format_version"].get<int>(), kFormatVersion);
  EXPECT_EQ(m["code_version"].get<std::string>(), TROTTERZ_VERSION);
  EXPECT_EQ(m["artifacts"][0]["sha256"].get<std::string>(), sha256_oracle("a,b\n1,2\n"));
  EXPECT_EQ(m["started_utc"].get<std::string>(), "t0");
}

}  // namespace
}  // namespace trotterz
