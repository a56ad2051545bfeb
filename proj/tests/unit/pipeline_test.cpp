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

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trotterz/errors.hpp"
#include "trotterz/hamiltonian.hpp"
#include "trotterz/pipeline.hpp"
#include "trotterz/syk.hpp"

namespace trotterz {
namespace {

HamiltonianTerms syk8() { return normalize_one_norm(build_syk_hamiltonian(sample_syk(8, 7))).hamiltonian; }

TEST(ExactPartition, ClosedForms) {
  HamiltonianTerms z = make_hamiltonian(1, {{1.0, PauliString::parse("Z")}});
  EXPECT_NEAR(exact_partition(z, 1.0), std::cosh(1.0), 1e-15);
  EXPECT_NEAR(exact_partition(z, 1.0), 1.5430806348152437, 1e-15);
  EXPECT_EQ(exact_partition(syk8(), 0.0), 1.0);
}

TEST(ExactPartition, MatchesTaylorOracle) {
  HamiltonianTerms h = random_pauli_model(3, 6, 4);
  for (double beta : {0.3, 1.0, 3.0})
    EXPECT_NEAR(exact_partition(h, beta), oracle::partition(hamiltonian_dense(h), beta),
                1e-12 * exact_partition(h, beta));
}

TEST(ExactPartition, SykRegression) {
  // recorded from the first run; SYK n_majorana = 8, seed 7, unit one-norm
  EXPECT_NEAR(exact_partition(syk8(), 2.0), 1.0476719563733037, 1e-12);
}

TEST(ExactPartition, CapEnforced) {
  HamiltonianTerms h = make_hamiltonian(13, {{1.0, PauliString::parse("ZIIIIIIIIIIII")}});
  EXPECT_THROW(exact_partition(h, 1.0), CapExceeded);
}

TEST(Config, Validation) {
  PipelineConfig c;
  EXPECT_NO_THROW(c.validate());
  c.t = 4.0;
  EXPECT_THROW(c.validate(), InvalidArgument);
  c = PipelineConfig{};
  c.m_cheb = 1;
  EXPECT_THROW(c.validate(), InvalidArgument);
  c = PipelineConfig{};
  c.eps_stat = 1.0;
  EXPECT_THROW(c.validate(), InvalidArgument);
  c = PipelineConfig{};
  c.order = 3;
  EXPECT_THROW(c.validate(), InvalidArgument);
  EXPECT_EQ(trace_mode_from_string("ideal-w"), TraceMode::kIdealW);
  EXPECT_EQ(to_string(TraceMode::kSampled), "sampled");
  EXPECT_THROW(trace_mode_from_string("x"), InvalidArgument);
}

TEST(Pipeline, SingleTermModelHasNoTrotterError) {
  HamiltonianTerms h = make_hamiltonian(2, {{0.7, PauliString::parse("XZ")}});
  PipelineConfig c;
  c.beta = 1.5;
  c.m_cheb = 4;
  PartitionResult r = run_pipeline(h, c);
  for (const NodeResult& n : r.nodes) EXPECT_NEAR(n.z_exact, r.oracle, 1e-12);
  EXPECT_LE(r.realized_error, 1e-12);
}

TEST(Pipeline, ExtrapolationIsWeightedSum) {
  PipelineConfig c;
  c.beta = 2.0;
  c.t = 2.0;
  c.m_cheb = 6;
  PartitionResult r = run_pipeline(syk8(), c);
  double direct = 0.0;
  for (std::size_t k = 0; k < r.nodes.size(); ++k) direct += r.grid.weights[k] * r.nodes[k].z_estimate;
  EXPECT_NEAR(r.extrapolated, direct, 1e-14);
  EXPECT_EQ(r.extrapolated, r.extrapolated_exact);
  for (std::size_t k = 0; k < r.nodes.size(); ++k) {
    EXPECT_EQ(r.nodes[k].index, static_cast<int>(k));
    EXPECT_DOUBLE_EQ(r.nodes[k].step, r.grid.nodes[k] * 2.0);
  }
}

TEST(Pipeline, ConvergesGeometrically) {
  HamiltonianTerms h = syk8();
  double oracle_z = exact_partition(h, 2.0);
  double prev = 1.0;
  for (int m : {2, 4, 6, 8, 10}) {
    PipelineConfig c;
    c.beta = 2.0;
    c.t = 2.0;
    c.m_cheb = m;
    double err = std::abs(run_pipeline(h, c).extrapolated - oracle_z);
    if (m > 2) EXPECT_LT(err * 1.5, prev) << "M " << m;
    prev = err;
  }
  EXPECT_LT(prev, 1e-8);
}

TEST(Pipeline, OddGridUsesLimitNode) {
  PipelineConfig c;
  c.beta = 1.0;
  c.t = 1.0;
  c.m_cheb = 5;
  HamiltonianTerms h = syk8();
  PartitionResult r = run_pipeline(h, c);
  EXPECT_EQ(r.nodes[2].s, 0.0);
  EXPECT_NEAR(r.nodes[2].z_exact, exact_partition(h, 1.0), 1e-13);
  EXPECT_TRUE(std::isinf(r.cost.depth[2]));
}

TEST(Pipeline, ThreadCountDoesNotChangeResults) {
  PipelineConfig c;
  c.beta = 2.0;
  c.t = 0.5;
  c.m_cheb = 4;
  c.mode = TraceMode::kSampled;
  c.seed = 5;
  HamiltonianTerms h = syk8();
  std::string a = partition_result_to_json(run_pipeline(h, c));
  c.threads = 4;
  std::string b = partition_result_to_json(run_pipeline(h, c));
  EXPECT_EQ(a, b);
}

TEST(Pipeline, GqspModeTracksExact) {
  PipelineConfig c;
  c.beta = 1.0;
  c.t = 0.5;
  c.m_cheb = 4;
  c.mode = TraceMode::kGqsp;
  PartitionResult r = run_pipeline(syk8(), c);
  for (const NodeResult& n : r.nodes) {
    EXPECT_LE(n.block_error, c.eps_qsp + 1e-8);
    EXPECT_NE(n.power, 0);
    EXPECT_NEAR(n.z_estimate, n.z_exact, 1e-5);
  }
}

TEST(Pipeline, SampledModeWithinStatisticalMargin) {
  HamiltonianTerms h = syk8();
  PipelineConfig c;
  c.beta = 1.0;
  c.t = 1.0;
  c.m_cheb = 4;
  c.eps_stat = 0.05;
  c.mode = TraceMode::kSampled;
  int ok = 0;
  const int trials = 100;
  for (int trial = 0; trial < trials; ++trial) {
    c.seed = static_cast<std::uint64_t>(trial);
    PartitionResult r = run_pipeline(h, c);
    double margin = 0.0;
    for (std::size_t k = 0; k < r.nodes.size(); ++k) margin += std::abs(r.grid.weights[k]) * r.nodes[k].z_uncertainty;
    if (std::abs(r.extrapolated - r.extrapolated_exact) <= margin) ++ok;
  }
  EXPECT_GE(ok, 95);
}

TEST(Pipeline, JsonAndCsvShapes) {
  PipelineConfig c;
  c.m_cheb = 2;
  PartitionResult r = run_pipeline(syk8(), c);
  std::string csv = nodes_to_csv(r);
  EXPECT_EQ(csv.rfind("s_k,d_k,Z_node_exact,Z_node_hat,depth,queries\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  std::string jsonl = node_records_jsonl(r);
  EXPECT_EQ(std::count(jsonl.begin(), jsonl.end(), '\n'), 2);
  EXPECT_NE(partition_result_to_json(r).find("\"oracle\""), std::string::npos);
}

TEST(TraceBound, HoldsOnRandomModels) {
  std::vector<double> taus = {0.02, 0.05, 0.1, 0.2, 0.4};
  for (std::uint64_t seed : {1, 2, 3}) {
    HamiltonianTerms h = normalize_one_norm(random_pauli_model(3, 6, seed)).hamiltonian;
    for (int p : {1, 2}) {
      for (const TraceBoundRow& row : trace_bound_check(h, 2.0, p, taus)) {
        EXPECT_LE(row.lhs, row.rhs * (1.0 + 1e-12));
        EXPECT_GT(row.error_norm, 0.0);
        EXPECT_LE(row.tightness, 1.0 + 1e-12);
      }
    }
  }
}

TEST(TraceBound, EqualityForCommutingModels) {
  HamiltonianTerms h = normalize_one_norm(random_commuting_model(3, 5, 4)).hamiltonian;
  std::vector<double> taus = {0.05, 0.2};
  for (const TraceBoundRow& row : trace_bound_check(h, 2.0, 2, taus)) EXPECT_NEAR(row.lhs, row.rhs, 1e-10);
}

TEST(ComplexNodes, RealAxisMatchesNodeValue) {
  HamiltonianTerms h = syk8();
  FormulaPlan plan = build_plan(h.size(), 2);
  EffectiveHamiltonian e = effective_hamiltonian(h, 0.6, 2.0, plan);
  double want = oracle::partition(e.matrix, 2.0);
  std::complex<double> got = node_trace_complex(h, 2.0, 2.0, plan, 0.6);
  EXPECT_NEAR(got.real(), want, 1e-12);
  EXPECT_NEAR(got.imag(), 0.0, 1e-12);
  // conjugate symmetry off the axis
  std::complex<double> up = node_trace_complex(h, 2.0, 2.0, plan, {0.3, 0.4});
  std::complex<double> down = node_trace_complex(h, 2.0, 2.0, plan, {0.3, -0.4});
  EXPECT_LT(std::abs(up - std::conj(down)), 1e-10);
}

TEST(Bernstein, ErrorsBelowEllipseBound) {
  std::vector<int> sizes = {2, 4, 6, 8};
  BernsteinCheck b = bernstein_check(syk8(), 2.0, 2, 2.0, sizes, 128);
  EXPECT_GT(b.rho, 1.0);
  EXPECT_GT(b.c, 0.0);
  EXPECT_GT(b.rho_fit, 1.0);
  EXPECT_TRUE(b.holds);
}

}  // namespace
}  // namespace trotterz
