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

#ifndef TROTTERZ_PIPELINE_HPP
#define TROTTERZ_PIPELINE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trotterz/cheb.hpp"
#include "trotterz/hamiltonian.hpp"
#include "trotterz/thermal.hpp"
#include "trotterz/trotter.hpp"

namespace trotterz {

/// Tr e^{-beta H} / N by dense diagonalization.
double exact_partition(const HamiltonianTerms& h, double beta, std::size_t max_qubits = kDefaultDenseCap);

enum class TraceMode { kExact, kGqsp, kIdealW, kSampled };

std::string to_string(TraceMode mode);
TraceMode trace_mode_from_string(const std::string& name);

struct PipelineConfig {
  double beta = 1.0;
  int order = 2;
  double t = 0.5;
  int m_cheb = 8;
  double eps_qsp = 1e-6;
  double eps_cheb = 1e-6;
  double eps_stat = 0.05;
  TraceMode mode = TraceMode::kExact;
  StageMode stage_mode = StageMode::kPerTerm;
  std::uint64_t seed = 0;
  /// 0 selects 1 / beta.
  double delta_prime = 0.0;
  IqaeSchedule iqae;
  int threads = 1;

  void validate() const;
};

struct NodeResult {
  int index = 0;
  double s = 0.0;
  double weight = 0.0;
  double step = 0.0;
  /// Tr e^{-beta H~(s t)} / N
  double z_exact = 0.0;
  /// Mode-dependent value fed to the extrapolation.
  double z_estimate = 0.0;
  double p0_exact = 0.0;
  double p0_hat = 0.0;
  double p0_uncertainty = 0.0;
  /// Bound on |z_estimate - z_exact| implied by the estimation interval.
  double z_uncertainty = 0.0;
  double beta_k = 0.0;
  long long power = 0;
  double kappa = 0.0;
  int lwf_order = 0;
  int gqsp_degree = 0;
  double block_error = 0.0;
  long long queries = 0;
  int rounds = 0;
  std::uint64_t seed = 0;
  double antihermitian_residual = 0.0;
};

struct PartitionResult {
  PipelineConfig config;
  int n_qubits = 0;
  std::size_t n_fragments = 0;
  ChebGrid grid;
  std::vector<NodeResult> nodes;
  double extrapolated = 0.0;
  /// Extrapolation of the exact node values.
  double extrapolated_exact = 0.0;
  double oracle = 0.0;
  double realized_error = 0.0;
  double weight_one_norm = 0.0;
  CostLedger cost;
};

/// Evaluates every Chebyshev node and extrapolates to s = 0.
PartitionResult run_pipeline(const HamiltonianTerms& h, const PipelineConfig& config);

/// Evaluates one node; `index` is zero-based.
NodeResult evaluate_node(const HamiltonianTerms& h, const PipelineConfig& config, const ChebGrid& grid, int index);

std::string partition_result_to_json(const PartitionResult& result);
std::string nodes_to_csv(const PartitionResult& result);
std::string node_records_jsonl(const PartitionResult& result);

struct TraceBoundRow {
  double tau = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double error_norm = 0.0;
  /// lhs / rhs
  double tightness = 0.0;
};

/// |Tr e^{-beta H~_p(tau)} / N| against e^{beta ||H~_p(tau) - H||} Z / N.
std::vector<TraceBoundRow> trace_bound_check(const HamiltonianTerms& h, double beta, int order,
                                             std::span<const double> taus, StageMode mode = StageMode::kPerTerm);

/// Tr e^{-beta H~_p(z t)} / N at complex s = z through eigenvalues of S_p(z t).
std::complex<double> node_trace_complex(const HamiltonianTerms& h, double beta, double t, const FormulaPlan& plan,
                                        std::complex<double> z, StageMode mode = StageMode::kPerTerm);

struct BernsteinCheck {
  double rho = 0.0;
  double c = 0.0;
  /// Geometric rate fitted to the errors, ln err ~ a - M ln rho_hat.
  double rho_fit = 0.0;
  std::vector<int> sizes;
  std::vector<double> errors;
  std::vector<double> bounds;
  bool holds = false;
};

/// Largest ellipse on which the phases of S_p stay within +-limit, using ||H||_2.
double analytic_rho(const HamiltonianTerms& h, double t, double phase_limit = 1.5);

/// C = max |f| on the ellipse of parameter rho, f = node_trace_complex.
double bernstein_constant(const HamiltonianTerms& h, double beta, double t, const FormulaPlan& plan, double rho,
                          int samples = 256, StageMode mode = StageMode::kPerTerm);

/// Errors of the extrapolation with exact node values against the Bernstein-ellipse bound.
BernsteinCheck bernstein_check(const HamiltonianTerms& h, double beta, int order, double t, std::span<const int> sizes,
                               int samples = 256);

}  // namespace trotterz

#endif
