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

#ifndef TROTTERZ_CHEB_HPP
#define TROTTERZ_CHEB_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace trotterz {

/// Nodes s_k = cos((2k-1) pi / (2M)), k = 1..M, and extrapolation weights d_k.
struct ChebGrid {
  int size = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Discretely orthonormal basis: u_0 = 1/sqrt(M), u_j = sqrt(2/M) T_j.
double cheb_basis(int j, int m, double s);

/// Weights from d_k = sum_j u_j(0) u_j(s_k).
ChebGrid cheb_grid(int m);

/// d_k = (1/M) (-1)^(k + M/2) tan((2k-1) pi / (2M)); even M only.
std::vector<double> closed_form_weights(int m);

/// [sum_k u_i(s_k) u_j(s_k)]_{ij}
Eigen::MatrixXd orthonormality_matrix(const ChebGrid& grid);

/// sum_k d_k values_k
double interpolate_to_zero(std::span<const double> values, const ChebGrid& grid);

/// r + sqrt(r^2 - 1)
double rho_from_radius(double r);

/// 4 C rho^{-(M-1)} / (rho - 1)
double bernstein_bound(double c, double rho, int m);

/// Points of the Bernstein ellipse (z + 1/z)/2 with |z| = rho.
std::vector<std::complex<double>> bernstein_ellipse(double rho, int samples);

/// ceil(calibration / ln r * (max(0, ln(z_ratio / eps_cheb)) + beta alpha (r t)^p / p!)), at least 2.
int mcheb_size(double beta, double alpha, double r, double t, int p, double eps_cheb, double z_ratio,
               double calibration = 1.0);

struct Schedule {
  int order = 2;
  double t = 0.5;
  double r = 2.0;
};

/// p ~ sqrt(log5 beta) (nearest even, at least 2), t ~ exp(-sqrt(ln beta ln 5)), r ~ exp(1/sqrt(log5 beta)).
Schedule scaling_schedule(double beta);

double sum_inverse_nodes(const ChebGrid& grid);

/// ceil(log2 C(n, 4)): selection qubits a block encoding of the SYK terms needs.
int ancilla_savings(int n_majorana);

struct CostInputs {
  int order = 2;
  double t = 0.5;
  double eps_stat = 0.05;
  /// Exponentials per product formula application (stage count of S_p).
  std::size_t stages_per_formula = 0;
  double calibration = 1.0;
};

struct CostLedger {
  std::vector<double> repetitions;
  std::vector<double> depth;
  std::vector<double> queries;
  std::size_t stages_per_formula = 0;
  /// sum_k depth_k queries_k
  double total = 0.0;
  /// (5^p / t) max_k(M_k sqrt(z_k) / eps) M log M
  double asymptotic_expression = 0.0;
  double node_sum = 0.0;
};

/// Per-node depth 2 M_k ceil(1/(|s_k| t)) x stages and queries ceil(sqrt(z_k) / eps_stat).
/// A node at s = 0 has infinite depth.
CostLedger cost_model(const CostInputs& in, const ChebGrid& grid, std::span<const int> lwf_orders,
                      std::span<const double> z_values);

struct ScheduleCost {
  Schedule schedule;
  int m_cheb = 0;
  int lwf_order = 0;
  CostLedger ledger;
};

/// Cost of a full run at inverse temperature beta under scaling_schedule, with
/// unit node values and an even M_cheb from mcheb_size.
ScheduleCost schedule_cost(double beta, double eps_qsp, double eps_stat, double eps_cheb, double alpha,
                           std::size_t n_fragments);

}  // namespace trotterz

#endif
