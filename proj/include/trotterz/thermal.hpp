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

#ifndef TROTTERZ_THERMAL_HPP
#define TROTTERZ_THERMAL_HPP

#include <cstdint>
#include <string>

#include "trotterz/dense.hpp"
#include "trotterz/gqsp.hpp"
#include "trotterz/pauli.hpp"
#include "trotterz/trotter.hpp"

namespace trotterz {

/// (1/sqrt(N)) sum_n |n>_A |n>_B, index a * N + b.
struct ThermofieldState {
  int n_qubits = 0;
  StateVector vector;
};

ThermofieldState thermofield_double(int n_qubits, std::size_t max_qubits = kDefaultDenseCap);

/// beta * ceil(1/tau) * tau with tau = s t; floor for negative tau.
double beta_correction(double beta, double s, double t);

enum class OracleMode { kExact, kGqsp, kIdealW };

std::string to_string(OracleMode mode);
OracleMode oracle_mode_from_string(const std::string& name);

struct BoltzmannOptions {
  /// Accuracy of the normalized block in gqsp and ideal-W modes.
  double eps_qsp = 1e-6;
  /// Spectral margin delta'; zero means 1 / beta.
  double delta_prime = 0.0;
  double rescale = kDefaultRescale;
};

/// Block encoding of exp(-beta (H~ + 1) / 2) in the ancilla-0 block.
struct BoltzmannOracle {
  OracleMode mode = OracleMode::kExact;
  double beta = 0.0;
  double step = 0.0;
  int order = 0;
  /// The ceiling-corrected inverse temperature for this step.
  double beta_k = 0.0;
  /// W = S_p(step)^power in gqsp mode; 0 otherwise.
  long long power = 0;
  /// W = exp(i (pi/2) kappa H~).
  double kappa = 0.0;
  /// True when W came from H~'s eigendecomposition.
  bool ideal_signal = false;
  double lwf_beta = 0.0;
  double lwf_delta = 0.0;
  int lwf_order = 0;
  int gqsp_degree = 0;
  double completion_residual = 0.0;
  /// block ~= normalization * exp(-beta (H~ + 1) / 2)
  double normalization = 1.0;
  DenseOperator block;
  /// Unitary on (C, A) whose top-left block is `block`.
  DenseOperator dilation;

  DenseOperator normalized_block() const { return block / normalization; }
};

/// eff.step == 0 marks the s = 0 limit, where eff.matrix is H and gqsp mode
/// falls back to the ideal signal unitary.
BoltzmannOracle build_u_boltz(const EffectiveHamiltonian& eff, double beta, OracleMode mode,
                              const BoltzmannOptions& options = {});

/// exp(-beta (H~ + 1) / 2) from the eigendecomposition.
DenseOperator exact_boltzmann_block(const DenseOperator& h_tilde, double beta);

struct P0Values {
  /// Tr exp(-beta (H~ + 1)) / N, the probability the circuit realizes.
  double shifted = 0.0;
  /// Tr exp(-beta H~) / N = Z(beta, s) / N.
  double unshifted = 0.0;
  /// exp(-beta); shifted = shift_factor * unshifted.
  double shift_factor = 1.0;
};

P0Values exact_p0(const DenseOperator& h_tilde, double beta);

/// dilation (x) I_B on the (C, A, B) register, dimension 2 N^2.
DenseOperator u_boltz_full(const BoltzmannOracle& oracle);

/// || (<0|_C (x) I) U |0>_C |psi_0> ||^2 by dense state evolution.
double state_p0(const DenseOperator& full, int n_qubits);

/// Householder reflection on AB with V|0> = |psi_0>.
DenseOperator thermofield_prep(int n_qubits);

/// A = U_full (I_C (x) V).
DenseOperator amplitude_circuit(const DenseOperator& full, int n_qubits);

/// Q = -A S_0 A^dagger S_chi, S_chi flipping the sign of C = |0>.
DenseOperator grover_operator(const DenseOperator& a_circuit, int n_qubits);

/// theta_a from the eigenphases of Q on span{good, bad} of A|0>; a_0 = sin(theta_a).
double grover_theta(const DenseOperator& q, const DenseOperator& a_circuit, int n_qubits);

struct IqaeSchedule {
  double alpha = 0.05;
  int shots = 10;
  /// Minimum growth factor between successive amplification powers.
  double min_ratio = 2.0;
};

struct TraceEstimate {
  double p0_hat = 0.0;
  double a0_hat = 0.0;
  double eps = 0.0;
  /// uses of A per shot: 2k + 1 (initial preparation plus two per Q)
  long long queries = 0;
  long long grover_iterations = 0;
  long long shots = 0;
  int rounds = 0;
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  /// 2 a0 eps + eps^2
  double p0_uncertainty = 0.0;
  std::uint64_t seed = 0;
};

/// Iterative amplitude estimation with Chernoff-Hoeffding intervals, sampled at
/// the outcome level: a round with k Grover steps succeeds with probability
/// sin^2((2k+1) theta_a).
TraceEstimate amplitude_estimate(double p0_true, double eps, std::uint64_t seed, const IqaeSchedule& schedule = {});

struct QubitLedger {
  int system = 0;
  int trace_copy = 0;
  int gqsp_ancilla = 1;
  int estimation_ancilla = 1;

  int total() const { return system + trace_copy + gqsp_ancilla + estimation_ancilla; }
};

QubitLedger qubit_ledger(int n_qubits);

}  // namespace trotterz

#endif
