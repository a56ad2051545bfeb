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

#ifndef TROTTERZ_TROTTER_HPP
#define TROTTERZ_TROTTER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "trotterz/dense.hpp"
#include "trotterz/hamiltonian.hpp"

namespace trotterz {

/// kPerTerm: every Pauli term is one exponential. kGrouped: every commuting
/// group is one exponential.
enum class StageMode { kPerTerm, kGrouped };

struct Stage {
  std::size_t fragment = 0;
  double fraction = 0.0;
};

/// Fully unrolled product formula. Stages are listed in matrix order, so the
/// formula is exp(i H_{f0} a0 t) exp(i H_{f1} a1 t) ...
struct FormulaPlan {
  int order = 1;
  std::size_t n_fragments = 0;
  std::vector<Stage> stages;
};

/// (4 - 4^{1/(2l-1)})^{-1}
double suzuki_u(int l);

FormulaPlan build_plan(std::size_t n_fragments, int order);

/// Stage count of build_plan without unrolling.
std::size_t plan_stage_count(std::size_t n_fragments, int order);

/// The exponentiated pieces for a stage mode: one term each, or one commuting
/// group each (groups computed on demand).
std::vector<std::vector<PauliTerm>> formula_fragments(const HamiltonianTerms& h, StageMode mode);

DenseOperator apply_formula(const HamiltonianTerms& h, double t, const FormulaPlan& plan,
                            StageMode mode = StageMode::kPerTerm);

/// The same product with a complex step; not unitary off the real axis.
DenseOperator apply_formula_complex(const HamiltonianTerms& h, Complex t, const FormulaPlan& plan,
                                    StageMode mode = StageMode::kPerTerm);

struct EffectiveHamiltonian {
  DenseOperator matrix;
  /// S_p(step) that matrix was extracted from.
  DenseOperator trotter_unitary;
  double step = 0.0;
  int order = 1;
  /// Largest anti-Hermitian entry removed by symmetrization.
  double antihermitian_residual = 0.0;
};

inline constexpr double kAntiHermitianLimit = 1e-10;

/// log(S_p(s t)) / (i s t), symmetrized.
EffectiveHamiltonian effective_hamiltonian(const HamiltonianTerms& h, double s, double t, const FormulaPlan& plan,
                                           StageMode mode = StageMode::kPerTerm, const Tolerances& tol = {});

/// Spectral norm of H~_p(tau) - H. Uses quad precision when tau * ||H||_1 < 0.5,
/// so errors far below the double-precision floor of log(S)/tau are resolved.
double trotter_error_norm(const HamiltonianTerms& h, double tau, const FormulaPlan& plan,
                          StageMode mode = StageMode::kPerTerm);

/// Double-precision variant, for comparison and large steps.
double trotter_error_norm_double(const HamiltonianTerms& h, double tau, const FormulaPlan& plan,
                                 StageMode mode = StageMode::kPerTerm);

/// Quad-precision variant; requires tau * ||H||_1 < 0.5.
double trotter_error_norm_extended(const HamiltonianTerms& h, double tau, const FormulaPlan& plan,
                                   StageMode mode = StageMode::kPerTerm);

struct AlphaFit {
  double alpha = 0.0;
  /// log-log slope of the error norm; NaN when the errors vanish.
  double slope = 0.0;
  double r_squared = 0.0;
  std::vector<double> taus;
  std::vector<double> norms;
};

/// Errors below this are treated as exact cancellation.
inline constexpr double kVanishingTrotterError = 1e-24;

/// alpha from ||L_p(tau)|| (p+1)! / |tau|^p, least squares in log space.
AlphaFit fit_alpha(const HamiltonianTerms& h, const FormulaPlan& plan, std::span<const double> taus,
                   StageMode mode = StageMode::kPerTerm);

/// Geometric grid of `count` points spanning [lo, hi].
std::vector<double> geometric_grid(double lo, double hi, std::size_t count);

}  // namespace trotterz

#endif
