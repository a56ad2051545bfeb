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

#include "trotterz/trotter.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "plan_impl.hpp"
#include "trotterz/errors.hpp"
#include "trotterz/stats.hpp"

namespace trotterz {

double suzuki_u(int l) {
  if (l < 2) throw InvalidArgument("suzuki_u requires l >= 2");
  return 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * l - 1.0)));
}

FormulaPlan build_plan(std::size_t n_fragments, int order) {
  detail::require_order(order);
  if (n_fragments == 0) throw InvalidArgument("build_plan: no fragments");
  std::vector<std::pair<std::size_t, double>> raw;
  raw.reserve(plan_stage_count(n_fragments, order));
  detail::unroll_plan<double>(n_fragments, order, 1.0, raw, suzuki_u);
  FormulaPlan plan;
  plan.order = order;
  plan.n_fragments = n_fragments;
  plan.stages.reserve(raw.size());
  for (const auto& [f, a] : raw) plan.stages.push_back({f, a});
  return plan;
}

std::size_t plan_stage_count(std::size_t n_fragments, int order) {
  detail::require_order(order);
  if (order == 1) return n_fragments;
  std::size_t count = 2 * n_fragments;
  for (int l = 2; 2 * l <= order; ++l) count *= 5;
  return count;
}

std::vector<std::vector<PauliTerm>> formula_fragments(const HamiltonianTerms& h, StageMode mode) {
  std::vector<std::vector<PauliTerm>> out;
  if (mode == StageMode::kPerTerm) {
    for (const PauliTerm& t : h.terms) out.push_back({t});
    return out;
  }
  const HamiltonianTerms grouped = h.groups.empty() ? group_commuting(h) : h;
  for (const auto& g : grouped.groups) {
    std::vector<PauliTerm> frag;
    for (std::size_t i : g) frag.push_back(grouped.terms.at(i));
    out.push_back(std::move(frag));
  }
  return out;
}

namespace {

DenseOperator apply_impl(const HamiltonianTerms& h, Complex t, const FormulaPlan& plan, StageMode mode) {
  if (h.n_qubits > kDefaultDenseCap) {
    std::ostringstream msg;
    msg << "apply_formula: " << h.n_qubits << " qubits exceeds the dense cap of " << kDefaultDenseCap;
    throw CapExceeded(msg.str());
  }
  auto fragments = formula_fragments(h, mode);
  if (fragments.size() != plan.n_fragments) {
    std::ostringstream msg;
    msg << "plan expects " << plan.n_fragments << " fragments, Hamiltonian provides " << fragments.size();
    throw InvalidArgument(msg.str());
  }
  Eigen::Index dim = Eigen::Index{1} << h.n_qubits;
  DenseOperator u = DenseOperator::Identity(dim, dim);
  for (const Stage& st : plan.stages) {
    for (const PauliTerm& term : fragments[st.fragment]) {
      right_multiply_rotation(u, term.string, term.coeff * st.fraction * t);
    }
  }
  return u;
}

}  // namespace

DenseOperator apply_formula(const HamiltonianTerms& h, double t, const FormulaPlan& plan, StageMode mode) {
  return apply_impl(h, Complex(t, 0.0), plan, mode);
}

DenseOperator apply_formula_complex(const HamiltonianTerms& h, Complex t, const FormulaPlan& plan,
                                    StageMode mode) {
  return apply_impl(h, t, plan, mode);
}

EffectiveHamiltonian effective_hamiltonian(const HamiltonianTerms& h, double s, double t, const FormulaPlan& plan,
                                           StageMode mode, const Tolerances& tol) {
  double tau = s * t;
  if (tau == 0.0) throw InvalidArgument("effective_hamiltonian: the step s*t must be nonzero");
  EffectiveHamiltonian out;
  out.step = tau;
  out.order = plan.order;
  out.trotter_unitary = apply_formula(h, tau, plan, mode);
  DenseOperator log_s = matrix_log_unitary(out.trotter_unitary, tol);
  DenseOperator raw = log_s / Complex(0.0, tau);
  DenseOperator anti = 0.5 * (raw - raw.adjoint());
  out.antihermitian_residual = max_abs(anti);
  if (out.antihermitian_residual > kAntiHermitianLimit) {
    std::ostringstream msg;
    msg << "effective Hamiltonian has an anti-Hermitian part of " << out.antihermitian_residual;
    throw NumericalError(msg.str());
  }
  out.matrix = 0.5 * (raw + raw.adjoint());
  return out;
}

double trotter_error_norm_double(const HamiltonianTerms& h, double tau, const FormulaPlan& plan, StageMode mode) {
  EffectiveHamiltonian eff = effective_hamiltonian(h, 1.0, tau, plan, mode);
  DenseOperator diff = eff.matrix - hamiltonian_dense(h);
  diff = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(diff, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double trotter_error_norm(const HamiltonianTerms& h, double tau, const FormulaPlan& plan, StageMode mode) {
  if (std::abs(tau) * compute_one_norm(h) < 0.5) return trotter_error_norm_extended(h, tau, plan, mode);
  return trotter_error_norm_double(h, tau, plan, mode);
}

AlphaFit fit_alpha(const HamiltonianTerms& h, const FormulaPlan& plan, std::span<const double> taus,
                   StageMode mode) {
  if (taus.size() < 4) throw InvalidArgument("fit_alpha needs at least four step sizes");
  AlphaFit fit;
  fit.taus.assign(taus.begin(), taus.end());
  double max_norm = 0.0;
  for (double tau : taus) {
    if (tau == 0.0) throw InvalidArgument("fit_alpha: zero step");
    fit.norms.push_back(trotter_error_norm(h, tau, plan, mode));
    max_norm = std::max(max_norm, fit.norms.back());
  }
  if (max_norm < kVanishingTrotterError) {
    fit.alpha = 0.0;
    fit.slope = std::numeric_limits<double>::quiet_NaN();
    fit.r_squared = 1.0;
    return fit;
  }
  std::vector<double> abs_tau;
  for (double tau : taus) abs_tau.push_back(std::abs(tau));
  LinearFit lf = loglog_fit(abs_tau, fit.norms);
  fit.slope = lf.slope;
  fit.r_squared = lf.r_squared;
  if (std::abs(lf.slope - plan.order) > 0.2) {
    std::ostringstream msg;
    msg << "step grid is not asymptotic: fitted slope " << lf.slope << " for order " << plan.order;
    throw NumericalError(msg.str());
  }
  double factorial = std::tgamma(plan.order + 2.0);
  double mean_log = 0.0;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    mean_log += std::log(fit.norms[i] * factorial / std::pow(abs_tau[i], plan.order));
  }
  fit.alpha = std::exp(mean_log / static_cast<double>(taus.size()));
  return fit;
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t count) {
  if (count < 2 || lo <= 0 || hi <= lo) throw InvalidArgument("geometric_grid: need 0 < lo < hi and count >= 2");
  std::vector<double> out;
  double ratio = std::log(hi / lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out.push_back(lo * std::exp(ratio * static_cast<double>(i)));
  out.back() = hi;
  return out;
}

}  // namespace trotterz
