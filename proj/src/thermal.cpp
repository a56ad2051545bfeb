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

#include "trotterz/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "trotterz/errors.hpp"
#include "trotterz/lwf.hpp"
#include "trotterz/rng.hpp"

namespace trotterz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSubnormalSlack = 1e-9;
constexpr double kSpectrumSlack = 1e-9;

Eigen::Index dim_of(int n_qubits) { return Eigen::Index{1} << n_qubits; }

DenseOperator dilate(const DenseOperator& block, const DenseOperator& complement) {
  const Eigen::Index n = block.rows();
  DenseOperator d(2 * n, 2 * n);
  d.topLeftCorner(n, n) = block;
  d.topRightCorner(n, n) = -complement;
  d.bottomLeftCorner(n, n) = complement;
  d.bottomRightCorner(n, n) = block;
  return d;
}

}  // namespace

ThermofieldState thermofield_double(int n_qubits, std::size_t max_qubits) {
  if (n_qubits < 1) throw InvalidArgument("thermofield_double: need at least one qubit");
  if (static_cast<std::size_t>(2 * n_qubits) > max_qubits) {
    std::ostringstream msg;
    msg << "thermofield_double: 2n = " << 2 * n_qubits << " exceeds the dense cap of " << max_qubits;
    throw CapExceeded(msg.str());
  }
  Eigen::Index n = dim_of(n_qubits);
  ThermofieldState s;
  s.n_qubits = n_qubits;
  s.vector = StateVector::Zero(n * n);
  double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index i = 0; i < n; ++i) s.vector(i * n + i) = amp;
  return s;
}

double beta_correction(double beta, double s, double t) {
  double tau = s * t;
  if (s == 0.0) throw InvalidArgument("beta_correction: s must be nonzero");
  if (!(t > 0.0)) throw InvalidArgument("beta_correction: t must be positive");
  double inv = 1.0 / tau;
  // Snap near-integers so exact ratios are not pushed up by round-off.
  double nearest = std::round(inv);
  double reps = std::abs(inv - nearest) < 1e-9 * std::max(1.0, std::abs(inv)) ? nearest
                : (tau > 0 ? std::ceil(inv) : std::floor(inv));
  return beta * reps * tau;
}

std::string to_string(OracleMode mode) {
  switch (mode) {
    case OracleMode::kExact:
      return "exact";
    case OracleMode::kGqsp:
      return "gqsp";
    default:
      return "ideal-w";
  }
}

OracleMode oracle_mode_from_string(const std::string& name) {
  if (name == "exact") return OracleMode::kExact;
  if (name == "gqsp") return OracleMode::kGqsp;
  if (name == "ideal-w") return OracleMode::kIdealW;
  throw InvalidArgument("unknown oracle mode '" + name + "'");
}

DenseOperator exact_boltzmann_block(const DenseOperator& h_tilde, double beta) {
  return hermitian_function(h_tilde, [beta](double lam) { return std::exp(-beta * (lam + 1.0) / 2.0); });
}

BoltzmannOracle build_u_boltz(const EffectiveHamiltonian& eff, double beta, OracleMode mode,
                              const BoltzmannOptions& options) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw InvalidArgument("build_u_boltz: beta must be finite and >= 0");
  const DenseOperator& h = eff.matrix;
  const Eigen::Index n = h.rows();
  BoltzmannOracle o;
  o.mode = mode;
  o.beta = beta;
  o.step = eff.step;
  o.order = eff.order;
  o.beta_k = eff.step > 0.0 ? beta_correction(beta, 1.0, eff.step)
             : eff.step < 0.0 ? beta_correction(beta, -1.0, -eff.step) : beta;

  SpectralDecomposition sd = hermitian_spectrum(h);
  double lam_min = sd.eigenvalues.real().minCoeff();
  double lam_max = sd.eigenvalues.real().maxCoeff();

  if (beta == 0.0) {
    o.block = DenseOperator::Identity(n, n);
    o.dilation = dilate(o.block, DenseOperator::Zero(n, n));
    return o;
  }

  if (mode == OracleMode::kExact) {
    if (lam_min < -1.0 - kSpectrumSlack) {
      std::ostringstream msg;
      msg << "exact oracle needs the spectrum of H~ >= -1 for a subnormalized block; min eigenvalue " << lam_min;
      throw NumericalError(msg.str());
    }
    o.block = exact_boltzmann_block(h, beta);
    DenseOperator comp = hermitian_function(h, [beta](double lam) {
      double b = std::exp(-beta * (lam + 1.0) / 2.0);
      return std::sqrt(std::max(0.0, 1.0 - b * b));
    });
    o.dilation = dilate(o.block, comp);
    return o;
  }

  if (lam_min < -1.0 - kSpectrumSlack || lam_max > 1.0 + kSpectrumSlack) {
    std::ostringstream msg;
    msg << "signal map needs the spectrum of H~ in [-1, 1]; got [" << lam_min << ", " << lam_max << "]";
    throw NumericalError(msg.str());
  }
  double delta_prime = options.delta_prime > 0.0 ? options.delta_prime : 1.0 / beta;
  DenseOperator w;
  bool use_ideal = mode == OracleMode::kIdealW || eff.step == 0.0 || eff.trotter_unitary.size() == 0;
  if (use_ideal) {
    o.ideal_signal = true;
    o.kappa = 1.0 / (1.0 + delta_prime);
    w = matrix_exp(h, Complex(0.0, kPi * o.kappa / 2.0));
  } else {
    double tau = eff.step;
    long long q = std::llround(kPi / (2.0 * (1.0 + delta_prime) * std::abs(tau)));
    while (q > 0 && 2.0 * q * std::abs(tau) / kPi >= 1.0) --q;
    if (q == 0) {
      std::ostringstream msg;
      msg << "step " << tau << " is too large for an integer power of S_p to fit the signal map";
      throw NumericalError(msg.str());
    }
    o.power = tau > 0 ? q : -q;
    o.kappa = 2.0 * static_cast<double>(o.power) * tau / kPi;
    w = unitary_power(eff.trotter_unitary, o.power);
  }
  // exp(-beta_lwf (kappa lam + 1)) = g exp(-beta (lam + 1) / 2).
  o.lwf_beta = beta / (2.0 * o.kappa);
  o.lwf_delta = 1.0 - o.kappa;
  double g = std::exp(-(beta / 2.0) * (1.0 / o.kappa - 1.0));
  double eps_lwf = options.eps_qsp * g;
  if (!(eps_lwf > 0.0 && eps_lwf < 1.0)) throw InvalidArgument("build_u_boltz: eps_qsp out of range");
  TaylorSeries ts = gibbs_taylor(o.lwf_beta, taylor_order_for(o.lwf_beta, eps_lwf));
  FourierApprox approx = lwf_coefficients(ts, o.lwf_delta, eps_lwf);
  o.lwf_order = approx.order;
  GqspProgram prog = prepare_gqsp(LaurentPoly::from_coefficients(approx.coefficients), options.rescale);
  o.gqsp_degree = prog.angles.degree;
  o.completion_residual = prog.completion_residual;
  o.normalization = g * options.rescale;
  DenseOperator circuit = gqsp_apply(prog.angles, w);
  // Undo the monomial shift on the ancilla-0 branch.
  circuit.topRows(n) = unitary_power(w, -prog.shifted.shift) * circuit.topRows(n);
  o.dilation = std::move(circuit);
  o.block = o.dilation.topLeftCorner(n, n);
  double norm = spectral_norm(o.block);
  if (norm > 1.0 + kSubnormalSlack) {
    std::ostringstream msg;
    msg << "realized block has norm " << norm << " > 1";
    throw NumericalError(msg.str());
  }
  return o;
}

P0Values exact_p0(const DenseOperator& h_tilde, double beta) {
  SpectralDecomposition sd = hermitian_spectrum(h_tilde);
  double n = static_cast<double>(h_tilde.rows());
  P0Values p;
  p.shift_factor = std::exp(-beta);
  double sum = 0.0;
  double sum_shifted = 0.0;
  for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
    double lam = sd.eigenvalues(i).real();
    sum += std::exp(-beta * lam);
    sum_shifted += std::exp(-beta * (lam + 1.0));
  }
  p.unshifted = sum / n;
  p.shifted = sum_shifted / n;
  return p;
}

DenseOperator u_boltz_full(const BoltzmannOracle& oracle) {
  const Eigen::Index n = oracle.block.rows();
  return kron(oracle.dilation, DenseOperator::Identity(n, n));
}

double state_p0(const DenseOperator& full, int n_qubits) {
  Eigen::Index n = dim_of(n_qubits);
  if (full.rows() != 2 * n * n) throw InvalidArgument("state_p0: dimension does not match 2 N^2");
  StateVector init = StateVector::Zero(2 * n * n);
  init.head(n * n) = thermofield_double(n_qubits).vector;
  StateVector out = full * init;
  return out.head(n * n).squaredNorm();
}

DenseOperator thermofield_prep(int n_qubits) {
  StateVector psi = thermofield_double(n_qubits).vector;
  StateVector v = psi;
  v(0) -= 1.0;
  Eigen::Index d = psi.size();
  return DenseOperator::Identity(d, d) - 2.0 * v * v.adjoint() / v.squaredNorm();
}

DenseOperator amplitude_circuit(const DenseOperator& full, int n_qubits) {
  DenseOperator lifted = kron(DenseOperator::Identity(2, 2), thermofield_prep(n_qubits));
  if (full.rows() != lifted.rows()) throw InvalidArgument("amplitude_circuit: dimension mismatch");
  return full * lifted;
}

DenseOperator grover_operator(const DenseOperator& a, int n_qubits) {
  Eigen::Index n = dim_of(n_qubits);
  Eigen::Index d = a.rows();
  if (d != 2 * n * n || a.cols() != d) throw InvalidArgument("grover_operator: need a 2 N^2 square circuit");
  // A S_0 A^dagger = I - 2 psi psi^dagger with psi = A|0>.
  StateVector psi = a.col(0);
  DenseOperator reflect = DenseOperator::Identity(d, d) - 2.0 * psi * psi.adjoint();
  DenseOperator q = -reflect;
  q.leftCols(n * n) *= -1.0;  // right-multiplication by S_chi
  return q;
}

double grover_theta(const DenseOperator& q, const DenseOperator& a, int n_qubits) {
  Eigen::Index n = dim_of(n_qubits);
  StateVector psi = a.col(0);
  StateVector good = StateVector::Zero(psi.size());
  good.head(n * n) = psi.head(n * n);
  StateVector bad = psi - good;
  double gn = good.norm();
  double bn = bad.norm();
  if (gn < 1e-14) return 0.0;
  good /= gn;
  if (bn < 1e-14) {
    Complex qgg = good.dot(q * good);
    return std::acos(std::clamp(qgg.real(), -1.0, 1.0)) / 2.0;
  }
  bad /= bn;
  Eigen::Matrix2cd m;
  StateVector qg = q * good;
  StateVector qb = q * bad;
  m << good.dot(qg), good.dot(qb), bad.dot(qg), bad.dot(qb);
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(m);
  // Eigenvalues e^{+-2 i theta}.
  return std::abs(std::arg(es.eigenvalues()(0))) / 2.0;
}

TraceEstimate amplitude_estimate(double p0_true, double eps, std::uint64_t seed, const IqaeSchedule& schedule) {
  if (!(p0_true >= 0.0 && p0_true <= 1.0)) throw InvalidArgument("amplitude_estimate: p0 must lie in [0, 1]");
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("amplitude_estimate: eps must lie in (0, 1)");
  if (schedule.shots < 1 || !(schedule.alpha > 0.0 && schedule.alpha < 1.0) || schedule.min_ratio < 1.0) {
    throw InvalidArgument("amplitude_estimate: invalid schedule");
  }
  const double theta_a = std::asin(std::sqrt(p0_true));
  const int max_rounds = std::max(1, static_cast<int>(std::ceil(std::log2(kPi / (4.0 * eps))))) + 1;
  const double log_term = std::log(2.0 * max_rounds / schedule.alpha);

  std::mt19937_64 rng(seed);
  TraceEstimate est;
  est.eps = eps;
  est.seed = seed;
  double lo = 0.0;
  double hi = kPi / 2.0;
  long long k = 0;
  bool up = true;
  long long good_total = 0;
  long long shots_total = 0;
  long long round_good = 0;
  long long round_shots = 0;
  long long prev_k = -1;

  auto done = [&]() {
    if (hi - lo <= 2.0 * eps) return true;
    return false;
  };

  int iterations = 0;
  while (!done()) {
    if (++iterations > 100000) throw NumericalError("amplitude_estimate: schedule did not converge");
    // Largest K = 4k + 2 with K (hi - lo) <= pi and [K lo, K hi] in one half-plane.
    long long k_cur = 4 * k + 2;
    long long k_max = static_cast<long long>(std::floor(kPi / (hi - lo)));
    long long cand = k_max - ((k_max - 2) % 4 + 4) % 4;
    long long next_k = k;
    bool next_up = up;
    while (static_cast<double>(cand) >= schedule.min_ratio * static_cast<double>(k_cur)) {
      double a = cand * lo;
      double b = cand * hi;
      double half = std::floor(a / kPi + 1e-12);
      if (b <= (half + 1.0) * kPi + 1e-12) {
        next_k = (cand - 2) / 4;
        next_up = static_cast<long long>(half) % 2 == 0;
        break;
      }
      cand -= 4;
    }
    k = next_k;
    up = next_up;
    if (k != prev_k) {
      round_good = 0;
      round_shots = 0;
      prev_k = k;
    }
    long long big_k = 4 * k + 2;
    double p = std::pow(std::sin((2.0 * k + 1.0) * theta_a), 2);
    long long good = 0;
    for (int s = 0; s < schedule.shots; ++s) {
      if (uniform01(rng) < p) ++good;
    }
    ++est.rounds;
    est.queries += (2 * k + 1) * schedule.shots;
    est.grover_iterations += k * schedule.shots;
    good_total += good;
    shots_total += schedule.shots;
    round_good += good;
    round_shots += schedule.shots;

    double a_hat = static_cast<double>(round_good) / static_cast<double>(round_shots);
    double width = std::sqrt(log_term / (2.0 * static_cast<double>(round_shots)));
    double a_min = std::max(0.0, a_hat - width);
    double a_max = std::min(1.0, a_hat + width);
    double phi_min, phi_max;
    if (up) {
      phi_min = std::acos(1.0 - 2.0 * a_min);
      phi_max = std::acos(1.0 - 2.0 * a_max);
    } else {
      phi_min = 2.0 * kPi - std::acos(1.0 - 2.0 * a_max);
      phi_max = 2.0 * kPi - std::acos(1.0 - 2.0 * a_min);
    }
    double offset = 2.0 * kPi * std::floor(big_k * lo / (2.0 * kPi) + 1e-12);
    double new_lo = (offset + phi_min) / static_cast<double>(big_k);
    double new_hi = (offset + phi_max) / static_cast<double>(big_k);
    lo = std::max(lo, new_lo);
    hi = std::min(hi, new_hi);
    if (hi < lo) std::swap(lo, hi);
  }
  est.shots = shots_total;
  est.theta_lo = lo;
  est.theta_hi = hi;
  double s_lo = std::sin(lo);
  double s_hi = std::sin(hi);
  est.a0_hat = 0.5 * (s_lo + s_hi);
  // Deterministic outcomes at the endpoints recover a_0 exactly.
  if (good_total == 0 && s_hi <= eps) est.a0_hat = 0.0;
  if (good_total == shots_total && 1.0 - s_lo <= eps) est.a0_hat = 1.0;
  est.p0_hat = est.a0_hat * est.a0_hat;
  est.p0_uncertainty = std::min(1.0, 2.0 * est.a0_hat * eps + eps * eps);
  return est;
}

QubitLedger qubit_ledger(int n_qubits) {
  if (n_qubits < 1) throw InvalidArgument("qubit_ledger: need at least one qubit");
  QubitLedger l;
  l.system = n_qubits;
  l.trace_copy = n_qubits;
  return l;
}

}  // namespace trotterz
