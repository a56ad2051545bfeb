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

// Quad-precision evaluation of ||H~_p(tau) - H||. The error for fourth-order
// formulas at tau ~ 1e-3 sits below the double-precision floor eps/tau.

#include <quadmath.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "plan_impl.hpp"
#include "trotterz/errors.hpp"
#include "trotterz/trotter.hpp"

namespace trotterz {

namespace {

using quad = __float128;

struct QComplex {
  quad re = 0;
  quad im = 0;
};

inline QComplex operator+(QComplex a, QComplex b) { return {a.re + b.re, a.im + b.im}; }
inline QComplex operator-(QComplex a, QComplex b) { return {a.re - b.re, a.im - b.im}; }
inline QComplex operator*(QComplex a, QComplex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline QComplex operator*(quad s, QComplex a) { return {s * a.re, s * a.im}; }

// a * i^k
inline QComplex times_i_power(QComplex a, int k) {
  switch (k & 3) {
    case 0:
      return a;
    case 1:
      return {-a.im, a.re};
    case 2:
      return {-a.re, -a.im};
    default:
      return {a.im, -a.re};
  }
}

int phase_index(Complex c) {
  if (c.real() > 0.5) return 0;
  if (c.imag() > 0.5) return 1;
  if (c.real() < -0.5) return 2;
  return 3;
}

struct QMatrix {
  std::size_t n = 0;
  std::vector<QComplex> data;

  explicit QMatrix(std::size_t dim) : n(dim), data(dim * dim) {}
  static QMatrix identity(std::size_t dim) {
    QMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = {1, 0};
    return m;
  }
  QComplex& operator()(std::size_t r, std::size_t c) { return data[r * n + c]; }
  const QComplex& operator()(std::size_t r, std::size_t c) const { return data[r * n + c]; }
};

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t k = 0; k < a.n; ++k) {
      QComplex aik = a(i, k);
      if (aik.re == 0 && aik.im == 0) continue;
      for (std::size_t j = 0; j < a.n; ++j) out(i, j) = out(i, j) + aik * b(k, j);
    }
  }
  return out;
}

double infinity_norm(const QMatrix& a) {
  double best = 0;
  for (std::size_t i = 0; i < a.n; ++i) {
    double row = 0;
    for (std::size_t j = 0; j < a.n; ++j) row += std::hypot(static_cast<double>(a(i, j).re), static_cast<double>(a(i, j).im));
    best = std::max(best, row);
  }
  return best;
}

// U <- U exp(i angle P) with exact i^k amplitudes.
void rotate(QMatrix& u, const PauliString& p, quad angle) {
  quad c = cosq(angle);
  quad s = sinq(angle);
  std::uint64_t x = p.x_mask();
  for (std::uint64_t col = 0; col < u.n; ++col) {
    std::uint64_t partner = col ^ x;
    if (partner < col) continue;
    int k_col = phase_index(pauli_column_amplitude(p, col));
    if (partner == col) {
      // cos + i sin * amp
      QComplex factor = {c, 0};
      factor = factor + times_i_power({s, 0}, k_col + 1);
      for (std::size_t r = 0; r < u.n; ++r) u(r, col) = u(r, col) * factor;
      continue;
    }
    int k_par = phase_index(pauli_column_amplitude(p, partner));
    for (std::size_t r = 0; r < u.n; ++r) {
      QComplex uc = u(r, col);
      QComplex up = u(r, partner);
      u(r, col) = c * uc + s * times_i_power(up, k_col + 1);
      u(r, partner) = c * up + s * times_i_power(uc, k_par + 1);
    }
  }
}

}  // namespace

double trotter_error_norm_extended(const HamiltonianTerms& h, double tau, const FormulaPlan& plan,
                                   StageMode mode) {
  if (tau == 0.0) throw InvalidArgument("trotter_error_norm: zero step");
  if (h.n_qubits > 10) throw CapExceeded("extended-precision Trotter error supports at most 10 qubits");
  double norm1 = compute_one_norm(h);
  if (std::abs(tau) * norm1 >= 0.5) {
    throw InvalidArgument("extended-precision path needs |tau| * ||H||_1 < 0.5");
  }
  auto fragments = formula_fragments(h, mode);
  if (fragments.size() != plan.n_fragments) throw InvalidArgument("plan does not match the Hamiltonian");

  std::vector<std::pair<std::size_t, quad>> stages;
  auto u_of_l = [](int l) -> quad { return quad(1) / (quad(4) - powq(quad(4), quad(1) / quad(2 * l - 1))); };
  detail::unroll_plan<quad>(plan.n_fragments, plan.order, quad(1), stages, u_of_l);

  std::size_t dim = std::size_t{1} << h.n_qubits;
  QMatrix s = QMatrix::identity(dim);
  quad qtau = tau;
  for (const auto& [f, frac] : stages) {
    for (const PauliTerm& term : fragments[f]) rotate(s, term.string, quad(term.coeff) * frac * qtau);
  }

  // log(I + X) by its Mercator series; ||X|| <= |tau| ||H||_1 < 0.5.
  QMatrix x = s;
  for (std::size_t i = 0; i < dim; ++i) x(i, i).re -= 1;
  double nu = infinity_norm(x);
  QMatrix sum = x;
  QMatrix power = x;
  if (nu > 0) {
    for (int k = 2; k < 400; ++k) {
      power = multiply(power, x);
      quad coef = quad(k % 2 == 0 ? -1 : 1) / quad(k);
      for (std::size_t i = 0; i < sum.data.size(); ++i) sum.data[i] = sum.data[i] + coef * power.data[i];
      if (std::pow(nu, k + 1) / (k + 1) < 1e-36) break;
    }
  }

  // H~ = log(S) / (i tau); subtract H and symmetrize.
  QMatrix diff(dim);
  for (std::size_t i = 0; i < sum.data.size(); ++i) {
    QComplex l = sum.data[i];
    diff.data[i] = {l.im / qtau, -l.re / qtau};
  }
  for (const PauliTerm& term : h.terms) {
    std::uint64_t xm = term.string.x_mask();
    for (std::uint64_t c = 0; c < dim; ++c) {
      int k = phase_index(pauli_column_amplitude(term.string, c));
      diff(c ^ xm, c) = diff(c ^ xm, c) - times_i_power({quad(term.coeff), 0}, k);
    }
  }
  DenseOperator out(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      QComplex a = diff(i, j);
      QComplex b = diff(j, i);
      out(i, j) = Complex(static_cast<double>((a.re + b.re) / 2), static_cast<double>((a.im - b.im) / 2));
    }
  }
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(out, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace trotterz
