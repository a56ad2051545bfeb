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

#ifndef TROTTERZ_DENSE_HPP
#define TROTTERZ_DENSE_HPP

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace trotterz {

using Complex = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

struct Tolerances {
  double hermiticity = 1e-12;
  double unitarity = 1e-10;
  double reconstruction = 1e-10;
  // Minimum distance of any eigenphase from -pi in matrix_log_unitary.
  double branch_cut = 1e-8;
};

struct SpectralDecomposition {
  Eigen::VectorXcd eigenvalues;
  DenseOperator eigenvectors;

  DenseOperator reconstruct() const;
};

double max_abs(const DenseOperator& a);
/// max |A - A^dagger|
double hermiticity_defect(const DenseOperator& a);
/// max |A^dagger A - I|
double unitarity_defect(const DenseOperator& a);
bool is_hermitian(const DenseOperator& a, double tol = Tolerances{}.hermiticity);
bool is_unitary(const DenseOperator& a, double tol = Tolerances{}.unitarity);

/// Largest singular value.
double spectral_norm(const DenseOperator& a);

SpectralDecomposition hermitian_spectrum(const DenseOperator& h, const Tolerances& tol = {});
/// Eigendecomposition of a unitary through a complex Schur form.
SpectralDecomposition unitary_spectrum(const DenseOperator& u, const Tolerances& tol = {});

/// V exp(scalar * Lambda) V^dagger for Hermitian h.
DenseOperator matrix_exp(const DenseOperator& h, Complex scalar, const Tolerances& tol = {});

/// Principal logarithm of a unitary; eigenvalues i*theta with theta in (-pi, pi).
DenseOperator matrix_log_unitary(const DenseOperator& u, const Tolerances& tol = {});

DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

/// Apply a real function to the spectrum of a Hermitian matrix.
template <typename F>
DenseOperator hermitian_function(const DenseOperator& h, F&& f, const Tolerances& tol = {}) {
  SpectralDecomposition sd = hermitian_spectrum(h, tol);
  Eigen::VectorXcd d(sd.eigenvalues.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = f(sd.eigenvalues(i).real());
  return sd.eigenvectors * d.asDiagonal() * sd.eigenvectors.adjoint();
}

}  // namespace trotterz

#endif
