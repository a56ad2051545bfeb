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

#include "trotterz/dense.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "trotterz/errors.hpp"

namespace trotterz {

namespace {

void require_square(const DenseOperator& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    std::ostringstream msg;
    msg << what << ": expected a non-empty square matrix, got " << a.rows() << "x" << a.cols();
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

DenseOperator SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

double max_abs(const DenseOperator& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const DenseOperator& a) {
  require_square(a, "hermiticity_defect");
  return max_abs(a - a.adjoint());
}

double unitarity_defect(const DenseOperator& a) {
  require_square(a, "unitarity_defect");
  return max_abs(a.adjoint() * a - DenseOperator::Identity(a.rows(), a.cols()));
}

bool is_hermitian(const DenseOperator& a, double tol) { return hermiticity_defect(a) <= tol; }

bool is_unitary(const DenseOperator& a, double tol) { return unitarity_defect(a) <= tol; }

double spectral_norm(const DenseOperator& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<DenseOperator> svd(a);
  return svd.singularValues()(0);
}

SpectralDecomposition hermitian_spectrum(const DenseOperator& h, const Tolerances& tol) {
  require_square(h, "hermitian_spectrum");
  double defect = hermiticity_defect(h);
  if (defect > tol.hermiticity) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max|A - A^dagger| = " << defect;
    throw NumericalError(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(h);
  if (solver.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");
  SpectralDecomposition out;
  out.eigenvalues = solver.eigenvalues().cast<Complex>();
  out.eigenvectors = solver.eigenvectors();
  return out;
}

SpectralDecomposition unitary_spectrum(const DenseOperator& u, const Tolerances& tol) {
  require_square(u, "unitary_spectrum");
  double defect = unitarity_defect(u);
  if (defect > tol.unitarity) {
    std::ostringstream msg;
    msg << "matrix is not unitary: max|U^dagger U - I| = " << defect;
    throw NumericalError(msg.str());
  }
  // The Schur form of a normal matrix is diagonal up to round-off.
  Eigen::ComplexSchur<DenseOperator> schur(u);
  if (schur.info() != Eigen::Success) throw NumericalError("Schur decomposition failed");
  SpectralDecomposition out;
  out.eigenvalues = schur.matrixT().diagonal();
  out.eigenvectors = schur.matrixU();
  double residual = max_abs(out.reconstruct() - u);
  if (residual > tol.reconstruction) {
    std::ostringstream msg;
    msg << "unitary spectral reconstruction residual " << residual << " exceeds tolerance";
    throw NumericalError(msg.str());
  }
  return out;
}

DenseOperator matrix_exp(const DenseOperator& h, Complex scalar, const Tolerances& tol) {
  SpectralDecomposition sd = hermitian_spectrum(h, tol);
  Eigen::VectorXcd d(sd.eigenvalues.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::exp(scalar * sd.eigenvalues(i).real());
  return sd.eigenvectors * d.asDiagonal() * sd.eigenvectors.adjoint();
}

DenseOperator matrix_log_unitary(const DenseOperator& u, const Tolerances& tol) {
  SpectralDecomposition sd = unitary_spectrum(u, tol);
  Eigen::VectorXcd d(sd.eigenvalues.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    double theta = std::arg(sd.eigenvalues(i));
    if (std::numbers::pi - std::abs(theta) < tol.branch_cut) {
      std::ostringstream msg;
      msg << "eigenphase " << theta << " lies within " << tol.branch_cut
          << " of the branch cut at -pi; reduce the step";
      throw BranchCutError(msg.str());
    }
    d(i) = Complex(0.0, theta);
  }
  return sd.eigenvectors * d.asDiagonal() * sd.eigenvectors.adjoint();
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace trotterz
