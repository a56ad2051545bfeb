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

#ifndef TROTTERZ_TESTS_ORACLES_HPP
#define TROTTERZ_TESTS_ORACLES_HPP

// Reference implementations used only by tests. None of them call into the
// library's own kernels.

#include <cmath>
#include <complex>
#include <random>
#include <string>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat pauli2(char c) {
  Mat m = Mat::Zero(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli2");
  }
  return m;
}

inline Mat kron2(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Leftmost letter is the most significant qubit.
inline Mat pauli_dense(const std::string& letters) {
  Mat m = Mat::Identity(1, 1);
  for (char c : letters) m = kron2(m, pauli2(c));
  return m;
}

/// Scaling and squaring with a 40-term Taylor series.
inline Mat expm(const Mat& a) {
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm + 1e-300))) + 2);
  Mat x = a / std::pow(2.0, squarings);
  Mat term = Mat::Identity(a.rows(), a.cols());
  Mat sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

inline Mat random_hermitian(int n, unsigned seed, double scale = 1.0) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> nd;
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = C(nd(rng), nd(rng));
  Mat h = (a + a.adjoint()) * 0.5;
  return h * (scale / h.cwiseAbs().rowwise().sum().maxCoeff());
}

inline Mat random_unitary(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> nd;
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = C(nd(rng), nd(rng));
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) q.col(i) *= std::polar(1.0, std::arg(r(i, i)));
  return q;
}

/// Tr e^{-beta H} / N through the Taylor exponential.
inline double partition(const Mat& h, double beta) {
  return (expm(-beta * h)).trace().real() / static_cast<double>(h.rows());
}

inline double max_abs(const Mat& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace oracle

#endif
