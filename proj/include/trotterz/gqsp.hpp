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

#ifndef TROTTERZ_GQSP_HPP
#define TROTTERZ_GQSP_HPP

#include <string>
#include <string_view>
#include <vector>

#include "trotterz/dense.hpp"

namespace trotterz {

/// Ascending coefficients p_0 + p_1 z + ... + p_d z^d.
using Polynomial = std::vector<Complex>;

Complex evaluate_polynomial(const Polynomial& p, Complex z);

/// sum_{m=-M..M} c_m z^m, stored as c_{-M}, ..., c_M.
struct LaurentPoly {
  int order = 0;
  std::vector<Complex> coefficients;

  static LaurentPoly from_coefficients(std::vector<Complex> c);
  Complex coefficient(int m) const;
  Complex evaluate(Complex z) const;
  /// max |P| over `samples` equally spaced points of the unit circle.
  double max_on_circle(int samples = 4096) const;
  LaurentPoly scaled(double s) const;
};

inline constexpr double kAdmissibilitySlack = 1e-9;
inline constexpr double kDefaultRescale = 1.0 - 1e-6;

bool is_admissible(const LaurentPoly& p, int samples = 4096);

/// [[e^{i(lambda+phi)} cos t, e^{i phi} sin t], [e^{i lambda} sin t, -cos t]]
Eigen::Matrix2cd rotation(double theta, double phi, double lambda);

struct ShiftedPoly {
  Polynomial poly;
  int shift = 0;
};

/// z^M P(z), a polynomial of degree 2M.
ShiftedPoly monomial_shift(const LaurentPoly& p);

/// Q with |P|^2 + |Q|^2 = 1 on the unit circle, deg Q <= deg P, roots of Q in
/// the closed unit disk and a real-positive leading coefficient.
Polynomial complete_polynomial(const Polynomial& p);

/// max over `samples` circle points of ||P|^2 + |Q|^2 - 1|, sampled off the
/// FFT grid.
double completion_residual(const Polynomial& p, const Polynomial& q, int samples = 4096);

struct GqspAngles {
  int degree = 0;
  std::vector<double> theta;
  std::vector<double> phi;
  double lambda = 0.0;
};

/// Layer peeling; the circuit is R_d A R_{d-1} A ... R_1 A R_0 with
/// R_0 = R(theta_0, phi_0, lambda) and R_j = R(theta_j, phi_j, 0).
GqspAngles synthesize_angles(const Polynomial& p, const Polynomial& q);

/// Full 2 dim x 2 dim unitary; the ancilla is the leading tensor factor and
/// A = |0><0| (x) U + |1><1| (x) I.
DenseOperator gqsp_apply(const GqspAngles& angles, const DenseOperator& u);

enum class BlockPosition { kTopLeft, kBottomLeft, kTopRight, kBottomRight };

DenseOperator extract_block(const DenseOperator& full, BlockPosition which = BlockPosition::kTopLeft);

/// sum_m c_m U^m using U and U^dagger.
DenseOperator direct_poly_apply(const LaurentPoly& p, const DenseOperator& u);

/// Integer power of a unitary; negative powers use the adjoint.
DenseOperator unitary_power(const DenseOperator& u, long long power);

/// max |block(gqsp_apply(angles, U)) - U^shift p(U)|
double verify_block(const GqspAngles& angles, const DenseOperator& u, const LaurentPoly& p, int shift);

/// Target, its rescaled version, and the synthesized circuit data.
struct GqspProgram {
  LaurentPoly target;
  double rescale = kDefaultRescale;
  /// rescale * target; the polynomial the circuit realizes (after the shift).
  LaurentPoly synthesized;
  ShiftedPoly shifted;
  Polynomial complement;
  GqspAngles angles;
  double completion_residual = 0.0;
};

GqspProgram prepare_gqsp(const LaurentPoly& target, double rescale = kDefaultRescale);

/// SHA-256 of a canonical text form of the coefficients (hex).
std::string polynomial_hash(const Polynomial& p);

std::string angles_to_json(const GqspAngles& angles, std::string_view target_hash);
GqspAngles angles_from_json(std::string_view text, std::string* target_hash = nullptr);

}  // namespace trotterz

#endif
