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

#include "trotterz/gqsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/FFT>

#include "json.hpp"
#include "trotterz/digest.hpp"
#include "trotterz/errors.hpp"

namespace trotterz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateFloor = 1e-12;
constexpr double kCompletionTarget = 1e-12;
constexpr int kMinFftSize = 1 << 14;
constexpr int kMaxFftSize = 1 << 20;
constexpr double kPeelFloor = 1e-13;

int next_pow2(long long v) {
  int n = 1;
  while (n < v) n <<= 1;
  return n;
}

// Values of sum_n c_n z_k^n at z_k = e^{2 pi i k / N}.
std::vector<Complex> circle_values(Eigen::FFT<double>& fft, const Polynomial& c, int n) {
  std::vector<Complex> padded(n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < c.size(); ++i) padded[i % n] += c[i];
  std::vector<Complex> out;
  fft.inv(out, padded);
  for (auto& v : out) v *= static_cast<double>(n);
  return out;
}

// Coefficients from circle values (inverse of circle_values).
std::vector<Complex> circle_coefficients(Eigen::FFT<double>& fft, const std::vector<Complex>& values) {
  std::vector<Complex> out;
  fft.fwd(out, values);
  double n = static_cast<double>(values.size());
  for (auto& v : out) v /= n;
  return out;
}

Polynomial trim_to(const std::vector<Complex>& c, std::size_t len) {
  return Polynomial(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(len, c.size())));
}

}  // namespace

Complex evaluate_polynomial(const Polynomial& p, Complex z) {
  Complex acc(0.0, 0.0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
  return acc;
}

LaurentPoly LaurentPoly::from_coefficients(std::vector<Complex> c) {
  if (c.size() % 2 != 1) throw InvalidArgument("Laurent coefficients need odd length 2M+1");
  LaurentPoly p;
  p.order = static_cast<int>(c.size() / 2);
  p.coefficients = std::move(c);
  return p;
}

Complex LaurentPoly::coefficient(int m) const {
  if (m < -order || m > order) return Complex(0.0, 0.0);
  return coefficients[static_cast<std::size_t>(m + order)];
}

Complex LaurentPoly::evaluate(Complex z) const {
  Complex acc(0.0, 0.0);
  for (int m = order; m >= -order; --m) acc = acc * z + coefficients[m + order];
  return acc * std::pow(z, -order);
}

double LaurentPoly::max_on_circle(int samples) const {
  double best = 0.0;
  for (int k = 0; k < samples; ++k) {
    best = std::max(best, std::abs(evaluate(std::polar(1.0, 2.0 * kPi * k / samples))));
  }
  return best;
}

LaurentPoly LaurentPoly::scaled(double s) const {
  LaurentPoly out = *this;
  for (auto& c : out.coefficients) c *= s;
  return out;
}

bool is_admissible(const LaurentPoly& p, int samples) {
  return p.max_on_circle(samples) <= 1.0 + kAdmissibilitySlack;
}

Eigen::Matrix2cd rotation(double theta, double phi, double lambda) {
  double c = std::cos(theta);
  double s = std::sin(theta);
  Eigen::Matrix2cd r;
  r << std::polar(c, lambda + phi), std::polar(s, phi), std::polar(s, lambda), Complex(-c, 0.0);
  return r;
}

ShiftedPoly monomial_shift(const LaurentPoly& p) {
  if (static_cast<int>(p.coefficients.size()) != 2 * p.order + 1) {
    throw InvalidArgument("Laurent polynomial has inconsistent size");
  }
  return {Polynomial(p.coefficients.begin(), p.coefficients.end()), p.order};
}

Polynomial complete_polynomial(const Polynomial& p) {
  if (p.empty()) throw InvalidArgument("complete_polynomial: empty polynomial");
  const std::size_t d = p.size() - 1;
  Eigen::FFT<double> fft;
  int n = std::max(kMinFftSize, next_pow2(16 * static_cast<long long>(d + 1)));
  for (;; n *= 2) {
    std::vector<Complex> pv = circle_values(fft, p, n);
    double g_min = 1.0;
    double g_max = 0.0;
    std::vector<Complex> half_log(n);
    for (int k = 0; k < n; ++k) {
      double g = 1.0 - std::norm(pv[k]);
      if (g < -kAdmissibilitySlack) throw NumericalError("complete_polynomial: target exceeds 1 on the unit circle");
      g_min = std::min(g_min, g);
      g_max = std::max(g_max, g);
      half_log[k] = Complex(0.5 * std::log(std::max(g, 1e-300)), 0.0);
    }
    if (g_max < kDegenerateFloor) return Polynomial(d + 1, Complex(0.0, 0.0));
    if (g_min <= kDegenerateFloor) {
      std::ostringstream msg;
      msg << "degenerate completion: |P| reaches 1 within " << kDegenerateFloor
          << " on the unit circle; rescale the target by (1 - 1e-6)";
      throw NumericalError(msg.str());
    }
    // Keep the analytic half of the cepstrum; exp of it is minimum phase.
    std::vector<Complex> cep = circle_coefficients(fft, half_log);
    std::vector<Complex> analytic(n, Complex(0.0, 0.0));
    analytic[0] = cep[0];
    for (int k = 1; k < n / 2; ++k) analytic[k] = 2.0 * cep[k];
    analytic[n / 2] = cep[n / 2];
    std::vector<Complex> hv = circle_values(fft, analytic, n);
    for (auto& v : hv) v = std::exp(v);
    Polynomial outer = trim_to(circle_coefficients(fft, hv), d + 1);
    // Reverse and conjugate: roots move inside the disk, the modulus on the
    // circle is unchanged and the leading coefficient exp(c_0) is real positive.
    Polynomial q(d + 1);
    for (std::size_t i = 0; i <= d; ++i) q[i] = std::conj(outer[d - i]);
    if (completion_residual(p, q) <= kCompletionTarget || n >= kMaxFftSize) {
      if (completion_residual(p, q) > 1e-9) {
        throw NumericalError("complete_polynomial: spectral factorization did not converge");
      }
      Complex lead = q[d];
      if (std::abs(lead) > 0.0) {
        Complex phase = std::conj(lead) / std::abs(lead);
        for (auto& c : q) c *= phase;
      }
      return q;
    }
  }
}

double completion_residual(const Polynomial& p, const Polynomial& q, int samples) {
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    Complex z = std::polar(1.0, 2.0 * kPi * (k + 0.5) / samples);
    worst = std::max(worst, std::abs(std::norm(evaluate_polynomial(p, z)) + std::norm(evaluate_polynomial(q, z)) - 1.0));
  }
  return worst;
}

GqspAngles synthesize_angles(const Polynomial& p_in, const Polynomial& q_in) {
  if (p_in.empty()) throw InvalidArgument("synthesize_angles: empty polynomial");
  std::size_t d = std::max(p_in.size(), q_in.size()) - 1;
  Polynomial p = p_in;
  Polynomial q = q_in;
  p.resize(d + 1, Complex(0.0, 0.0));
  q.resize(d + 1, Complex(0.0, 0.0));
  GqspAngles out;
  out.degree = static_cast<int>(d);
  out.theta.assign(d + 1, 0.0);
  out.phi.assign(d + 1, 0.0);
  for (std::size_t j = d; j >= 1; --j) {
    double top_mag = std::abs(p[j]) + std::abs(q[j]);
    double low_mag = std::abs(p[0]) + std::abs(q[0]);
    double theta, phi;
    if (std::max(top_mag, low_mag) < kPeelFloor) {
      std::ostringstream msg;
      msg << "peeling instability at layer " << j << ": coefficient magnitudes below " << kPeelFloor;
      throw NumericalError(msg.str());
    }
    if (top_mag >= low_mag) {
      theta = std::atan2(std::abs(q[j]), std::abs(p[j]));
      phi = std::arg(p[j]) - std::arg(q[j]);
    } else {
      theta = std::atan2(std::abs(p[0]), std::abs(q[0]));
      phi = std::arg(p[0]) - std::arg(q[0]) - kPi;
    }
    out.theta[j] = theta;
    out.phi[j] = phi;
    double c = std::cos(theta);
    double s = std::sin(theta);
    Complex e = std::polar(1.0, -phi);
    Polynomial np(j), nq(j);
    // R^dagger [P, Q]: the top row loses its constant term, the bottom row its z^j term.
    for (std::size_t i = 0; i < j; ++i) {
      np[i] = e * c * p[i + 1] + s * q[i + 1];
      nq[i] = e * s * p[i] - c * q[i];
    }
    p = std::move(np);
    q = std::move(nq);
  }
  out.lambda = std::abs(q[0]) > 0.0 ? std::arg(q[0]) : 0.0;
  out.theta[0] = std::atan2(std::abs(q[0]), std::abs(p[0]));
  out.phi[0] = (std::abs(p[0]) > 0.0 ? std::arg(p[0]) : 0.0) - out.lambda;
  return out;
}

DenseOperator gqsp_apply(const GqspAngles& angles, const DenseOperator& u) {
  if (u.rows() != u.cols()) throw InvalidArgument("gqsp_apply: signal unitary must be square");
  if (static_cast<int>(angles.theta.size()) != angles.degree + 1 ||
      static_cast<int>(angles.phi.size()) != angles.degree + 1) {
    throw InvalidArgument("gqsp_apply: angle vectors must have degree + 1 entries");
  }
  const Eigen::Index n = u.rows();
  auto apply_rotation = [n](DenseOperator& m, const Eigen::Matrix2cd& r) {
    DenseOperator top = m.topRows(n);
    DenseOperator bot = m.bottomRows(n);
    m.topRows(n) = r(0, 0) * top + r(0, 1) * bot;
    m.bottomRows(n) = r(1, 0) * top + r(1, 1) * bot;
  };
  DenseOperator m = DenseOperator::Identity(2 * n, 2 * n);
  apply_rotation(m, rotation(angles.theta[0], angles.phi[0], angles.lambda));
  for (int j = 1; j <= angles.degree; ++j) {
    m.topRows(n) = u * m.topRows(n);
    apply_rotation(m, rotation(angles.theta[j], angles.phi[j], 0.0));
  }
  return m;
}

DenseOperator extract_block(const DenseOperator& full, BlockPosition which) {
  if (full.rows() != full.cols() || full.rows() % 2 != 0) {
    throw InvalidArgument("extract_block: need a square matrix of even dimension");
  }
  Eigen::Index n = full.rows() / 2;
  switch (which) {
    case BlockPosition::kTopLeft:
      return full.topLeftCorner(n, n);
    case BlockPosition::kBottomLeft:
      return full.bottomLeftCorner(n, n);
    case BlockPosition::kTopRight:
      return full.topRightCorner(n, n);
    default:
      return full.bottomRightCorner(n, n);
  }
}

DenseOperator direct_poly_apply(const LaurentPoly& p, const DenseOperator& u) {
  if (u.rows() != u.cols()) throw InvalidArgument("direct_poly_apply: need a square matrix");
  const Eigen::Index n = u.rows();
  DenseOperator out = p.coefficient(0) * DenseOperator::Identity(n, n);
  DenseOperator up = DenseOperator::Identity(n, n);
  DenseOperator down = DenseOperator::Identity(n, n);
  DenseOperator u_dag = u.adjoint();
  for (int m = 1; m <= p.order; ++m) {
    up = up * u;
    down = down * u_dag;
    out += p.coefficient(m) * up + p.coefficient(-m) * down;
  }
  return out;
}

DenseOperator unitary_power(const DenseOperator& u, long long power) {
  DenseOperator base = power >= 0 ? DenseOperator(u) : DenseOperator(u.adjoint());
  unsigned long long e = static_cast<unsigned long long>(power >= 0 ? power : -power);
  DenseOperator result = DenseOperator::Identity(u.rows(), u.cols());
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

double verify_block(const GqspAngles& angles, const DenseOperator& u, const LaurentPoly& p, int shift) {
  DenseOperator block = extract_block(gqsp_apply(angles, u));
  DenseOperator reference = unitary_power(u, shift) * direct_poly_apply(p, u);
  return max_abs(block - reference);
}

GqspProgram prepare_gqsp(const LaurentPoly& target, double rescale) {
  if (!(rescale > 0.0 && rescale <= 1.0)) throw InvalidArgument("prepare_gqsp: rescale must lie in (0, 1]");
  double peak = target.max_on_circle();
  if (peak > 1.0 + kAdmissibilitySlack) {
    std::ostringstream msg;
    msg << "target is not admissible: max |P| on the unit circle is " << peak;
    throw NumericalError(msg.str());
  }
  GqspProgram prog;
  prog.target = target;
  prog.rescale = rescale;
  prog.synthesized = target.scaled(rescale);
  prog.shifted = monomial_shift(prog.synthesized);
  prog.complement = complete_polynomial(prog.shifted.poly);
  prog.completion_residual = completion_residual(prog.shifted.poly, prog.complement);
  prog.angles = synthesize_angles(prog.shifted.poly, prog.complement);
  return prog;
}

std::string polynomial_hash(const Polynomial& p) {
  std::string text;
  for (const Complex& c : p) {
    text += format_double(c.real());
    text += ',';
    text += format_double(c.imag());
    text += ';';
  }
  return sha256_hex(text);
}

std::string angles_to_json(const GqspAngles& angles, std::string_view target_hash) {
  nlohmann::ordered_json doc;
  doc["degree"] = angles.degree;
  doc["theta"] = angles.theta;
  doc["phi"] = angles.phi;
  doc["lambda"] = angles.lambda;
  doc["target_hash"] = std::string(target_hash);
  return doc.dump(2);
}

GqspAngles angles_from_json(std::string_view text, std::string* target_hash) {
  try {
    nlohmann::json doc = nlohmann::json::parse(text);
    GqspAngles a;
    a.degree = doc.at("degree").get<int>();
    a.theta = doc.at("theta").get<std::vector<double>>();
    a.phi = doc.at("phi").get<std::vector<double>>();
    a.lambda = doc.at("lambda").get<double>();
    if (static_cast<int>(a.theta.size()) != a.degree + 1 || static_cast<int>(a.phi.size()) != a.degree + 1) {
      throw InvalidArgument("angle JSON: vectors must have degree + 1 entries");
    }
    if (target_hash) *target_hash = doc.at("target_hash").get<std::string>();
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("angle JSON: ") + e.what());
  }
}

}  // namespace trotterz
