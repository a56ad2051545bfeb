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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trotterz/errors.hpp"
#include "trotterz/gqsp.hpp"

namespace trotterz {
namespace {

LaurentPoly random_target(std::mt19937& rng, int order) {
  std::normal_distribution<double> nd;
  std::vector<Complex> c(static_cast<std::size_t>(2 * order + 1));
  for (auto& v : c) v = Complex(nd(rng), nd(rng));
  LaurentPoly p = LaurentPoly::from_coefficients(c);
  double peak = 0.0;
  for (int i = 0; i < 8192; ++i) peak = std::max(peak, std::abs(p.evaluate(std::polar(1.0, 2 * std::numbers::pi * i / 8192))));
  return p.scaled(0.9 / peak);
}

TEST(Laurent, EvaluateAndCoefficients) {
  LaurentPoly p = LaurentPoly::from_coefficients({Complex(1, 0), Complex(2, 0), Complex(3, 0)});
  EXPECT_EQ(p.order, 1);
  EXPECT_EQ(p.coefficient(-1), Complex(1, 0));
  EXPECT_EQ(p.coefficient(1), Complex(3, 0));
  EXPECT_EQ(p.coefficient(2), Complex(0, 0));
  Complex z = std::polar(1.0, 0.3);
  EXPECT_LT(std::abs(p.evaluate(z) - (1.0 / z + 2.0 + 3.0 * z)), 1e-15);
  EXPECT_NEAR(p.max_on_circle(), 6.0, 1e-12);
  EXPECT_FALSE(is_admissible(p));
  EXPECT_TRUE(is_admissible(p.scaled(1.0 / 6.0)));
  EXPECT_THROW(LaurentPoly::from_coefficients({Complex(1, 0), Complex(1, 0)}), InvalidArgument);
}

TEST(Rotation, Unitary) {
  Eigen::Matrix2cd r = rotation(0.3, 1.1, -0.4);
  EXPECT_LT((r * r.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Completion, IdentityOnCircle) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    LaurentPoly t = random_target(rng, 1 + trial % 6);
    ShiftedPoly sp = monomial_shift(t);
    EXPECT_EQ(sp.shift, t.order);
    Polynomial q = complete_polynomial(sp.poly);
    for (int i = 0; i < 777; ++i) {
      Complex z = std::polar(1.0, 0.0123 + 2 * std::numbers::pi * i / 777);
      double s = std::norm(evaluate_polynomial(sp.poly, z)) + std::norm(evaluate_polynomial(q, z));
      EXPECT_NEAR(s, 1.0, 1e-10);
    }
    EXPECT_LT(completion_residual(sp.poly, q), 1e-10);
  }
}

TEST(Completion, RejectsInadmissible) {
  Polynomial p = {Complex(0.8, 0), Complex(0.8, 0)};
  EXPECT_THROW(complete_polynomial(p), Error);
}

TEST(Synthesis, BlockMatchesDirectEvaluation) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    LaurentPoly t = random_target(rng, 1 + trial % 5);
    GqspProgram prog = prepare_gqsp(t);
    DenseOperator u = oracle::random_unitary(8, static_cast<unsigned>(trial));
    EXPECT_LT(verify_block(prog.angles, u, prog.synthesized, prog.shifted.shift), 1e-9);
    // independent: U^shift * sum_m c_m U^m via eigen-decomposition of U
    Eigen::ComplexEigenSolver<DenseOperator> es(u);
    Eigen::VectorXcd d(8);
    for (int i = 0; i < 8; ++i) {
      Complex z = es.eigenvalues()(i);
      d(i) = std::pow(z, prog.shifted.shift) * prog.synthesized.evaluate(z);
    }
    DenseOperator want = es.eigenvectors() * d.asDiagonal() * es.eigenvectors().inverse();
    DenseOperator got = extract_block(gqsp_apply(prog.angles, u));
    EXPECT_LT(oracle::max_abs(got - want), 1e-9);
  }
}

TEST(Synthesis, CircuitIsUnitary) {
  std::mt19937 rng(3);
  GqspProgram prog = prepare_gqsp(random_target(rng, 3));
  DenseOperator full = gqsp_apply(prog.angles, oracle::random_unitary(4, 9));
  EXPECT_TRUE(is_unitary(full));
  EXPECT_EQ(full.rows(), 8);
}

TEST(Powers, NegativeUsesAdjoint) {
  DenseOperator u = oracle::random_unitary(4, 3);
  EXPECT_LT(max_abs(unitary_power(u, -3) * unitary_power(u, 3) - DenseOperator::Identity(4, 4)), 1e-13);
  EXPECT_LT(max_abs(unitary_power(u, 2) - u * u), 1e-14);
  EXPECT_LT(max_abs(unitary_power(u, 0) - DenseOperator::Identity(4, 4)), 1e-15);
}

TEST(Blocks, Extraction) {
  DenseOperator m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Complex(i * 4 + j, 0);
  EXPECT_EQ(extract_block(m)(1, 1), Complex(5, 0));
  EXPECT_EQ(extract_block(m, BlockPosition::kBottomLeft)(0, 0), Complex(8, 0));
  EXPECT_EQ(extract_block(m, BlockPosition::kTopRight)(0, 0), Complex(2, 0));
  EXPECT_EQ(extract_block(m, BlockPosition::kBottomRight)(1, 1), Complex(15, 0));
}

TEST(Serialization, AnglesRoundTripAndHash) {
  std::mt19937 rng(4);
  GqspProgram prog = prepare_gqsp(random_target(rng, 2));
  std::string h = polynomial_hash(prog.shifted.poly);
  EXPECT_EQ(h.size(), 64u);
  EXPECT_EQ(h, polynomial_hash(prog.shifted.poly));
  Polynomial other = prog.shifted.poly;
  other[0] += 1e-12;
  EXPECT_NE(h, polynomial_hash(other));
  std::string hash_back;
  GqspAngles back = angles_from_json(angles_to_json(prog.angles, h), &hash_back);
  EXPECT_EQ(hash_back, h);
  EXPECT_EQ(back.degree, prog.angles.degree);
  EXPECT_EQ(back.theta, prog.angles.theta);
  EXPECT_EQ(back.phi, prog.angles.phi);
  EXPECT_EQ(back.lambda, prog.angles.lambda);
  EXPECT_THROW(angles_from_json("{}"), InvalidArgument);
}

TEST(DirectApply, MatchesPowers) {
  LaurentPoly p = LaurentPoly::from_coefficients({Complex(0.1, 0), Complex(0.2, 0.1), Complex(0.3, 0)});
  DenseOperator u = oracle::random_unitary(4, 8);
  DenseOperator want = 0.1 * u.adjoint() + Complex(0.2, 0.1) * DenseOperator::Identity(4, 4) + 0.3 * u;
  EXPECT_LT(max_abs(direct_poly_apply(p, u) - want), 1e-15);
}

}  // namespace
}  // namespace trotterz
