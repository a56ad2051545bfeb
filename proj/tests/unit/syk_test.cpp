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
#include <string>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trotterz/errors.hpp"
#include "trotterz/syk.hpp"

namespace trotterz {
namespace {

// gamma_{2k-1} = Z^{k-1} X I..., gamma_{2k} = Z^{k-1} Y I..., over sqrt(2).
oracle::Mat majorana_oracle(int index, int n_majorana) {
  int nq = n_majorana / 2;
  int site = (index - 1) / 2;
  std::string s(static_cast<std::size_t>(nq), 'I');
  for (int q = 0; q < site; ++q) s[static_cast<std::size_t>(q)] = 'Z';
  s[static_cast<std::size_t>(site)] = (index % 2 == 1) ? 'X' : 'Y';
  return oracle::pauli_dense(s) / std::sqrt(2.0);
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(8, 4), 70u);
  EXPECT_EQ(binomial(16, 4), 1820u);
  EXPECT_EQ(binomial(4, 4), 1u);
  EXPECT_EQ(binomial(3, 4), 0u);
}

TEST(Couplings, CountOrderAndDeterminism) {
  SykCouplings a = sample_syk(8, 7);
  SykCouplings b = sample_syk(8, 7);
  SykCouplings c = sample_syk(8, 8);
  ASSERT_EQ(a.indices.size(), 70u);
  EXPECT_EQ(a.values, b.values);
  EXPECT_NE(a.values, c.values);
  for (const auto& idx : a.indices) {
    EXPECT_GE(idx[0], 1);
    EXPECT_LT(idx[0], idx[1]);
    EXPECT_LT(idx[1], idx[2]);
    EXPECT_LT(idx[2], idx[3]);
    EXPECT_LE(idx[3], 8);
  }
}

TEST(Couplings, VarianceFollowsRule) {
  const int n = 16;
  double sum = 0.0;
  double sq = 0.0;
  int count = 0;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    SykCouplings c = sample_syk(n, seed);
    for (double v : c.values) {
      sum += v;
      sq += v * v;
      ++count;
    }
  }
  double var = sq / count - (sum / count) * (sum / count);
  double want = 6.0 / (n * n * n);
  EXPECT_NEAR(var / want, 1.0, 0.1);
  EXPECT_NEAR(sum / count, 0.0, 5.0 * std::sqrt(want / count));
}

TEST(Couplings, RejectsOddCount) {
  EXPECT_THROW(sample_syk(7, 1), InvalidArgument);
  EXPECT_THROW(sample_syk(2, 1), InvalidArgument);
}

TEST(JordanWigner, CliffordAlgebra) {
  const int n = 8;
  for (int i = 1; i <= n; ++i) {
    MajoranaString gi = jordan_wigner_majorana(i, n);
    oracle::Mat mi = gi.prefactor * oracle::pauli_dense(gi.string.letters_string()) * gi.string.phase();
    EXPECT_LT(oracle::max_abs(mi - majorana_oracle(i, n)), 1e-15);
    for (int j = 1; j <= n; ++j) {
      oracle::Mat mj = majorana_oracle(j, n);
      oracle::Mat anti = mi * mj + mj * mi;
      oracle::Mat want = oracle::Mat::Zero(16, 16);
      if (i == j) want = oracle::Mat::Identity(16, 16);
      EXPECT_LT(oracle::max_abs(anti - want), 1e-15);
    }
  }
}

TEST(SykHamiltonian, MatchesMajoranaProducts) {
  for (int n : {4, 8}) {
    SykCouplings c = sample_syk(n, 3);
    HamiltonianTerms h = build_syk_hamiltonian(c);
    const Eigen::Index dim = Eigen::Index{1} << (n / 2);
    oracle::Mat want = oracle::Mat::Zero(dim, dim);
    for (std::size_t t = 0; t < c.indices.size(); ++t) {
      const auto& q = c.indices[t];
      want += c.values[t] * majorana_oracle(q[0], n) * majorana_oracle(q[1], n) * majorana_oracle(q[2], n) *
              majorana_oracle(q[3], n);
    }
    want /= 96.0;
    EXPECT_LT(oracle::max_abs(hamiltonian_dense(h) - want), 1e-15);
    EXPECT_TRUE(is_hermitian(hamiltonian_dense(h)));
  }
}

TEST(SykHamiltonian, ConstantCouplingsSingleTerm) {
  HamiltonianTerms h = build_syk_hamiltonian(constant_syk(4, 1.0));
  ASSERT_EQ(h.size(), 1u);
  // gamma1 gamma2 gamma3 gamma4 = (1/4) (iZ)(iZ) on two qubits after JW.
  EXPECT_NEAR(std::abs(h.terms[0].coeff), 1.0 / (96.0 * 4.0), 1e-17);
  EXPECT_EQ(h.terms[0].string.letters_string(), "ZZ");
}

}  // namespace
}  // namespace trotterz
