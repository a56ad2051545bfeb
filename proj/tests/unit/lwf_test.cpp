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
#include <vector>

#include <gtest/gtest.h>

#include "trotterz/errors.hpp"
#include "trotterz/lwf.hpp"

namespace trotterz {
namespace {

double poly_at(const std::vector<double>& c, double y) {
  double acc = 0.0;
  double p = 1.0;
  for (double v : c) {
    acc += v * p;
    p *= y;
  }
  return acc;
}

// Independent Fourier evaluation: sum_m c_m (cos + i sin)(pi m x / 2).
std::complex<double> fourier_at(const FourierApprox& a, double x) {
  std::complex<double> acc = 0.0;
  for (int m = -a.order; m <= a.order; ++m) {
    double ang = std::numbers::pi * m * x / 2.0;
    acc += a.coefficients[static_cast<std::size_t>(m + a.order)] * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

TEST(Taylor, Coefficients) {
  TaylorSeries ts = gibbs_taylor(2.0, 5);
  ASSERT_EQ(ts.coefficients.size(), 6u);
  double fact = 1.0;
  double norm = 0.0;
  for (int k = 0; k <= 5; ++k) {
    if (k > 0) fact *= k;
    double want = std::exp(-2.0) * std::pow(-2.0, k) / fact;
    EXPECT_NEAR(ts.coefficients[static_cast<std::size_t>(k)], want, 1e-15);
    norm += std::abs(want);
  }
  EXPECT_NEAR(ts.one_norm, norm, 1e-15);
  EXPECT_THROW(gibbs_taylor(-1.0, 3), InvalidArgument);
}

TEST(Taylor, TailMatchesDirectSum) {
  for (double beta : {0.5, 2.0, 8.0}) {
    for (int k : {0, 3, 10, 25}) {
      double direct = 0.0;
      double term = std::exp(-beta);
      for (int j = 1; j <= 200; ++j) {
        term *= beta / j;
        if (j > k) direct += term;
      }
      EXPECT_NEAR(taylor_tail(beta, k), direct, 1e-15 + 1e-12 * direct);
    }
  }
  EXPECT_EQ(taylor_tail(0.0, 3), 0.0);
}

TEST(Taylor, OrderSelection) {
  int k = taylor_order_for(4.0, 1e-8);
  EXPECT_LT(taylor_tail(4.0, k), 1e-8 / 8.0);
  EXPECT_GE(taylor_tail(4.0, k - 1), 1e-8 / 8.0);
}

TEST(Arcsin, SeriesApproachesNormalizedArcsin) {
  std::vector<double> s = arcsin_series(1, 401);
  for (double y : {0.1, 0.5, 0.8}) EXPECT_NEAR(poly_at(s, y), std::asin(y) / (std::numbers::pi / 2.0), 1e-12);
  std::vector<double> s2 = arcsin_series(2, 401);
  EXPECT_NEAR(poly_at(s2, 0.5), std::pow(1.0 / 3.0, 2), 1e-12);
  std::vector<double> s0 = arcsin_series(0, 5);
  EXPECT_EQ(s0[0], 1.0);
  for (std::size_t i = 1; i < s0.size(); ++i) EXPECT_EQ(s0[i], 0.0);
}

TEST(LwfOrder, FormulaArithmetic) {
  // 2 ceil(ln(4 / 1e-6) / 0.5) = 2 ceil(30.41) = 62
  EXPECT_EQ(lwf_order(1.0, 0.5, 1e-6, 1.0), 62);
  EXPECT_EQ(lwf_order(1.0, 0.5, 1e-6, 0.0), 0);
  EXPECT_THROW(lwf_order(1.0, 1.0, 1e-6, 1.0), InvalidArgument);
  EXPECT_THROW(lwf_order(1.0, 0.5, 0.0, 1.0), InvalidArgument);
  int l = arcsin_order_for(0.25, 1e-6, 2.0);
  double y = std::cos(std::numbers::pi * 0.125);
  EXPECT_LE(2.0 * std::pow(y, l), 1e-6 / 8.0);
  EXPECT_GT(2.0 * std::pow(y, l - 1), 1e-6 / 8.0);
}

TEST(LwfCoefficients, MeetsCertificate) {
  for (double beta : {1.0, 2.0, 4.0}) {
    const double delta = 0.5 / beta;
    const double eps = 1e-6;
    FourierApprox a = lwf_coefficients(gibbs_taylor(beta, taylor_order_for(beta, eps)), delta, eps);
    EXPECT_LE(a.budget.total(), eps);
    double worst = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      double x = -1.0 + delta + (2.0 - 2.0 * delta) * i / 2000.0;
      worst = std::max(worst, std::abs(fourier_at(a, x) - std::exp(-beta * (x + 1.0))));
    }
    EXPECT_LE(worst, eps) << "beta " << beta;
    EXPECT_LE(lwf_sup_error(a), eps);
    for (int m = 0; m <= a.order; ++m) EXPECT_LT(std::abs(a.coefficient(m) - std::conj(a.coefficient(-m))), 1e-15);
    EXPECT_EQ(a.coefficient(a.order + 1), Complex(0.0, 0.0));
    EXPECT_LT(std::abs(a.evaluate(0.1) - fourier_at(a, 0.1)), 1e-13);
  }
}

TEST(LwfCoefficients, UnattainableRaises) {
  TaylorSeries coarse = gibbs_taylor(4.0, 2);
  EXPECT_THROW(lwf_coefficients(coarse, 0.25, 1e-8), NumericalError);
}

TEST(Scan, TruncationErrorFallsLinearly) {
  const double beta = 2.0;
  const double delta = 0.25;
  std::vector<int> orders;
  for (int j = 1; j <= 8; ++j) orders.push_back(6 * j);
  ScanResult r = truncation_scan(beta, delta, orders);
  ASSERT_EQ(r.rows.size(), orders.size());
  for (std::size_t i = 1; i < r.rows.size(); ++i) EXPECT_LE(r.rows[i].sup_error, r.rows[i - 1].sup_error);
  EXPECT_GT(r.fit.slope, 0.0);
  EXPECT_GE(r.fit.r_squared, 0.95);
}

TEST(Scan, TaylorErrorsDecrease) {
  std::vector<int> ks = {2, 4, 6, 8, 10, 12};
  ScanResult r = taylor_scan(1.0, 0.5, ks);
  for (std::size_t i = 1; i < r.rows.size(); ++i) EXPECT_LT(r.rows[i].sup_error, r.rows[i - 1].sup_error);
  // degree-K Taylor error at x = -1 + delta is the tail of the series there
  EXPECT_LT(r.rows.back().sup_error, taylor_tail(1.0, 12));
}

TEST(Grid, Endpoints) {
  std::vector<double> g = lwf_grid(0.25, 5);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g.front(), -0.75);
  EXPECT_DOUBLE_EQ(g.back(), 0.75);
}

}  // namespace
}  // namespace trotterz
