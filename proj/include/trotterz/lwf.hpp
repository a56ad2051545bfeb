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

#ifndef TROTTERZ_LWF_HPP
#define TROTTERZ_LWF_HPP

#include <span>
#include <vector>

#include "trotterz/dense.hpp"
#include "trotterz/stats.hpp"

namespace trotterz {

/// exp(-beta (x + 1))
double shifted_boltzmann(double beta, double x);

/// Taylor coefficients a_k = e^{-beta} (-beta)^k / k!, k = 0..order.
struct TaylorSeries {
  double beta = 0.0;
  int order = 0;
  std::vector<double> coefficients;
  double one_norm = 0.0;
};

TaylorSeries gibbs_taylor(double beta, int order);

/// e^{-beta} sum_{k > order} beta^k / k!, which bounds the Taylor remainder on [-1, 1].
double taylor_tail(double beta, int order);

/// Smallest K with taylor_tail(beta, K) < eps / 8.
int taylor_order_for(double beta, double eps);

/// Power-series coefficients of (arcsin(y) / (pi/2))^k up to y^max_degree.
std::vector<double> arcsin_series(int k, int max_degree);

/// max(2 ceil(ln(4 ||a||_1 / eps) / delta), 0)
int lwf_order(double beta, double delta, double eps, double one_norm_a);

/// Smallest L whose arcsin remainder ||a||_1 cos(pi delta / 2)^(L+1) is below eps / 8.
int arcsin_order_for(double delta, double eps, double one_norm_a);

struct LwfErrorBudget {
  double taylor_tail = 0.0;
  double arcsin_tail = 0.0;
  double binomial_tail = 0.0;

  double total() const { return taylor_tail + arcsin_tail + binomial_tail; }
};

/// sum_{m=-M..M} c_m exp(i pi m x / 2) approximating exp(-beta (x + 1)) on
/// [-1 + delta, 1 - delta].
struct FourierApprox {
  double beta = 0.0;
  double delta = 0.0;
  int order = 0;
  /// c_{-M}, ..., c_M
  std::vector<Complex> coefficients;
  double one_norm = 0.0;
  int taylor_order = 0;
  int arcsin_order = 0;
  /// Requested accuracy; zero for fixed-size assemblies.
  double eps = 0.0;
  LwfErrorBudget budget;

  Complex coefficient(int m) const;
  Complex evaluate(double x) const;
};

/// Sized assembly: K, L and M are chosen from eps, and the error budget is
/// verified. Throws NumericalError when eps cannot be met.
FourierApprox lwf_coefficients(const TaylorSeries& ts, double delta, double eps);

/// Assembly with explicit truncations (M = order, L = arcsin_order).
FourierApprox lwf_assemble(const TaylorSeries& ts, double delta, int order, int arcsin_order);

/// Uniform grid of `points` samples on [-1 + delta, 1 - delta].
std::vector<double> lwf_grid(double delta, int points = 1000);

/// max over the grid of |f(x) - sum_m c_m e^{i pi m x / 2}|.
double lwf_sup_error(const FourierApprox& approx, int points = 1000);

struct ScanRow {
  int order = 0;
  /// L used for the row (0 for Taylor rows).
  int arcsin_order = 0;
  double sup_error = 0.0;
};

struct ScanResult {
  double beta = 0.0;
  double delta = 0.0;
  std::vector<ScanRow> rows;
  /// order against ln(1 / sup_error)
  LinearFit fit;
};

/// Best sup error achievable at each M by truncating the assembled series at
/// |m| <= M, optimizing over the arcsin truncation L.
ScanResult truncation_scan(double beta, double delta, std::span<const int> orders);

/// Sup error of the degree-K Taylor polynomial on [-1 + delta, 1 - delta].
ScanResult taylor_scan(double beta, double delta, std::span<const int> orders);

}  // namespace trotterz

#endif
