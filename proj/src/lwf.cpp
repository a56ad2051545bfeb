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

#include "trotterz/lwf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "trotterz/errors.hpp"

namespace trotterz {

namespace {

constexpr double kPi = std::numbers::pi;

void require_open_unit(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    std::ostringstream msg;
    msg << name << " must lie in (0, 1), got " << v;
    throw InvalidArgument(msg.str());
  }
}

// Neumaier compensated sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

// Coefficients of arcsin(y) / (pi/2) up to y^max_degree.
std::vector<double> arcsin_base(int max_degree) {
  std::vector<double> s(static_cast<std::size_t>(max_degree) + 1, 0.0);
  double c = 1.0;
  for (int n = 0; 2 * n + 1 <= max_degree; ++n) {
    if (n > 0) c *= (2.0 * n - 1.0) * (2.0 * n - 1.0) / ((2.0 * n) * (2.0 * n + 1.0));
    s[2 * n + 1] = c * 2.0 / kPi;
  }
  return s;
}

// (series * s) truncated to the length of series; s is odd.
std::vector<double> times_odd(const std::vector<double>& series, const std::vector<double>& s) {
  std::size_t len = series.size();
  std::vector<double> out(len, 0.0);
  for (std::size_t i = 0; i < len; ++i) {
    double v = series[i];
    if (v == 0.0) continue;
    for (std::size_t n = 1; i + n < len; n += 2) out[i + n] += v * s[n];
  }
  return out;
}

// B_l = sum_k a_k b_l^k by Horner composition with the arcsin series.
std::vector<double> compose_with_arcsin(const std::vector<double>& a, int arcsin_order) {
  std::vector<double> s = arcsin_base(arcsin_order);
  std::vector<double> result(static_cast<std::size_t>(arcsin_order) + 1, 0.0);
  if (a.empty()) return result;
  result[0] = a.back();
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    result = times_odd(result, s);
    result[0] += a[k];
  }
  return result;
}

// binom(l, floor(l/2)) / 2^l in extended precision.
std::vector<long double> central_binomial_pmf(int max_l) {
  std::vector<long double> out(static_cast<std::size_t>(max_l) + 1);
  long double even = 1.0L;  // C(2n, n) / 4^n
  for (int l = 0; l <= max_l; ++l) {
    int n = l / 2;
    if (l % 2 == 0) {
      if (n > 0) even *= static_cast<long double>(2 * n - 1) / static_cast<long double>(2 * n);
      out[l] = even;
    } else {
      out[l] = even * static_cast<long double>(2 * n + 1) / static_cast<long double>(2 * (n + 1));
    }
  }
  return out;
}

struct Assembly {
  std::vector<Complex> coefficients;
  double binomial_tail = 0.0;
};

// c_j = sum_l B_l i^l (-1)^m binom(l, m) / 2^l with j = 2m - l, kept for |j| <= order.
Assembly assemble(const std::vector<double>& b, int arcsin_order, int order,
                  const std::vector<long double>& central) {
  std::vector<CompensatedSum> re(2 * order + 1), im(2 * order + 1);
  Assembly out;
  CompensatedSum tail;
  for (int l = 0; l <= arcsin_order; ++l) {
    double bl = b[l];
    if (bl == 0.0) continue;
    int m_lo = std::max(0, static_cast<int>(std::ceil((l - order) / 2.0)));
    int m_hi = std::min(l, static_cast<int>(std::floor((l + order) / 2.0)));
    int m0 = l / 2;
    long double window_mass = 0.0L;
    if (m_lo <= m0 && m0 <= m_hi) {
      auto deposit = [&](int m, long double p) {
        window_mass += p;
        int j = 2 * m - l;
        double v = bl * static_cast<double>(p) * ((m % 2 == 0) ? 1.0 : -1.0);
        switch (l % 4) {
          case 0:
            re[j + order].add(v);
            break;
          case 1:
            im[j + order].add(v);
            break;
          case 2:
            re[j + order].add(-v);
            break;
          default:
            im[j + order].add(-v);
            break;
        }
      };
      long double p = central[l];
      deposit(m0, p);
      for (int m = m0; m < m_hi; ++m) {
        p *= static_cast<long double>(l - m) / static_cast<long double>(m + 1);
        deposit(m + 1, p);
      }
      p = central[l];
      for (int m = m0; m > m_lo; --m) {
        p *= static_cast<long double>(m) / static_cast<long double>(l - m + 1);
        deposit(m - 1, p);
      }
    }
    double outside = std::max(0.0, static_cast<double>(1.0L - window_mass));
    tail.add(std::abs(bl) * outside);
  }
  out.coefficients.resize(2 * order + 1);
  for (int j = 0; j < 2 * order + 1; ++j) out.coefficients[j] = Complex(re[j].value(), im[j].value());
  out.binomial_tail = tail.value();
  return out;
}

double coefficient_one_norm(const std::vector<Complex>& c) {
  double s = 0.0;
  for (const Complex& v : c) s += std::abs(v);
  return s;
}

double grid_sup_error(const FourierApprox& approx, int points) {
  double worst = 0.0;
  for (double x : lwf_grid(approx.delta, points)) {
    worst = std::max(worst, std::abs(Complex(shifted_boltzmann(approx.beta, x), 0.0) - approx.evaluate(x)));
  }
  return worst;
}

}  // namespace

double shifted_boltzmann(double beta, double x) { return std::exp(-beta * (x + 1.0)); }

TaylorSeries gibbs_taylor(double beta, int order) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw InvalidArgument("gibbs_taylor: beta must be finite and >= 0");
  if (order < 0) throw InvalidArgument("gibbs_taylor: order must be >= 0");
  TaylorSeries ts;
  ts.beta = beta;
  ts.order = order;
  ts.coefficients.resize(static_cast<std::size_t>(order) + 1);
  double a = std::exp(-beta);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) a *= -beta / k;
    ts.coefficients[k] = a;
    ts.one_norm += std::abs(a);
  }
  return ts;
}

double taylor_tail(double beta, int order) {
  if (beta == 0.0) return 0.0;
  double log_term = -beta + (order + 1) * std::log(beta) - std::lgamma(order + 2.0);
  double term = std::exp(log_term);
  double sum = 0.0;
  for (int k = order + 1; k < order + 100000; ++k) {
    sum += term;
    term *= beta / (k + 1);
    if (k > beta && term < 1e-20 * sum) break;
    if (term == 0.0) break;
  }
  return sum;
}

int taylor_order_for(double beta, double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("taylor_order_for: eps must be positive");
  int k = 0;
  while (taylor_tail(beta, k) >= eps / 8.0) {
    if (++k > 100000) throw NumericalError("taylor_order_for: no order reaches the requested tail");
  }
  return k;
}

std::vector<double> arcsin_series(int k, int max_degree) {
  if (k < 0 || max_degree < 0) throw InvalidArgument("arcsin_series: k and degree must be >= 0");
  std::vector<double> s = arcsin_base(max_degree);
  std::vector<double> out(static_cast<std::size_t>(max_degree) + 1, 0.0);
  out[0] = 1.0;
  for (int i = 0; i < k; ++i) out = times_odd(out, s);
  return out;
}

int lwf_order(double /*beta*/, double delta, double eps, double one_norm_a) {
  require_open_unit(delta, "delta");
  require_open_unit(eps, "eps");
  if (!(one_norm_a >= 0.0)) throw InvalidArgument("lwf_order: ||a||_1 must be >= 0");
  if (one_norm_a == 0.0) return 0;
  double v = std::log(4.0 * one_norm_a / eps) / delta;
  return std::max(2 * static_cast<int>(std::ceil(v)), 0);
}

int arcsin_order_for(double delta, double eps, double one_norm_a) {
  require_open_unit(delta, "delta");
  if (!(eps > 0.0)) throw InvalidArgument("arcsin_order_for: eps must be positive");
  if (one_norm_a == 0.0) return 0;
  double y = std::cos(kPi * delta / 2.0);
  double need = std::log(8.0 * one_norm_a / eps) / -std::log(y);
  return std::max(0, static_cast<int>(std::ceil(need)));
}

Complex FourierApprox::coefficient(int m) const {
  if (m < -order || m > order) return Complex(0.0, 0.0);
  return coefficients[static_cast<std::size_t>(m + order)];
}

Complex FourierApprox::evaluate(double x) const {
  Complex sum(0.0, 0.0);
  for (int m = -order; m <= order; ++m) sum += coefficients[m + order] * std::polar(1.0, kPi * m * x / 2.0);
  return sum;
}

FourierApprox lwf_assemble(const TaylorSeries& ts, double delta, int order, int arcsin_order) {
  require_open_unit(delta, "delta");
  if (order < 0 || arcsin_order < 0) throw InvalidArgument("lwf_assemble: truncations must be >= 0");
  std::vector<double> b = compose_with_arcsin(ts.coefficients, arcsin_order);
  Assembly asm_out = assemble(b, arcsin_order, order, central_binomial_pmf(arcsin_order));
  FourierApprox out;
  out.beta = ts.beta;
  out.delta = delta;
  out.order = order;
  out.coefficients = std::move(asm_out.coefficients);
  out.one_norm = coefficient_one_norm(out.coefficients);
  out.taylor_order = ts.order;
  out.arcsin_order = arcsin_order;
  out.budget.taylor_tail = taylor_tail(ts.beta, ts.order);
  out.budget.arcsin_tail = ts.one_norm * std::pow(std::cos(kPi * delta / 2.0), arcsin_order + 1);
  out.budget.binomial_tail = asm_out.binomial_tail;
  return out;
}

FourierApprox lwf_coefficients(const TaylorSeries& ts, double delta, double eps) {
  require_open_unit(delta, "delta");
  require_open_unit(eps, "eps");
  int order = lwf_order(ts.beta, delta, eps, ts.one_norm);
  int arcsin_order = arcsin_order_for(delta, eps, ts.one_norm);
  FourierApprox out = lwf_assemble(ts, delta, order, arcsin_order);
  out.eps = eps;
  if (out.budget.total() > eps) {
    std::ostringstream msg;
    msg << "requested eps " << eps << " is unattainable: Taylor tail " << out.budget.taylor_tail
        << " (K=" << ts.order << "), arcsin tail " << out.budget.arcsin_tail << ", binomial tail "
        << out.budget.binomial_tail;
    throw NumericalError(msg.str());
  }
  double grid = grid_sup_error(out, 1000);
  if (grid > eps) {
    std::ostringstream msg;
    msg << "assembled approximation misses its certificate: grid error " << grid << " > eps " << eps;
    throw NumericalError(msg.str());
  }
  return out;
}

std::vector<double> lwf_grid(double delta, int points) {
  if (!(delta >= 0.0 && delta < 1.0)) throw InvalidArgument("lwf_grid: delta must lie in [0, 1)");
  if (points < 2) throw InvalidArgument("lwf_grid: need at least two points");
  std::vector<double> xs(points);
  double lo = -1.0 + delta;
  double hi = 1.0 - delta;
  for (int i = 0; i < points; ++i) xs[i] = lo + (hi - lo) * i / (points - 1.0);
  return xs;
}

double lwf_sup_error(const FourierApprox& approx, int points) { return grid_sup_error(approx, points); }

ScanResult truncation_scan(double beta, double delta, std::span<const int> orders) {
  require_open_unit(delta, "delta");
  if (orders.empty()) throw InvalidArgument("truncation_scan: empty order list");
  int max_order = *std::max_element(orders.begin(), orders.end());
  if (*std::min_element(orders.begin(), orders.end()) < 0) throw InvalidArgument("orders must be >= 0");
  static constexpr double kArcsinFactors[] = {0.3, 0.5, 0.7, 1.0, 1.4, 2.0};
  int max_arcsin = static_cast<int>(std::ceil(2.0 * max_order / delta)) + 1;
  TaylorSeries ts = gibbs_taylor(beta, taylor_order_for(beta, 1e-17));
  std::vector<double> b = compose_with_arcsin(ts.coefficients, max_arcsin);
  std::vector<long double> central = central_binomial_pmf(max_arcsin);

  std::vector<int> sorted(orders.begin(), orders.end());
  std::sort(sorted.begin(), sorted.end());
  ScanResult result;
  result.beta = beta;
  result.delta = delta;
  // A bandwidth-M approximant is also admissible at every larger M.
  double best_so_far = std::numeric_limits<double>::infinity();
  int best_l = 0;
  for (int m : sorted) {
    for (double f : kArcsinFactors) {
      int l = std::min(max_arcsin, std::max(0, static_cast<int>(std::lround(f * m / delta))));
      FourierApprox approx;
      approx.beta = beta;
      approx.delta = delta;
      approx.order = m;
      approx.coefficients = assemble(b, l, m, central).coefficients;
      double err = grid_sup_error(approx, 1000);
      if (err < best_so_far) {
        best_so_far = err;
        best_l = l;
      }
    }
    result.rows.push_back({m, best_l, best_so_far});
  }
  std::vector<double> x, y;
  for (const ScanRow& r : result.rows) {
    x.push_back(std::log(1.0 / r.sup_error));
    y.push_back(r.order);
  }
  if (x.size() >= 2) result.fit = linear_fit(x, y);
  return result;
}

ScanResult taylor_scan(double beta, double delta, std::span<const int> orders) {
  if (orders.empty()) throw InvalidArgument("taylor_scan: empty order list");
  ScanResult result;
  result.beta = beta;
  result.delta = delta;
  std::vector<double> xs = lwf_grid(delta, 1000);
  for (int k : orders) {
    TaylorSeries ts = gibbs_taylor(beta, k);
    double worst = 0.0;
    for (double x : xs) {
      double p = 0.0;
      for (int i = k; i >= 0; --i) p = p * x + ts.coefficients[i];
      worst = std::max(worst, std::abs(shifted_boltzmann(beta, x) - p));
    }
    result.rows.push_back({k, 0, worst});
  }
  std::vector<double> x, y;
  for (const ScanRow& r : result.rows) {
    x.push_back(std::log(1.0 / r.sup_error));
    y.push_back(r.order);
  }
  if (x.size() >= 2) result.fit = linear_fit(x, y);
  return result;
}

}  // namespace trotterz
