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

#include "trotterz/cheb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "trotterz/errors.hpp"
#include "trotterz/lwf.hpp"
#include "trotterz/syk.hpp"
#include "trotterz/trotter.hpp"

namespace trotterz {

namespace {

double chebyshev_t(int j, double s) {
  if (j == 0) return 1.0;
  double prev = 1.0;
  double cur = s;
  for (int k = 1; k < j; ++k) {
    double next = 2.0 * s * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double factorial(int p) {
  return std::tgamma(static_cast<double>(p) + 1.0);
}

}  // namespace

double cheb_basis(int j, int m, double s) {
  if (m < 1 || j < 0) throw InvalidArgument("cheb_basis: need m >= 1 and j >= 0");
  const double md = static_cast<double>(m);
  if (j == 0) return 1.0 / std::sqrt(md);
  return std::sqrt(2.0 / md) * chebyshev_t(j, s);
}

ChebGrid cheb_grid(int m) {
  if (m < 1) throw InvalidArgument("cheb_grid: M_cheb must be positive");
  ChebGrid g;
  g.size = m;
  g.nodes.resize(static_cast<std::size_t>(m));
  g.weights.assign(static_cast<std::size_t>(m), 0.0);
  for (int k = 1; k <= m; ++k) {
    double s = std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * m));
    // exact zero at the middle node of odd grids
    if (m % 2 == 1 && 2 * k - 1 == m) s = 0.0;
    g.nodes[static_cast<std::size_t>(k - 1)] = s;
  }
  for (int k = 0; k < m; ++k) {
    double d = 0.0;
    for (int j = 0; j < m; ++j) d += cheb_basis(j, m, 0.0) * cheb_basis(j, m, g.nodes[static_cast<std::size_t>(k)]);
    g.weights[static_cast<std::size_t>(k)] = d;
  }
  return g;
}

std::vector<double> closed_form_weights(int m) {
  if (m < 2 || m % 2 != 0) throw InvalidArgument("closed_form_weights: M_cheb must be even");
  std::vector<double> d(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    double sign = ((k + m / 2) % 2 == 0) ? 1.0 : -1.0;
    d[static_cast<std::size_t>(k - 1)] =
        sign * std::tan((2.0 * k - 1.0) * std::numbers::pi / (2.0 * m)) / static_cast<double>(m);
  }
  return d;
}

Eigen::MatrixXd orthonormality_matrix(const ChebGrid& grid) {
  const int m = grid.size;
  Eigen::MatrixXd u(m, m);
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j) u(k, j) = cheb_basis(j, m, grid.nodes[static_cast<std::size_t>(k)]);
  return u.transpose() * u;
}

double interpolate_to_zero(std::span<const double> values, const ChebGrid& grid) {
  if (values.size() != grid.weights.size())
    throw InvalidArgument("interpolate_to_zero: " + std::to_string(values.size()) + " values for " +
                          std::to_string(grid.weights.size()) + " nodes");
  double acc = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) acc += grid.weights[k] * values[k];
  return acc;
}

double rho_from_radius(double r) {
  if (!(r >= 1.0)) throw InvalidArgument("rho_from_radius: radius must be at least 1");
  return r + std::sqrt(r * r - 1.0);
}

double bernstein_bound(double c, double rho, int m) {
  if (!(rho > 1.0)) throw InvalidArgument("bernstein_bound: rho must exceed 1");
  if (!(c > 0.0)) throw InvalidArgument("bernstein_bound: C must be positive");
  if (m < 1) throw InvalidArgument("bernstein_bound: M_cheb must be positive");
  return 4.0 * c * std::pow(rho, -(m - 1.0)) / (rho - 1.0);
}

std::vector<std::complex<double>> bernstein_ellipse(double rho, int samples) {
  if (!(rho > 1.0)) throw InvalidArgument("bernstein_ellipse: rho must exceed 1");
  if (samples < 1) throw InvalidArgument("bernstein_ellipse: need samples");
  std::vector<std::complex<double>> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    std::complex<double> z = std::polar(rho, 2.0 * std::numbers::pi * i / samples);
    pts.push_back(0.5 * (z + 1.0 / z));
  }
  return pts;
}

int mcheb_size(double beta, double alpha, double r, double t, int p, double eps_cheb, double z_ratio,
               double calibration) {
  if (!(r > 1.0)) throw InvalidArgument("mcheb_size: r must exceed 1");
  if (!(eps_cheb > 0.0) || !(z_ratio > 0.0)) throw InvalidArgument("mcheb_size: eps and Z/N must be positive");
  if (p < 1) throw InvalidArgument("mcheb_size: order must be positive");
  double log_term = std::max(0.0, std::log(z_ratio / eps_cheb));
  double trotter_term = beta * alpha * std::pow(r * t, p) / factorial(p);
  double m = std::ceil(calibration * (log_term + trotter_term) / std::log(r));
  return std::max(2, static_cast<int>(m));
}

Schedule scaling_schedule(double beta) {
  if (!(beta >= 0.0)) throw InvalidArgument("scaling_schedule: beta must be non-negative");
  if (beta < 1.0) return Schedule{2, 0.5, 2.0};
  const double ln5 = std::log(5.0);
  const double log5 = std::log(beta) / ln5;
  int p = 2 * static_cast<int>(std::lround(std::sqrt(log5) / 2.0));
  Schedule s;
  s.order = std::max(2, p);
  s.t = std::min(0.5, std::exp(-std::sqrt(std::log(beta) * ln5)));
  s.r = std::exp(1.0 / std::sqrt(std::max(log5, 1.0)));
  return s;
}

double sum_inverse_nodes(const ChebGrid& grid) {
  double acc = 0.0;
  for (double s : grid.nodes) acc += (s == 0.0) ? std::numeric_limits<double>::infinity() : 1.0 / std::abs(s);
  return acc;
}

int ancilla_savings(int n_majorana) {
  if (n_majorana < 4 || n_majorana % 2 != 0) throw InvalidArgument("ancilla_savings: n_majorana must be even and >= 4");
  std::uint64_t gamma = binomial(n_majorana, 4);
  int bits = 0;
  while ((std::uint64_t{1} << bits) < gamma) ++bits;
  return bits;
}

CostLedger cost_model(const CostInputs& in, const ChebGrid& grid, std::span<const int> lwf_orders,
                      std::span<const double> z_values) {
  const std::size_t m = grid.nodes.size();
  if (lwf_orders.size() != m || z_values.size() != m) throw InvalidArgument("cost_model: per-node inputs mismatch");
  if (!(in.t > 0.0) || !(in.eps_stat > 0.0)) throw InvalidArgument("cost_model: t and eps must be positive");
  CostLedger c;
  c.stages_per_formula = in.stages_per_formula;
  c.node_sum = sum_inverse_nodes(grid);
  const double inf = std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    double s = std::abs(grid.nodes[k]);
    double reps = (s == 0.0) ? inf : std::ceil(1.0 / (s * in.t));
    double depth = 2.0 * lwf_orders[k] * reps * static_cast<double>(in.stages_per_formula);
    double queries = std::ceil(std::sqrt(z_values[k]) / in.eps_stat);
    c.repetitions.push_back(reps);
    c.depth.push_back(depth);
    c.queries.push_back(queries);
    c.total += in.calibration * depth * queries;
    worst = std::max(worst, lwf_orders[k] * std::sqrt(z_values[k]) / in.eps_stat);
  }
  const double md = static_cast<double>(m);
  c.asymptotic_expression =
      in.calibration * std::pow(5.0, in.order) / in.t * worst * md * std::max(std::log(md), 1.0);
  return c;
}

ScheduleCost schedule_cost(double beta, double eps_qsp, double eps_stat, double eps_cheb, double alpha,
                           std::size_t n_fragments) {
  if (!(beta > 0.0)) throw InvalidArgument("schedule_cost: beta must be positive");
  ScheduleCost out;
  out.schedule = scaling_schedule(beta);
  int m = mcheb_size(beta, alpha, out.schedule.r, out.schedule.t, out.schedule.order, eps_cheb, 1.0);
  if (m % 2 != 0) ++m;
  out.m_cheb = m;
  const double dp = 1.0 / beta;
  out.lwf_order = lwf_order(beta, dp / (1.0 + dp), eps_qsp, 1.0);
  ChebGrid grid = cheb_grid(m);
  std::vector<int> orders(static_cast<std::size_t>(m), out.lwf_order);
  std::vector<double> z(static_cast<std::size_t>(m), 1.0);
  CostInputs in;
  in.order = out.schedule.order;
  in.t = out.schedule.t;
  in.eps_stat = eps_stat;
  in.stages_per_formula = plan_stage_count(n_fragments, out.schedule.order);
  out.ledger = cost_model(in, grid, orders, z);
  return out;
}

}  // namespace trotterz
