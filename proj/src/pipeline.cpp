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

#include "trotterz/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "json.hpp"
#include "trotterz/digest.hpp"
#include "trotterz/errors.hpp"
#include "trotterz/lwf.hpp"
#include "trotterz/rng.hpp"
#include "trotterz/stats.hpp"

namespace trotterz {

namespace {

using Json = nlohmann::ordered_json;

bool in_unit_interval(double e) { return e > 0.0 && e < 1.0; }

double sum_exp(const Eigen::VectorXd& energies, double beta) {
  // shift by the ground energy to keep the exponentials finite
  double e0 = energies.minCoeff();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < energies.size(); ++i) acc += std::exp(-beta * (energies(i) - e0));
  return std::exp(-beta * e0) * acc;
}

Eigen::VectorXd real_eigenvalues(const DenseOperator& h) {
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed");
  return es.eigenvalues();
}

double nominal_lwf_delta(const PipelineConfig& c) {
  double dp = c.delta_prime > 0.0 ? c.delta_prime : 1.0 / c.beta;
  return dp / (1.0 + dp);
}

}  // namespace

double exact_partition(const HamiltonianTerms& h, double beta, std::size_t max_qubits) {
  if (beta == 0.0) return 1.0;
  DenseOperator d = hamiltonian_dense(h, max_qubits);
  Eigen::VectorXd e = real_eigenvalues(d);
  return sum_exp(e, beta) / static_cast<double>(d.rows());
}

std::string to_string(TraceMode mode) {
  switch (mode) {
    case TraceMode::kExact: return "exact";
    case TraceMode::kGqsp: return "gqsp";
    case TraceMode::kIdealW: return "ideal-w";
    case TraceMode::kSampled: return "sampled";
  }
  return "exact";
}

TraceMode trace_mode_from_string(const std::string& name) {
  if (name == "exact") return TraceMode::kExact;
  if (name == "gqsp") return TraceMode::kGqsp;
  if (name == "ideal-w") return TraceMode::kIdealW;
  if (name == "sampled") return TraceMode::kSampled;
  throw InvalidArgument("unknown trace mode '" + name + "'");
}

void PipelineConfig::validate() const {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidArgument("pipeline: beta must be positive");
  if (order != 1 && (order < 2 || order % 2 != 0)) throw InvalidArgument("pipeline: order must be 1 or even");
  if (!(t > 0.0) || t > std::numbers::pi) throw InvalidArgument("pipeline: t must lie in (0, pi]");
  if (m_cheb < 2) throw InvalidArgument("pipeline: M_cheb must be at least 2");
  if (!in_unit_interval(eps_qsp) || !in_unit_interval(eps_cheb) || !in_unit_interval(eps_stat))
    throw InvalidArgument("pipeline: every eps must lie in (0, 1)");
  if (delta_prime < 0.0) throw InvalidArgument("pipeline: delta_prime must be non-negative");
  if (threads < 1) throw InvalidArgument("pipeline: threads must be positive");
}

NodeResult evaluate_node(const HamiltonianTerms& h, const PipelineConfig& cfg, const ChebGrid& grid, int index) {
  try {
    const auto k = static_cast<std::size_t>(index);
    NodeResult r;
    r.index = index;
    r.s = grid.nodes.at(k);
    r.weight = grid.weights.at(k);
    r.step = r.s * cfg.t;
    r.seed = derive_seed(cfg.seed, "node", static_cast<std::uint64_t>(index));

    EffectiveHamiltonian eff;
    if (r.s == 0.0) {
      eff.matrix = hamiltonian_dense(h);
      eff.order = cfg.order;
    } else {
      eff = effective_hamiltonian(h, r.s, cfg.t, build_plan(cfg.stage_mode == StageMode::kGrouped
                                                                ? formula_fragments(h, StageMode::kGrouped).size()
                                                                : h.size(),
                                                            cfg.order),
                                  cfg.stage_mode);
    }
    r.antihermitian_residual = eff.antihermitian_residual;
    const double n = static_cast<double>(eff.matrix.rows());
    Eigen::VectorXd energies = real_eigenvalues(eff.matrix);
    r.z_exact = sum_exp(energies, cfg.beta) / n;
    r.p0_exact = sum_exp(energies.array() + 1.0, cfg.beta) / n;
    r.beta_k = cfg.beta;

    switch (cfg.mode) {
      case TraceMode::kExact:
        r.z_estimate = r.z_exact;
        r.p0_hat = r.p0_exact;
        break;
      case TraceMode::kSampled: {
        TraceEstimate est = amplitude_estimate(std::min(1.0, r.p0_exact), cfg.eps_stat, r.seed, cfg.iqae);
        r.p0_hat = est.p0_hat;
        r.p0_uncertainty = est.p0_uncertainty;
        r.z_estimate = est.p0_hat * std::exp(cfg.beta);
        r.z_uncertainty = est.p0_uncertainty * std::exp(cfg.beta);
        r.queries = est.queries;
        r.rounds = est.rounds;
        break;
      }
      case TraceMode::kGqsp:
      case TraceMode::kIdealW: {
        BoltzmannOptions opts;
        opts.eps_qsp = cfg.eps_qsp;
        opts.delta_prime = cfg.delta_prime;
        OracleMode om = cfg.mode == TraceMode::kGqsp ? OracleMode::kGqsp : OracleMode::kIdealW;
        BoltzmannOracle o = build_u_boltz(eff, cfg.beta, om, opts);
        r.beta_k = o.beta_k;
        r.power = o.power;
        r.kappa = o.kappa;
        r.lwf_order = o.lwf_order;
        r.gqsp_degree = o.gqsp_degree;
        DenseOperator nb = o.normalized_block();
        r.block_error = max_abs(nb - exact_boltzmann_block(eff.matrix, cfg.beta));
        r.p0_hat = nb.squaredNorm() / n;
        r.z_estimate = r.p0_hat * std::exp(cfg.beta);
        break;
      }
    }
    if (r.lwf_order == 0) r.lwf_order = lwf_order(cfg.beta, nominal_lwf_delta(cfg), cfg.eps_qsp, 1.0);
    if (r.queries == 0) r.queries = static_cast<long long>(std::ceil(std::sqrt(r.p0_exact) / cfg.eps_stat));
    return r;
  } catch (const Error& e) {
    throw NumericalError("node " + std::to_string(index) + ": " + e.what());
  }
}

PartitionResult run_pipeline(const HamiltonianTerms& h, const PipelineConfig& cfg) {
  cfg.validate();
  PartitionResult out;
  out.config = cfg;
  out.n_qubits = static_cast<int>(h.n_qubits);
  out.n_fragments = formula_fragments(h, cfg.stage_mode).size();
  out.grid = cheb_grid(cfg.m_cheb);
  const int m = cfg.m_cheb;

  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(out.grid.nodes[static_cast<std::size_t>(a)]) > std::abs(out.grid.nodes[static_cast<std::size_t>(b)]);
  });

  out.nodes.resize(static_cast<std::size_t>(m));
  if (cfg.threads <= 1) {
    for (int idx : order) out.nodes[static_cast<std::size_t>(idx)] = evaluate_node(h, cfg, out.grid, idx);
  } else {
    std::vector<std::future<NodeResult>> jobs;
    for (int idx : order) jobs.push_back(std::async(std::launch::async, [&, idx] { return evaluate_node(h, cfg, out.grid, idx); }));
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      NodeResult r = jobs[j].get();
      out.nodes[static_cast<std::size_t>(r.index)] = r;
    }
  }

  std::vector<double> est, exact;
  std::vector<int> orders;
  for (const NodeResult& r : out.nodes) {
    est.push_back(r.z_estimate);
    exact.push_back(r.z_exact);
    orders.push_back(r.lwf_order);
  }
  out.extrapolated = interpolate_to_zero(est, out.grid);
  out.extrapolated_exact = interpolate_to_zero(exact, out.grid);
  out.oracle = exact_partition(h, cfg.beta);
  out.realized_error = std::abs(out.extrapolated - out.oracle);
  for (double d : out.grid.weights) out.weight_one_norm += std::abs(d);

  CostInputs in;
  in.order = cfg.order;
  in.t = cfg.t;
  in.eps_stat = cfg.eps_stat;
  in.stages_per_formula = plan_stage_count(out.n_fragments, cfg.order);
  out.cost = cost_model(in, out.grid, orders, exact);
  return out;
}

namespace {

Json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

Json node_json(const NodeResult& r) {
  Json j;
  j["index"] = r.index;
  j["s"] = r.s;
  j["weight"] = r.weight;
  j["step"] = r.step;
  j["z_exact"] = r.z_exact;
  j["z_estimate"] = r.z_estimate;
  j["p0_exact"] = r.p0_exact;
  j["p0_hat"] = r.p0_hat;
  j["p0_uncertainty"] = r.p0_uncertainty;
  j["z_uncertainty"] = r.z_uncertainty;
  j["beta_k"] = r.beta_k;
  j["power"] = r.power;
  j["kappa"] = r.kappa;
  j["lwf_order"] = r.lwf_order;
  j["gqsp_degree"] = r.gqsp_degree;
  j["block_error"] = r.block_error;
  j["queries"] = r.queries;
  j["rounds"] = r.rounds;
  j["seed"] = r.seed;
  j["antihermitian_residual"] = r.antihermitian_residual;
  return j;
}

}  // namespace

std::string partition_result_to_json(const PartitionResult& res) {
  const PipelineConfig& c = res.config;
  Json j;
  j["format_version"] = 1;
  Json cfg;
  cfg["beta"] = c.beta;
  cfg["order"] = c.order;
  cfg["t"] = c.t;
  cfg["m_cheb"] = c.m_cheb;
  cfg["eps_qsp"] = c.eps_qsp;
  cfg["eps_cheb"] = c.eps_cheb;
  cfg["eps_stat"] = c.eps_stat;
  cfg["mode"] = to_string(c.mode);
  cfg["grouped"] = c.stage_mode == StageMode::kGrouped;
  cfg["seed"] = c.seed;
  cfg["delta_prime"] = c.delta_prime;
  j["config"] = cfg;
  j["n_qubits"] = res.n_qubits;
  j["n_fragments"] = res.n_fragments;
  j["extrapolated"] = res.extrapolated;
  j["extrapolated_exact"] = res.extrapolated_exact;
  j["oracle"] = res.oracle;
  j["realized_error"] = res.realized_error;
  j["weight_one_norm"] = res.weight_one_norm;
  Json nodes = Json::array();
  for (const NodeResult& r : res.nodes) nodes.push_back(node_json(r));
  j["nodes"] = nodes;
  Json cost;
  cost["stages_per_formula"] = res.cost.stages_per_formula;
  Json depth = Json::array(), queries = Json::array(), reps = Json::array();
  for (std::size_t k = 0; k < res.cost.depth.size(); ++k) {
    depth.push_back(finite_or_null(res.cost.depth[k]));
    queries.push_back(res.cost.queries[k]);
    reps.push_back(finite_or_null(res.cost.repetitions[k]));
  }
  cost["repetitions"] = reps;
  cost["depth"] = depth;
  cost["queries"] = queries;
  cost["total"] = finite_or_null(res.cost.total);
  cost["asymptotic_expression"] = res.cost.asymptotic_expression;
  cost["node_sum"] = finite_or_null(res.cost.node_sum);
  j["cost"] = cost;
  return j.dump(2) + "\n";
}

std::string nodes_to_csv(const PartitionResult& res) {
  std::ostringstream os;
  os << "s_k,d_k,Z_node_exact,Z_node_hat,depth,queries\n";
  for (std::size_t k = 0; k < res.nodes.size(); ++k) {
    const NodeResult& r = res.nodes[k];
    os << format_double(r.s) << ',' << format_double(r.weight) << ',' << format_double(r.z_exact) << ','
       << format_double(r.z_estimate) << ',' << format_double(res.cost.depth.at(k)) << ','
       << format_double(res.cost.queries.at(k)) << '\n';
  }
  return os.str();
}

std::string node_records_jsonl(const PartitionResult& res) {
  std::string out;
  for (const NodeResult& r : res.nodes) out += node_json(r).dump() + "\n";
  return out;
}

std::vector<TraceBoundRow> trace_bound_check(const HamiltonianTerms& h, double beta, int order,
                                             std::span<const double> taus, StageMode mode) {
  if (!(beta >= 0.0)) throw InvalidArgument("trace_bound_check: beta must be non-negative");
  DenseOperator hd = hamiltonian_dense(h);
  const double n = static_cast<double>(hd.rows());
  const double z = sum_exp(real_eigenvalues(hd), beta) / n;
  FormulaPlan plan = build_plan(formula_fragments(h, mode).size(), order);
  std::vector<TraceBoundRow> rows;
  for (double tau : taus) {
    if (!(std::abs(tau) * h.one_norm < std::numbers::pi))
      throw InvalidArgument("trace_bound_check: step outside the logarithm guard");
    EffectiveHamiltonian eff = effective_hamiltonian(h, 1.0, tau, plan, mode);
    TraceBoundRow row;
    row.tau = tau;
    row.lhs = std::abs(sum_exp(real_eigenvalues(eff.matrix), beta) / n);
    row.error_norm = spectral_norm(eff.matrix - hd);
    row.rhs = std::exp(beta * row.error_norm) * z;
    row.tightness = row.lhs / row.rhs;
    rows.push_back(row);
  }
  return rows;
}

std::complex<double> node_trace_complex(const HamiltonianTerms& h, double beta, double t, const FormulaPlan& plan,
                                        std::complex<double> z, StageMode mode) {
  const std::complex<double> tau = z * t;
  if (std::abs(tau) == 0.0) throw InvalidArgument("node_trace_complex: zero step");
  DenseOperator s = apply_formula_complex(h, tau, plan, mode);
  Eigen::ComplexEigenSolver<DenseOperator> es(s, false);
  if (es.info() != Eigen::Success) throw NumericalError("node_trace_complex: eigensolver failed");
  const std::complex<double> scale = std::complex<double>(0.0, beta) / tau;
  std::complex<double> acc = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) acc += std::exp(scale * std::log(es.eigenvalues()(i)));
  return acc / static_cast<double>(s.rows());
}

double analytic_rho(const HamiltonianTerms& h, double t, double phase_limit) {
  double norm = spectral_norm(hamiltonian_dense(h));
  if (norm == 0.0) throw InvalidArgument("analytic_rho: zero Hamiltonian");
  double a = phase_limit / (t * norm);
  if (!(a > 1.0)) throw InvalidArgument("analytic_rho: step too large for a Bernstein ellipse");
  return a + std::sqrt(a * a - 1.0);
}

double bernstein_constant(const HamiltonianTerms& h, double beta, double t, const FormulaPlan& plan, double rho,
                          int samples, StageMode mode) {
  double c = 0.0;
  for (std::complex<double> z : bernstein_ellipse(rho, samples))
    c = std::max(c, std::abs(node_trace_complex(h, beta, t, plan, z, mode)));
  return c;
}

BernsteinCheck bernstein_check(const HamiltonianTerms& h, double beta, int order, double t, std::span<const int> sizes,
                               int samples) {
  BernsteinCheck out;
  FormulaPlan plan = build_plan(h.size(), order);
  out.rho = analytic_rho(h, t);
  out.c = bernstein_constant(h, beta, t, plan, out.rho, samples);
  const double oracle = exact_partition(h, beta);
  out.holds = true;
  std::vector<double> xs, ys;
  for (int m : sizes) {
    PipelineConfig cfg;
    cfg.beta = beta;
    cfg.order = order;
    cfg.t = t;
    cfg.m_cheb = m;
    PartitionResult r = run_pipeline(h, cfg);
    double err = std::abs(r.extrapolated_exact - oracle);
    double bound = bernstein_bound(out.c, out.rho, m);
    out.sizes.push_back(m);
    out.errors.push_back(err);
    out.bounds.push_back(bound);
    if (!(err <= bound)) out.holds = false;
    if (err > 0.0) {
      xs.push_back(m);
      ys.push_back(std::log(err));
    }
  }
  if (xs.size() >= 2) out.rho_fit = std::exp(-linear_fit(xs, ys).slope);
  return out;
}

}  // namespace trotterz
