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

#include "trotterz/experiments.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "trotterz/cheb.hpp"
#include "trotterz/digest.hpp"
#include "trotterz/lwf.hpp"
#include "trotterz/pipeline.hpp"
#include "trotterz/syk.hpp"
#include "trotterz/thermal.hpp"
#include "trotterz/trotter.hpp"

#ifndef TROTTERZ_VERSION
#define TROTTERZ_VERSION "0.0.0"
#endif

namespace trotterz {

namespace {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;
namespace fs = std::filesystem;

Json parse_config(std::string_view text) {
  try {
    Json doc = Json::parse(text);
    if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
    return doc;
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

void require_keys(const Json& doc, std::initializer_list<const char*> allowed, const std::string& where) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : doc.items())
    if (!ok.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
}

template <typename T>
T get_or(const Json& doc, const char* key, T fallback, const std::string& where) {
  if (!doc.contains(key) || doc[key].is_null()) return fallback;
  try {
    return doc[key].get<T>();
  } catch (const Json::exception& e) {
    throw ConfigError(where + ": bad value for '" + key + "': " + e.what());
  }
}

template <typename T>
T get_req(const Json& doc, const char* key, const std::string& where) {
  if (!doc.contains(key)) throw ConfigError(where + ": missing key '" + key + "'");
  return get_or<T>(doc, key, T{}, where);
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string out;
  bool first = true;
  for (const std::string& c : cells) {
    if (!first) out += ',';
    out += c;
    first = false;
  }
  return out + "\n";
}

std::string fd(double v) { return format_double(v); }

std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

HamiltonianTerms model_from_doc(const Json& m, const std::string& base_dir) {
  if (!m.is_object()) throw ConfigError("model: expected an object");
  const std::string type = get_req<std::string>(m, "type", "model");
  HamiltonianTerms h;
  bool normalize = true;
  if (type == "syk") {
    require_keys(m, {"type", "n_majorana", "seed", "variance", "normalize"}, "model");
    int n = get_req<int>(m, "n_majorana", "model");
    VarianceRule rule;
    if (m.contains("variance")) {
      rule.label = "fixed";
      rule.variance = get_req<double>(m, "variance", "model");
    }
    h = build_syk_hamiltonian(sample_syk(n, get_or<std::uint64_t>(m, "seed", 0, "model"), rule));
    normalize = get_or<bool>(m, "normalize", true, "model");
  } else if (type == "random" || type == "commuting") {
    require_keys(m, {"type", "n_qubits", "terms", "seed", "normalize"}, "model");
    auto n = get_req<std::size_t>(m, "n_qubits", "model");
    auto terms = get_req<std::size_t>(m, "terms", "model");
    auto seed = get_or<std::uint64_t>(m, "seed", 0, "model");
    h = type == "random" ? random_pauli_model(n, terms, seed) : random_commuting_model(n, terms, seed);
    normalize = get_or<bool>(m, "normalize", true, "model");
  } else if (type == "pauli") {
    require_keys(m, {"type", "hamiltonian", "normalize"}, "model");
    h = hamiltonian_from_json(m.at("hamiltonian").dump());
    normalize = get_or<bool>(m, "normalize", false, "model");
  } else if (type == "file") {
    require_keys(m, {"type", "path", "normalize"}, "model");
    fs::path p = get_req<std::string>(m, "path", "model");
    if (p.is_relative()) p = fs::path(base_dir) / p;
    std::ifstream in(p);
    if (!in) throw ConfigError("model: cannot read " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    h = hamiltonian_from_json(ss.str());
    normalize = get_or<bool>(m, "normalize", false, "model");
  } else {
    throw ConfigError("model: unknown type '" + type + "'");
  }
  if (normalize) h = normalize_one_norm(h).hamiltonian;
  return h;
}

std::vector<int> int_list(const Json& doc, const char* key, const std::string& where) {
  auto v = get_req<std::vector<int>>(doc, key, where);
  if (v.empty()) throw ConfigError(where + ": '" + key + "' is empty");
  return v;
}

}  // namespace

const std::string& Artifacts::file(std::string_view name) const {
  for (const auto& [n, content] : files)
    if (n == name) return content;
  throw InvalidArgument("no artifact named " + std::string(name));
}

HamiltonianTerms model_from_json(std::string_view text, const std::string& base_dir) {
  return model_from_doc(parse_config(text), base_dir);
}

Artifacts cmd_lwf_convergence(std::string_view config, const Overrides& ov) {
  const std::string where = "lwf-convergence";
  Json doc = parse_config(config);
  require_keys(doc, {"betas", "delta", "delta_factor", "lwf_orders", "lwf_step", "lwf_points", "taylor_eps", "seed"},
               where);
  auto betas = get_or<std::vector<double>>(doc, "betas", {1.0, 2.0, 4.0, 8.0}, where);
  const double delta_fixed = get_or<double>(doc, "delta", 0.0, where);
  const double delta_factor = get_or<double>(doc, "delta_factor", 0.5, where);
  const double step = get_or<double>(doc, "lwf_step", 1.5, where);
  const int points = get_or<int>(doc, "lwf_points", 10, where);
  const double taylor_eps = get_or<double>(doc, "taylor_eps", 1e-12, where);
  if (betas.empty() || points < 2 || !(step > 0.0) || !(taylor_eps > 0.0)) throw ConfigError(where + ": bad ranges");

  Artifacts a;
  a.master_seed = ov.seed.value_or(get_or<std::uint64_t>(doc, "seed", 0, where));
  std::string rows = csv_row({"expansion_type", "beta", "delta", "M_or_K", "sup_error"});
  std::string fits = csv_row({"expansion_type", "beta", "delta", "slope", "intercept", "r_squared"});
  for (double beta : betas) {
    if (!(beta > 0.0)) throw ConfigError(where + ": beta must be positive");
    double delta = delta_fixed > 0.0 ? delta_fixed : delta_factor / beta;
    if (!(delta > 0.0 && delta < 1.0)) throw ConfigError(where + ": delta must lie in (0, 1)");
    std::vector<int> orders;
    if (doc.contains("lwf_orders")) {
      orders = int_list(doc, "lwf_orders", where);
    } else {
      for (int j = 1; j <= points; ++j) orders.push_back(static_cast<int>(std::ceil(j * step / delta)));
    }
    ScanResult lwf = truncation_scan(beta, delta, orders);
    int k_max = taylor_order_for(beta, taylor_eps);
    std::vector<int> ks;
    for (int k = 1; k <= k_max; ++k) ks.push_back(k);
    ScanResult taylor = taylor_scan(beta, delta, ks);
    for (const ScanRow& r : lwf.rows) rows += csv_row({"lwf", fd(beta), fd(delta), std::to_string(r.order), fd(r.sup_error)});
    for (const ScanRow& r : taylor.rows)
      rows += csv_row({"taylor", fd(beta), fd(delta), std::to_string(r.order), fd(r.sup_error)});
    fits += csv_row({"lwf", fd(beta), fd(delta), fd(lwf.fit.slope), fd(lwf.fit.intercept), fd(lwf.fit.r_squared)});
    fits += csv_row(
        {"taylor", fd(beta), fd(delta), fd(taylor.fit.slope), fd(taylor.fit.intercept), fd(taylor.fit.r_squared)});
    if (!(lwf.fit.slope > 0.0)) a.failures.push_back("lwf slope not positive at beta " + fd(beta));
  }
  a.files.emplace_back("lwf_convergence.csv", rows);
  a.files.emplace_back("lwf_fits.csv", fits);
  return a;
}

Artifacts cmd_qubits_saved(std::string_view config, const Overrides& ov) {
  const std::string where = "qubits-saved";
  Json doc = parse_config(config);
  require_keys(doc, {"n_majorana", "seed"}, where);
  std::vector<int> ns = doc.contains("n_majorana") ? int_list(doc, "n_majorana", where) : std::vector<int>{8, 10, 12, 14, 16};
  Artifacts a;
  a.master_seed = ov.seed.value_or(get_or<std::uint64_t>(doc, "seed", 0, where));
  std::string csv = csv_row({"n_majorana", "gamma", "saved", "this_method_ancillas", "n_qubits", "simulated_width"});
  for (int n : ns) {
    if (n < 4 || n % 2 != 0) throw ConfigError(where + ": n_majorana must be even and >= 4");
    QubitLedger q = qubit_ledger(n / 2);
    csv += csv_row({std::to_string(n), std::to_string(binomial(n, 4)), std::to_string(ancilla_savings(n)),
                    std::to_string(q.gqsp_ancilla), std::to_string(n / 2), std::to_string(q.total())});
  }
  a.files.emplace_back("qubits_saved.csv", csv);
  return a;
}

Artifacts cmd_trotter_order(std::string_view config, const Overrides& ov) {
  const std::string where = "trotter-order";
  Json doc = parse_config(config);
  require_keys(doc, {"model", "orders", "tau_min", "tau_max", "points", "grouped", "seed"}, where);
  Artifacts a;
  a.master_seed = ov.seed.value_or(get_or<std::uint64_t>(doc, "seed", 0, where));
  Json model = doc.contains("model") ? doc["model"] : Json{{"type", "syk"}, {"n_majorana", 8}, {"seed", 7}};
  HamiltonianTerms h = model_from_doc(model, ov.base_dir);
  std::vector<int> orders = doc.contains("orders") ? int_list(doc, "orders", where) : std::vector<int>{1, 2, 4};
  double lo = get_or<double>(doc, "tau_min", 1e-3, where);
  double hi = get_or<double>(doc, "tau_max", 1e-1, where);
  int points = get_or<int>(doc, "points", 9, where);
  StageMode mode = get_or<bool>(doc, "grouped", false, where) ? StageMode::kGrouped : StageMode::kPerTerm;
  if (!(lo > 0.0 && hi > lo) || points < 4) throw ConfigError(where + ": need 0 < tau_min < tau_max and points >= 4");
  std::vector<double> taus = geometric_grid(lo, hi, static_cast<std::size_t>(points));
  std::string rows = csv_row({"order", "tau", "error_norm"});
  std::string fits = csv_row({"order", "slope", "r_squared", "alpha"});
  const std::size_t frags = formula_fragments(h, mode).size();
  for (int p : orders) {
    FormulaPlan plan = build_plan(frags, p);
    AlphaFit f = fit_alpha(h, plan, taus, mode);
    for (std::size_t i = 0; i < f.taus.size(); ++i) rows += csv_row({std::to_string(p), fd(f.taus[i]), fd(f.norms[i])});
    fits += csv_row({std::to_string(p), fd(f.slope), fd(f.r_squared), fd(f.alpha)});
    double tol = p >= 4 ? 0.2 : 0.1;
    if (std::isfinite(f.slope) && std::abs(f.slope - p) > tol)
      a.failures.push_back("order " + std::to_string(p) + " slope " + fd(f.slope));
  }
  a.files.emplace_back("trotter_order.csv", rows);
  a.files.emplace_back("trotter_fits.csv", fits);
  return a;
}

Artifacts cmd_pipeline(std::string_view config, const Overrides& ov) {
  const std::string where = "pipeline";
  Json doc = parse_config(config);
  require_keys(doc,
               {"model", "beta", "order", "t", "m_cheb", "eps_qsp", "eps_cheb", "eps_stat", "mode", "seed", "grouped",
                "delta_prime", "threads", "iqae"},
               where);
  Artifacts a;
  a.master_seed = ov.seed.value_or(get_or<std::uint64_t>(doc, "seed", 0, where));
  Json model = doc.contains("model") ? doc["model"] : Json{{"type", "syk"}, {"n_majorana", 8}, {"seed", 7}};
  HamiltonianTerms h = model_from_doc(model, ov.base_dir);

  PipelineConfig c;
  c.beta = get_or<double>(doc, "beta", c.beta, where);
  c.order = get_or<int>(doc, "order", c.order, where);
  c.t = get_or<double>(doc, "t", c.t, where);
  c.m_cheb = get_or<int>(doc, "m_cheb", c.m_cheb, where);
  c.eps_qsp = get_or<double>(doc, "eps_qsp", c.eps_qsp, where);
  c.eps_cheb = get_or<double>(doc, "eps_cheb", c.eps_cheb, where);
  c.eps_stat = get_or<double>(doc, "eps_stat", c.eps_stat, where);
  c.mode = trace_mode_from_string(ov.mode.value_or(get_or<std::string>(doc, "mode", "exact", where)));
  c.stage_mode = get_or<bool>(doc, "grouped", false, where) ? StageMode::kGrouped : StageMode::kPerTerm;
  c.delta_prime = get_or<double>(doc, "delta_prime", 0.0, where);
  c.threads = get_or<int>(doc, "threads", 1, where);
  c.seed = a.master_seed;
  if (doc.contains("iqae")) {
    const Json& q = doc["iqae"];
    if (!q.is_object()) throw ConfigError(where + ": iqae must be an object");
    require_keys(q, {"alpha", "shots", "min_ratio"}, where + ".iqae");
    c.iqae.alpha = get_or<double>(q, "alpha", c.iqae.alpha, where);
    c.iqae.shots = get_or<int>(q, "shots", c.iqae.shots, where);
    c.iqae.min_ratio = get_or<double>(q, "min_ratio", c.iqae.min_ratio, where);
  }
  try {
    c.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }

  PartitionResult r = run_pipeline(h, c);
  double sum_d = 0.0;
  double direct = 0.0;
  for (std::size_t k = 0; k < r.nodes.size(); ++k) {
    sum_d += r.grid.weights[k];
    direct += r.grid.weights[k] * r.nodes[k].z_estimate;
  }
  if (std::abs(sum_d - 1.0) > 1e-12) a.failures.push_back("weights do not sum to one");
  if (std::abs(direct - r.extrapolated) > 1e-14 * std::max(1.0, std::abs(direct)))
    a.failures.push_back("extrapolation does not match the weighted sum");
  for (const NodeResult& n : r.nodes) {
    if (n.antihermitian_residual > kAntiHermitianLimit)
      a.failures.push_back("node " + std::to_string(n.index) + " effective Hamiltonian not Hermitian");
    if (c.mode == TraceMode::kGqsp && n.block_error > c.eps_qsp + 1e-8)
      a.failures.push_back("node " + std::to_string(n.index) + " block error " + fd(n.block_error));
  }
  a.files.emplace_back("partition_result.json", partition_result_to_json(r));
  a.files.emplace_back("nodes.csv", nodes_to_csv(r));
  a.files.emplace_back("node_records.jsonl", node_records_jsonl(r));
  return a;
}

std::string build_manifest(const std::string& command, std::string_view config, const Artifacts& artifacts,
                           const std::string& started_utc, const std::string& finished_utc) {
  OJson m;
  m["format_version"] = kFormatVersion;
  m["command"] = command;
  m["code_version"] = TROTTERZ_VERSION;
  m["config_sha256"] = sha256_hex(config);
  m["master_seed"] = artifacts.master_seed;
  m["started_utc"] = started_utc;
  m["finished_utc"] = finished_utc;
  OJson files = OJson::array();
  for (const auto& [name, content] : artifacts.files) {
    OJson f;
    f["path"] = name;
    f["sha256"] = sha256_hex(content);
    f["bytes"] = content.size();
    files.push_back(f);
  }
  m["artifacts"] = files;
  m["failures"] = artifacts.failures;
  return m.dump(2) + "\n";
}

int run_command(const std::string& command, const std::string& config_path, const std::string& out_dir,
                const Overrides& overrides, std::ostream& log) {
  const std::string started = utc_now();
  auto write_file = [&](const std::string& name, const std::string& content) {
    fs::path p = fs::path(out_dir) / name;
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Error("cannot write " + p.string());
    out << content;
  };
  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    log << "trotterz " << command << ": " << message << "\n";
    try {
      fs::create_directories(out_dir);
      OJson e;
      e["format_version"] = kFormatVersion;
      e["command"] = command;
      e["kind"] = kind;
      e["message"] = message;
      e["exit_code"] = code;
      write_file("error.json", e.dump(2) + "\n");
    } catch (const std::exception&) {
    }
    return code;
  };

  std::string config = "{}";
  Overrides ov = overrides;
  if (!config_path.empty()) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) return fail(kExitConfig, "config", "cannot read config " + config_path);
    std::stringstream ss;
    ss << in.rdbuf();
    config = ss.str();
    ov.base_dir = fs::path(config_path).parent_path().string();
    if (ov.base_dir.empty()) ov.base_dir = ".";
  }
  Artifacts a;
  try {
    if (command == "lwf-convergence") {
      a = cmd_lwf_convergence(config, ov);
    } else if (command == "qubits-saved") {
      a = cmd_qubits_saved(config, ov);
    } else if (command == "trotter-order") {
      a = cmd_trotter_order(config, ov);
    } else if (command == "pipeline") {
      a = cmd_pipeline(config, ov);
    } else {
      return fail(kExitConfig, "config", "unknown command " + command);
    }
  } catch (const InvalidArgument& e) {
    return fail(kExitConfig, "config", e.what());
  } catch (const CapExceeded& e) {
    return fail(kExitConfig, "config", e.what());
  } catch (const Error& e) {
    return fail(kExitNumeric, "numeric", e.what());
  }
  try {
    fs::create_directories(out_dir);
    for (const auto& [name, content] : a.files) write_file(name, content);
    write_file("manifest.json", build_manifest(command, config, a, started, utc_now()));
  } catch (const std::exception& e) {
    return fail(kExitNumeric, "io", e.what());
  }
  if (!a.failures.empty()) {
    std::string msg = "stage assertions failed:";
    for (const std::string& f : a.failures) msg += " " + f + ";";
    return fail(kExitNumeric, "assertion", msg);
  }
  for (const auto& [name, _] : a.files) log << (fs::path(out_dir) / name).string() << "\n";
  return kExitOk;
}

}  // namespace trotterz
