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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trotterz/cheb.hpp"
#include "trotterz/dense.hpp"
#include "trotterz/experiments.hpp"
#include "trotterz/gqsp.hpp"
#include "trotterz/hamiltonian.hpp"
#include "trotterz/lwf.hpp"
#include "trotterz/pipeline.hpp"
#include "trotterz/syk.hpp"
#include "trotterz/thermal.hpp"
#include "trotterz/trotter.hpp"

namespace py = pybind11;
using namespace trotterz;

namespace {

StageMode stage_mode(bool grouped) { return grouped ? StageMode::kGrouped : StageMode::kPerTerm; }

py::dict artifacts_dict(const Artifacts& a) {
  py::dict files;
  for (const auto& [name, content] : a.files) files[py::str(name)] = content;
  py::dict d;
  d["files"] = files;
  d["failures"] = a.failures;
  d["master_seed"] = a.master_seed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Trotter-interpolated partition functions";
  m.attr("__version__") = TROTTERZ_VERSION;

  py::register_exception<Error>(m, "TrotterzError", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_MemoryError);

  py::class_<HamiltonianTerms>(m, "Hamiltonian")
      .def_readonly("n_qubits", &HamiltonianTerms::n_qubits)
      .def_readonly("one_norm", &HamiltonianTerms::one_norm)
      .def("__len__", &HamiltonianTerms::size)
      .def("terms",
           [](const HamiltonianTerms& h) {
             std::vector<std::pair<double, std::string>> out;
             for (const PauliTerm& t : h.terms) out.emplace_back(t.coeff, t.string.str());
             return out;
           })
      .def("dense", [](const HamiltonianTerms& h) { return hamiltonian_dense(h); })
      .def("to_json", &hamiltonian_to_json)
      .def("normalized", [](const HamiltonianTerms& h) { return normalize_one_norm(h).hamiltonian; });

  m.def(
      "hamiltonian",
      [](std::size_t n, const std::vector<std::pair<double, std::string>>& terms) {
        std::vector<PauliTerm> t;
        for (const auto& [c, s] : terms) t.push_back({c, PauliString::parse(s)});
        return make_hamiltonian(n, t);
      },
      py::arg("n_qubits"), py::arg("terms"));
  m.def("hamiltonian_from_json", [](const std::string& s) { return hamiltonian_from_json(s); });
  m.def("model_from_json", [](const std::string& s) { return model_from_json(s); });
  m.def(
      "syk_hamiltonian",
      [](int n_majorana, std::uint64_t seed, bool normalize) {
        HamiltonianTerms h = build_syk_hamiltonian(sample_syk(n_majorana, seed));
        return normalize ? normalize_one_norm(h).hamiltonian : h;
      },
      py::arg("n_majorana"), py::arg("seed"), py::arg("normalize") = true);
  m.def("random_pauli_model", &random_pauli_model, py::arg("n_qubits"), py::arg("n_terms"), py::arg("seed"),
        py::arg("require_noncommuting") = true);
  m.def("random_commuting_model", &random_commuting_model, py::arg("n_qubits"), py::arg("n_terms"), py::arg("seed"));

  m.def(
      "effective_hamiltonian",
      [](const HamiltonianTerms& h, double tau, int order, bool grouped) {
        StageMode mode = stage_mode(grouped);
        return effective_hamiltonian(h, 1.0, tau, build_plan(formula_fragments(h, mode).size(), order), mode).matrix;
      },
      py::arg("h"), py::arg("tau"), py::arg("order"), py::arg("grouped") = false);
  m.def(
      "trotter_error_norm",
      [](const HamiltonianTerms& h, double tau, int order, bool grouped) {
        StageMode mode = stage_mode(grouped);
        return trotter_error_norm(h, tau, build_plan(formula_fragments(h, mode).size(), order), mode);
      },
      py::arg("h"), py::arg("tau"), py::arg("order"), py::arg("grouped") = false);

  m.def("lwf_order", &lwf_order, py::arg("beta"), py::arg("delta"), py::arg("eps"), py::arg("one_norm") = 1.0);
  m.def(
      "lwf_coefficients",
      [](double beta, double delta, double eps) {
        FourierApprox a = lwf_coefficients(gibbs_taylor(beta, taylor_order_for(beta, eps)), delta, eps);
        py::dict d;
        d["order"] = a.order;
        d["coefficients"] = a.coefficients;
        d["one_norm"] = a.one_norm;
        d["sup_error"] = lwf_sup_error(a);
        return d;
      },
      py::arg("beta"), py::arg("delta"), py::arg("eps"));

  m.def(
      "gqsp_block",
      [](const std::vector<Complex>& coefficients, const DenseOperator& u) {
        GqspProgram prog = prepare_gqsp(LaurentPoly::from_coefficients(coefficients));
        return py::make_tuple(extract_block(gqsp_apply(prog.angles, u)), prog.shifted.shift, prog.rescale);
      },
      py::arg("coefficients"), py::arg("u"));

  m.def("exact_partition", [](const HamiltonianTerms& h, double beta) { return exact_partition(h, beta); });
  m.def(
      "cheb_grid",
      [](int m) {
        ChebGrid g = cheb_grid(m);
        return py::make_tuple(g.nodes, g.weights);
      },
      py::arg("m_cheb"));
  m.def("ancilla_savings", &ancilla_savings);
  m.def(
      "amplitude_estimate",
      [](double p0, double eps, std::uint64_t seed) {
        TraceEstimate e = amplitude_estimate(p0, eps, seed);
        py::dict d;
        d["p0_hat"] = e.p0_hat;
        d["a0_hat"] = e.a0_hat;
        d["queries"] = e.queries;
        d["grover_iterations"] = e.grover_iterations;
        d["rounds"] = e.rounds;
        return d;
      },
      py::arg("p0"), py::arg("eps"), py::arg("seed"));

  m.def(
      "run_pipeline",
      [](const HamiltonianTerms& h, double beta, int order, double t, int m_cheb, const std::string& mode,
         std::uint64_t seed, double eps_qsp, double eps_stat) {
        PipelineConfig c;
        c.beta = beta;
        c.order = order;
        c.t = t;
        c.m_cheb = m_cheb;
        c.mode = trace_mode_from_string(mode);
        c.seed = seed;
        c.eps_qsp = eps_qsp;
        c.eps_stat = eps_stat;
        return partition_result_to_json(run_pipeline(h, c));
      },
      py::arg("h"), py::arg("beta"), py::arg("order") = 2, py::arg("t") = 0.5, py::arg("m_cheb") = 8,
      py::arg("mode") = "exact", py::arg("seed") = 0, py::arg("eps_qsp") = 1e-6, py::arg("eps_stat") = 0.05);

  m.def("cmd_lwf_convergence", [](const std::string& c) { return artifacts_dict(cmd_lwf_convergence(c)); });
  m.def("cmd_qubits_saved", [](const std::string& c) { return artifacts_dict(cmd_qubits_saved(c)); });
  m.def("cmd_trotter_order", [](const std::string& c) { return artifacts_dict(cmd_trotter_order(c)); });
  m.def("cmd_pipeline", [](const std::string& c) { return artifacts_dict(cmd_pipeline(c)); });
}
