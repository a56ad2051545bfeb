# Copyright 2026 The trotterz Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math

import numpy as np
import pytest

import trotterz


def test_version():
    assert trotterz.__version__


def test_exact_partition_single_qubit():
    h = trotterz.hamiltonian(1, [(1.0, "Z")])
    assert math.isclose(trotterz.exact_partition(h, 1.0), math.cosh(1.0), rel_tol=1e-14)


def test_syk_model_and_dense():
    h = trotterz.syk_hamiltonian(8, 7)
    assert h.n_qubits == 4
    assert len(h) > 0
    d = h.dense()
    assert d.shape == (16, 16)
    assert np.allclose(d, d.conj().T)
    w = np.linalg.eigvalsh(d)
    assert math.isclose(trotterz.exact_partition(h, 2.0), np.mean(np.exp(-2.0 * w)), rel_tol=1e-12)


def test_cheb_grid_weights():
    nodes, weights = trotterz.cheb_grid(8)
    assert len(nodes) == 8
    assert math.isclose(sum(weights), 1.0, abs_tol=1e-12)


def test_pipeline_converges():
    h = trotterz.syk_hamiltonian(8, 7)
    r = trotterz.pipeline(h, 2.0, t=2.0, m_cheb=8)
    assert r["realized_error"] < 1e-6
    assert len(r["nodes"]) == 8


def test_effective_hamiltonian_order():
    h = trotterz.random_pauli_model(3, 6, 1).normalized()
    e1 = trotterz.trotter_error_norm(h, 1e-2, 2)
    e2 = trotterz.trotter_error_norm(h, 2e-2, 2)
    assert math.isclose(math.log2(e2 / e1), 2.0, abs_tol=0.1)


def test_gqsp_block_matches_polynomial():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    u, _ = np.linalg.qr(a)
    coeffs = [0.2, 0.3 + 0.1j, 0.25]
    block, shift, rescale = trotterz.gqsp_block(coeffs, u)
    want = rescale * (coeffs[0] * u.conj().T + coeffs[1] * np.eye(4) + coeffs[2] * u)
    want = np.linalg.matrix_power(u, shift) @ want
    assert np.allclose(block, want, atol=1e-9)


def test_amplitude_estimate():
    r = trotterz.amplitude_estimate(0.25, 0.05, 3)
    assert abs(r["a0_hat"] - 0.5) <= 0.05


def test_commands():
    out = trotterz.cmd_qubits_saved(json.dumps({"n_majorana": [8]}))
    assert out["files"]["qubits_saved.csv"].splitlines()[1] == "8,70,7,1,4,10"
    with pytest.raises(ValueError):
        trotterz.cmd_pipeline(json.dumps({"unknown": 1}))


def test_invalid_argument_maps_to_value_error():
    with pytest.raises(ValueError):
        trotterz.cheb_grid(0)
