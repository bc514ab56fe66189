# Copyright 2026 The ashn Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import ashn


def test_synthesize_cnot_matches_table_value():
    c = ashn.synthesize(math.pi / 4, 0.0, 0.0)
    assert c["variant"] == "ND"
    assert abs(c["omega1_mhz"] - 24.21) / 24.21 < 5e-3
    assert abs(c["t_ns"] - 40.0) < 1e-9


def test_verify_round_trip():
    a, b, cc = ashn.named_gates()["b"]
    c = ashn.synthesize(a, b, cc)
    r = ashn.verify(a, b, cc, c["tau"], c["omega1"], c["omega2"], c["delta"])
    assert r["passed"]
    assert r["distance"] < 1e-8


def test_kak_reconstructs():
    rng = np.random.default_rng(3)
    z = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    q, _ = np.linalg.qr(z)
    k = ashn.kak(q)
    w = ashn.weyl_unitary(*k["point"])
    rec = k["phase"] * np.kron(k["k1"], k["k2"]) @ w @ np.kron(k["k3"], k["k4"])
    assert np.max(np.abs(rec - q)) < 1e-9


def test_two_b_and_pmw4():
    cnot = np.eye(4, dtype=complex)[[0, 1, 3, 2]]
    p = ashn.compile_two_b(cnot)
    assert p["b_count"] == 2
    assert np.max(np.abs(p["reconstruction"] - cnot)) < 1e-9
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    seq = ashn.pmw4(x)
    assert len(seq["phases"]) == 4
    overlap = abs(np.trace(seq["product"].conj().T @ x)) / 2
    assert overlap == pytest.approx(1.0, abs=1e-12)


def test_w_state_and_device():
    amps, gates = ashn.w_state(10)
    assert gates == 9
    idx = [1 << (9 - q) for q in range(10)]
    assert np.allclose(np.abs(amps[idx]) ** 2, 0.1)
    assert ashn.zero_coupling_frequency() == pytest.approx(5.72, abs=1e-9)


def test_xeb_and_errors():
    r = ashn.xeb([1, 2, 4, 8], circuits=5, seed=1, depolarizing=0.01)
    assert r["error_per_cycle"] == pytest.approx(0.01, rel=0.05)
    with pytest.raises(ValueError):
        ashn.kak(np.eye(3, dtype=complex))
    with pytest.raises(ValueError):
        ashn.xeb([1, 2], seed=1, gate="nope")
