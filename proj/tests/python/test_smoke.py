import math

import numpy as np
import pytest

import duplexchain as dc


def test_qubit_state():
    q = dc.QubitState(math.pi / 2, 3 * math.pi)
    assert abs(q.alpha) == pytest.approx(math.sqrt(0.5))
    assert q.phi == pytest.approx(math.pi)
    with pytest.raises(ValueError):
        dc.QubitState(4.0)


def test_parse_angle():
    assert dc.parse_angle("2pi/3") == pytest.approx(2 * math.pi / 3)
    with pytest.raises(dc.DomainError):
        dc.parse_angle("bogus")


def test_propagator_is_unitary():
    f = dc.propagator(10, 7.3, field=0.4)
    assert f.shape == (10, 10)
    assert np.allclose(f.conj().T @ f, np.eye(10), atol=1e-12)
    energies = dc.mode_energies(4, field=0.5)
    assert len(energies) == 4


def test_evolve_and_fidelity():
    s1 = dc.QubitState(0.6 * math.pi)
    s2 = dc.QubitState(0.6 * math.pi)
    amps = dc.evolve(s1, s2, n=10, t=23.0)
    norm = abs(amps["c0"]) ** 2 + np.sum(np.abs(amps["A"]) ** 2) + np.sum(np.abs(np.triu(amps["B"], 1)) ** 2)
    assert norm == pytest.approx(1.0, abs=1e-10)
    f_bob, f_alice = dc.fidelity(s1, s2, n=10, t=0.0)
    assert f_bob == pytest.approx(abs(s1.overlap(s2)))


def test_fmax_search():
    s = dc.QubitState(0.6 * math.pi)
    r = dc.fmax_search(s, s, n=10)
    assert r["f_max"] == pytest.approx(0.91, abs=0.02)
    assert 10.0 <= r["tau"] <= 50.0


def test_run_config():
    csv = dc.run_config('{"experiment": "phase_scan", "chain": {"n_sites": 4},'
                        ' "grids": {"delta_phi": {"start": 0, "stop": 3.14, "count": 3}}}')
    lines = csv.strip().split("\n")
    assert lines[0] == "delta_phi,f_max,tau"
    assert len(lines) == 4
    assert '"experiment": "length_scan"' in dc.figure_config("fig4a")


def test_oracle_check():
    report = dc.oracle_check(n=4, cases=3)
    assert report["passed"]
    with pytest.raises(dc.ResourceError):
        dc.oracle_check(n=15, cases=1)
