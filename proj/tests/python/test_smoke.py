"""Smoke tests for the python bindings: a thin pass over the main
operations, checked against closed-form anchors."""

import math

import numpy as np
import pytest

import qslbath as q


def test_version():
    assert q.__version__


def test_linalg_roundtrip():
    rng = np.random.default_rng(1)
    g = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    h = 0.5 * (g + g.conj().T)
    w, v = q.herm_eig(h)
    assert np.linalg.norm((v * w) @ v.conj().T - h) < 1e-10 * np.linalg.norm(h)
    root = q.matrix_sqrt_psd(h @ h)
    assert np.linalg.norm(root @ root - h @ h) < 1e-9 * np.linalg.norm(h @ h)


def test_pauli_algebra():
    comm = q.commutator(q.pauli_x(), q.pauli_y())
    assert np.linalg.norm(comm - 2j * q.pauli_z()) < 1e-14


def test_polygamma_anchors():
    assert q.polygamma(1, 1.0) == pytest.approx(math.pi**2 / 6, rel=1e-12)
    assert q.polygamma(3, 1.0) == pytest.approx(math.pi**4 / 15, rel=1e-12)


def test_quadrature():
    r = q.quad_semiinf(lambda t: t * math.exp(-t), 1e-12)
    assert r.converged
    assert r.value == pytest.approx(1.0, abs=1e-11)


def test_hellinger_anchor():
    mixed = q.DensityMatrix(0.5 * np.eye(2, dtype=complex))
    pure = q.DensityMatrix(np.diag([1.0, 0.0]).astype(complex))
    assert q.hellinger_distance(mixed, pure) == pytest.approx(1 - 1 / math.sqrt(2), rel=1e-12)


def test_thermal_state_limit():
    h = np.diag([0.0, 5.0]).astype(complex)
    hot = q.thermal_state(h, 0.0)
    assert np.linalg.norm(hot.matrix - 0.5 * np.eye(2)) < 1e-12


def test_bound_dominance_small_instance():
    rng = np.random.default_rng(7)
    g = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    h_int = 0.5 * (g + g.conj().T)
    h_sys = np.diag([0.5, -0.5]).astype(complex)
    h_bath = np.diag([0.0, 0.7, 1.3, 2.1]).astype(complex)
    beta = 1.4
    system = q.bloch_state(q.BlochState(0.6, [0.2, 0.3, 0.9]))
    bath = q.thermal_state(h_bath, beta)
    drive = q.DriveSpec(h_sys, h_int, [0.0])
    info = q.skew_information(system, bath, drive.total_at(0.0))
    assert q.relaxed_bound(drive, system, bath) >= info - 1e-9
    assert q.thermal_bound(drive, system, bath, h_bath, beta) >= info - 1e-9
    assert q.thermal_log_bound(drive, system, bath, h_bath, beta) >= info - 1e-9


def test_coincidence_and_coefficients():
    c = q.ohmic_coefficients(q.OhmicSpectralDensity(1.0), 1.0)
    assert c.k == pytest.approx(math.pi**2 / 3 - 1, rel=1e-12)
    bounds = q.qubit_bath_bounds(1.0, 1.0, 1.0, q.BlochState(1.0, [0, 0, 1]), c)
    assert bounds.relaxed == pytest.approx(bounds.exact, rel=1e-12)
    assert bounds.thermal_log is None


def test_trajectory_invariants():
    inst = q.CentralSpinInstance.sample(4, 1.0, 1.0, 1.0, q.BlochState(1.0, [0, 0, 1]), 3)
    rec = q.tightness_trajectory(inst, q.default_time_grid(inst, 80))
    assert rec.t_max is not None
    assert abs(rec.hellinger[0]) < 1e-10
    for t, d, r, b in zip(rec.times, rec.hellinger, rec.reduced_hellinger, rec.bound):
        assert r <= d + 1e-10
        if t <= rec.t_max:
            assert d <= b + 1e-9


def test_closed_form_matches_bruteforce():
    inst = q.CentralSpinInstance.sample(3, 1.0, 1.0, 1.0, q.BlochState(0.6, [1, 0, 0]), 9)
    assert inst.information() == pytest.approx(q.wy_central_spin_bruteforce(inst), abs=1e-10)


def test_lemma_suite():
    report = q.run_lemma_suite(5000, 1)
    assert report.passed()
    assert report.max_violation <= 1e-12
