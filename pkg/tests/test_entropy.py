import numpy as np
import pytest

from entx import (
    DensityMatrix,
    EntropyKind,
    InvalidDensityError,
    PureState,
    entanglement,
    entropy,
    partial_trace,
    schmidt,
    tensor,
)
from util import random_pure_state

LINEAR = EntropyKind.LINEAR
VON_NEUMANN = EntropyKind.VON_NEUMANN


def test_maximally_mixed_qubit_linear():
    rho = DensityMatrix(2, 0.5 * np.eye(2))
    assert entropy(rho, LINEAR) == pytest.approx(0.5, abs=1e-15)


def test_rank_one_projector_has_zero_entropy():
    rho = DensityMatrix(3, np.diag([1.0, 0.0, 0.0]))
    assert entropy(rho, LINEAR) == 0.0
    assert entropy(rho, VON_NEUMANN) == 0.0


def test_diagonal_example_linear():
    rho = DensityMatrix(2, np.diag([0.7, 0.3]))
    assert entropy(rho, LINEAR) == pytest.approx(0.42, abs=1e-15)


def test_von_neumann_uses_natural_log():
    rho = DensityMatrix(2, 0.5 * np.eye(2))
    assert entropy(rho, VON_NEUMANN) == pytest.approx(np.log(2), abs=1e-15)


def test_entropy_maxima_at_maximally_mixed():
    for d in (2, 3, 5):
        rho = DensityMatrix(d, np.eye(d) / d)
        assert entropy(rho, LINEAR) == pytest.approx(1.0 - 1.0 / d, abs=1e-12)
        assert entropy(rho, VON_NEUMANN) == pytest.approx(np.log(d), abs=1e-12)


def test_entropy_bounds_random_densities():
    rng = np.random.default_rng(30)
    for _ in range(20):
        d = int(rng.integers(2, 6))
        psi = random_pure_state(rng, d, d)
        rho = partial_trace(psi, "A")
        s_lin = entropy(rho, LINEAR)
        s_vn = entropy(rho, VON_NEUMANN)
        assert 0.0 <= s_lin <= 1.0 - 1.0 / d + 1e-12
        assert 0.0 <= s_vn <= np.log(d) + 1e-12


def test_invalid_density_rejected():
    bad = np.diag([1.001, -0.001])
    with pytest.raises(InvalidDensityError):
        DensityMatrix(2, bad)


def test_bell_state_entanglement():
    bell = PureState(2, 2, np.array([1, 0, 0, 1]) / np.sqrt(2))
    assert entanglement(bell, LINEAR) == pytest.approx(0.5, abs=1e-14)
    assert entanglement(bell, VON_NEUMANN) == pytest.approx(np.log(2), abs=1e-14)


def test_product_state_entanglement_vanishes():
    psi = tensor([0.6, 0.8], [0.0, 1.0])
    assert entanglement(psi, LINEAR) == pytest.approx(0.0, abs=1e-14)
    assert entanglement(psi, VON_NEUMANN) == pytest.approx(0.0, abs=1e-14)


def test_two_level_mixture_angle_state():
    # cos(t)|g,n+1> + sin(t)|e,n>, t = pi/6: weights (cos^2, sin^2)
    theta = np.pi / 6
    amp = np.zeros(6, dtype=complex)
    amp[2 * 2 + 0] = np.cos(theta)  # oscillator level 2, atom ground
    amp[1 * 2 + 1] = np.sin(theta)  # oscillator level 1, atom excited
    psi = PureState(3, 2, amp)
    assert entanglement(psi, LINEAR) == pytest.approx(0.375, abs=1e-14)


def test_linear_entanglement_equals_schmidt_purity_deficit():
    rng = np.random.default_rng(31)
    for _ in range(25):
        da = int(rng.integers(2, 6))
        db = int(rng.integers(2, 6))
        psi = random_pure_state(rng, da, db)
        weights = schmidt(psi).weights
        expected = 1.0 - float((weights**2).sum())
        assert entanglement(psi, LINEAR) == pytest.approx(expected, abs=1e-10)


def test_entanglement_subsystem_symmetry():
    rng = np.random.default_rng(32)
    for _ in range(200):
        da = int(rng.integers(2, 7))
        db = int(rng.integers(2, 7))
        psi = random_pure_state(rng, da, db)
        for kind in (LINEAR, VON_NEUMANN):
            ea = entropy(partial_trace(psi, "A"), kind)
            eb = entropy(partial_trace(psi, "B"), kind)
            assert abs(ea - eb) < 1e-10
