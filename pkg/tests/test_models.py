import numpy as np
import pytest
from scipy.optimize import minimize_scalar

from entx import (
    EntropyKind,
    PureState,
    ValidationError,
    entanglement,
    form_ensemble,
    jaynes_cummings,
    jc_excited_fock_state,
    jc_hamiltonian,
    jc_mean_entanglement_reference,
    jc_population_w,
    mean_entanglement_closed_form,
    partial_trace,
    phase_average_oracle,
    spectral,
    time_average_numeric,
    two_spin,
    two_spin_hamiltonian,
)
from util import random_pure_state

LINEAR = EntropyKind.LINEAR


def test_two_spin_basis_is_orthonormal_bell_family():
    _, model = two_spin([1.0, 2.0, 3.0, 4.0])
    mat = np.array([b.amplitudes for b in model.basis])
    np.testing.assert_allclose(mat @ mat.conj().T, np.eye(4), atol=1e-14)
    rt2 = 1 / np.sqrt(2)
    np.testing.assert_allclose(mat[0], [rt2, 0, 0, rt2], atol=1e-15)
    np.testing.assert_allclose(mat[3], [0, rt2, -rt2, 0], atol=1e-15)


def test_two_spin_eigenvectors_diagonalize_hamiltonian():
    s, model = two_spin([0.4, -1.3, 2.2, 0.9])
    h = two_spin_hamiltonian(model)
    v = s.eigenvector_matrix()
    residual = v.conj() @ h @ v.T - np.diag(s.energies)
    assert np.abs(residual).max() < 1e-12


def test_two_spin_nondegenerate_mean():
    rng = np.random.default_rng(90)
    s, _ = two_spin([1.0, 2.0, 3.0, 4.0])
    psi = random_pure_state(rng, 2, 2)
    p = np.array([abs(v.inner(psi)) ** 2 for v in s.eigenvectors])
    mean = mean_entanglement_closed_form(form_ensemble(psi, s)).mean
    assert mean == pytest.approx(0.5 * float((p**2).sum()), abs=1e-12)


def test_two_spin_degenerate_mean_real_states():
    rng = np.random.default_rng(91)
    s_deg, _ = two_spin([1.0, 1.0, -1.0, -1.0])
    s_non, _ = two_spin([1.0, 2.0, 3.0, 4.0])
    psi = random_pure_state(rng, 2, 2, real=True)
    p = np.array([abs(v.inner(psi)) ** 2 for v in s_non.eigenvectors])
    mean = mean_entanglement_closed_form(form_ensemble(psi, s_deg)).mean
    assert mean == pytest.approx(
        0.5 * (p[0] - p[1]) ** 2 + 0.5 * (p[2] - p[3]) ** 2, abs=1e-12
    )


def test_two_spin_product_state_in_invariant_subspace():
    s_deg, _ = two_spin([1.0, 1.0, -1.0, -1.0])
    up_down = PureState(2, 2, [0.0, 1.0, 0.0, 0.0])
    ens = form_ensemble(up_down, s_deg)
    assert ens.size == 1
    assert mean_entanglement_closed_form(ens).mean == pytest.approx(0.0, abs=1e-14)


def test_jc_resonance_angles():
    _, model = jaynes_cummings(1.0, 1.0, 0.05, 4)
    np.testing.assert_allclose(model.theta, np.pi / 4, atol=1e-14)
    np.testing.assert_allclose(model.gamma, 0.5, atol=1e-14)


def test_jc_analytic_energies_match_numeric_diagonalization():
    s, model = jaynes_cummings(1.0, 0.92, 0.06, 5)
    numeric = spectral(jc_hamiltonian(model), model.dim_a, model.dim_b)
    # the numeric spectrum has one extra level: the decoupled top state
    # |n_max, e> left behind by the cutoff
    leftover = model.omega * model.n_max + 0.5 * model.omega0
    kept = np.sort([e for e in numeric.energies if abs(e - leftover) > 1e-9])
    np.testing.assert_allclose(kept, np.sort(s.energies), atol=1e-8)


def test_jc_eigenvectors_diagonalize_hamiltonian():
    s, model = jaynes_cummings(1.0, 1.05, 0.03, 6)
    h = jc_hamiltonian(model)
    v = s.eigenvector_matrix()
    residual = v.conj() @ h @ v.T - np.diag(s.energies)
    assert np.abs(residual).max() < 1e-8


def test_jc_eigenstate_reduced_atom_matrix():
    s, model = jaynes_cummings(1.0, 0.9, 0.05, 4)
    n = 2
    upper = s.eigenvectors[1 + 2 * n]  # dressed pair for block n
    tau = partial_trace(upper, "B").entries
    c2, s2 = np.cos(model.theta[n]) ** 2, np.sin(model.theta[n]) ** 2
    np.testing.assert_allclose(tau, np.diag([c2, s2]), atol=1e-12)


def test_jc_large_detuning_decouples():
    _, model = jaynes_cummings(1.0 + 200.0 * 0.05, 1.0, 0.05, 2)
    assert model.gamma[0] < 1e-4
    assert model.theta[0] < 0.02


def test_jc_excited_fock_state_decomposition():
    s, model = jaynes_cummings(1.0, 1.0, 0.05, 3)
    psi = jc_excited_fock_state(model, 0)
    upper, lower = s.eigenvectors[1], s.eigenvectors[2]
    np.testing.assert_allclose(
        [upper.inner(psi), lower.inner(psi)],
        [1 / np.sqrt(2), 1 / np.sqrt(2)],
        atol=1e-12,
    )
    assert entanglement(psi, LINEAR) == pytest.approx(0.0, abs=1e-14)


def test_jc_excited_fock_state_generic_coefficients():
    s, model = jaynes_cummings(1.0, 0.85, 0.04, 5)
    for n in range(model.n_max):
        psi = jc_excited_fock_state(model, n)
        upper, lower = s.eigenvectors[1 + 2 * n], s.eigenvectors[2 + 2 * n]
        assert upper.inner(psi) == pytest.approx(np.sin(model.theta[n]), abs=1e-12)
        assert lower.inner(psi) == pytest.approx(np.cos(model.theta[n]), abs=1e-12)


def test_jc_fock_index_validation():
    _, model = jaynes_cummings(1.0, 1.0, 0.05, 3)
    with pytest.raises(ValidationError):
        jc_excited_fock_state(model, 3)
    with pytest.raises(ValidationError):
        jc_excited_fock_state(model, -1)
    with pytest.raises(ValidationError):
        jaynes_cummings(1.0, 1.0, 0.05, 0)


def test_jc_population_formula():
    _, model = jaynes_cummings(1.0, 1.0, 0.08, 4)
    n = 1
    assert jc_population_w(model, n, 0.0) == 0.0
    quarter = np.pi / (2.0 * model.kappa * np.sqrt(n + 1))
    assert jc_population_w(model, n, quarter) == pytest.approx(1.0, abs=1e-12)


def test_jc_population_peak_is_twice_gamma():
    _, model = jaynes_cummings(1.0, 0.9, 0.05, 4)
    n = 0
    times = np.linspace(0.0, 4.0 * np.pi / model.splitting[n], 4001)
    peak = max(jc_population_w(model, n, float(t)) for t in times)
    assert peak == pytest.approx(2.0 * model.gamma[n], abs=1e-6)


def test_jc_reference_mean_values():
    _, model = jaynes_cummings(1.0, 1.0, 0.05, 3)
    assert jc_mean_entanglement_reference(model, 0) == pytest.approx(0.25, abs=1e-15)
    _, detuned = jaynes_cummings(1.0 + 300 * 0.05, 1.0, 0.05, 3)
    assert jc_mean_entanglement_reference(detuned, 0) == pytest.approx(0.0, abs=1e-3)


def test_jc_reference_matches_closed_form():
    for ratio in (0.0, 1.0, 5.0):
        s, model = jaynes_cummings(1.0, 1.0 - ratio * 0.05, 0.05, 4)
        for n in range(model.n_max - 1):
            psi = jc_excited_fock_state(model, n)
            closed = mean_entanglement_closed_form(form_ensemble(psi, s)).mean
            assert closed == pytest.approx(
                jc_mean_entanglement_reference(model, n), abs=1e-10
            )


def test_jc_reference_matches_both_oracles():
    ratio = 1.0
    s, model = jaynes_cummings(1.0, 1.0 - ratio * 0.05, 0.05, 3)
    psi = jc_excited_fock_state(model, 0)
    reference = jc_mean_entanglement_reference(model, 0)
    est = phase_average_oracle(form_ensemble(psi, s), LINEAR, 100_000, seed=5)
    assert abs(est.mean - reference) <= 4.0 * est.std_error
    period = np.pi / model.splitting[0]
    numeric = time_average_numeric(
        psi, s, LINEAR, horizon=200.0 * period, step=period / 64.0
    )
    assert numeric == pytest.approx(reference, abs=2e-3)


def test_jc_mean_maximum_over_detuning():
    # 2g - 3g^2 peaks at g = 1/3 with value 1/3; a detuning scan must find it
    kappa, n = 0.05, 0

    def negated_mean(ratio):
        _, model = jaynes_cummings(1.0 + ratio * kappa, 1.0, kappa, 2)
        return -jc_mean_entanglement_reference(model, n)

    result = minimize_scalar(negated_mean, bounds=(0.0, 5.0), method="bounded",
                             options={"xatol": 1e-10})
    _, model = jaynes_cummings(1.0 + result.x * kappa, 1.0, kappa, 2)
    assert model.gamma[n] == pytest.approx(1.0 / 3.0, abs=1e-6)
    assert -result.fun == pytest.approx(1.0 / 3.0, abs=1e-8)
