"""Bundled reference systems: interacting two-spin pairs and the truncated
Jaynes-Cummings model, with their analytic expectations."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import DEGENERACY_TOL_DEFAULT, SpectralDecomposition, group_energies
from .errors import ValidationError
from .hilbert import PureState

_INV_SQRT2 = 1.0 / np.sqrt(2.0)

# Bell-type eigenbasis over |uu>, |ud>, |du>, |dd> (A-slow indexing)
_TWO_SPIN_BASIS = np.array(
    [
        [_INV_SQRT2, 0.0, 0.0, _INV_SQRT2],
        [_INV_SQRT2, 0.0, 0.0, -_INV_SQRT2],
        [0.0, _INV_SQRT2, _INV_SQRT2, 0.0],
        [0.0, _INV_SQRT2, -_INV_SQRT2, 0.0],
    ],
    dtype=np.complex128,
)


@dataclass(frozen=True)
class TwoSpinModel:
    """Two qubits with a Hamiltonian diagonal in the Bell-type basis."""

    energies: np.ndarray
    basis: tuple[PureState, ...]

    def __post_init__(self) -> None:
        e = np.asarray(self.energies, dtype=np.float64).ravel()
        if e.size != 4:
            raise ValidationError("two-spin model needs exactly 4 energies")
        e = e.copy()
        e.setflags(write=False)
        object.__setattr__(self, "energies", e)
        object.__setattr__(self, "basis", tuple(self.basis))


def two_spin(
    energies, degeneracy_tol: float = DEGENERACY_TOL_DEFAULT
) -> tuple[SpectralDecomposition, TwoSpinModel]:
    """Two-qubit model with the four Bell-type states as eigenvectors.

    Degenerate energies are allowed; they merge into invariant-subspace
    groups under the given tolerance.
    """
    e = np.asarray(energies, dtype=np.float64).ravel()
    if e.size != 4:
        raise ValidationError("expected 4 energies")
    basis = tuple(PureState(2, 2, row) for row in _TWO_SPIN_BASIS)
    s = SpectralDecomposition(
        energies=e,
        eigenvectors=basis,
        degeneracy_groups=group_energies(e, degeneracy_tol),
        degeneracy_tol=degeneracy_tol,
    )
    return s, TwoSpinModel(energies=e, basis=basis)


def two_spin_hamiltonian(model: TwoSpinModel) -> np.ndarray:
    """Dense Hamiltonian assembled from the model's eigenprojectors."""
    h = np.zeros((4, 4), dtype=np.complex128)
    for energy, state in zip(model.energies, model.basis):
        h += energy * np.outer(state.amplitudes, state.amplitudes.conj())
    return h


@dataclass(frozen=True)
class JaynesCummingsModel:
    """Two-level atom coupled to one cavity mode, truncated at n_max quanta.

    Subsystem A is the oscillator (dimension n_max + 1), subsystem B the
    atom with basis (ground, excited). Arrays are indexed by the excitation
    block n = 0 .. n_max - 1: ``theta`` are the mixing angles, ``splitting``
    the dressed half-gaps, and ``gamma`` the population-transfer amplitudes.
    """

    omega: float
    omega0: float
    kappa: float
    n_max: int
    theta: np.ndarray
    splitting: np.ndarray
    gamma: np.ndarray

    def __post_init__(self) -> None:
        if self.n_max < 1:
            raise ValidationError("n_max must be at least 1")
        theta = np.asarray(self.theta, dtype=np.float64)
        splitting = np.asarray(self.splitting, dtype=np.float64)
        gamma = np.asarray(self.gamma, dtype=np.float64)
        if not (
            theta.shape == splitting.shape == gamma.shape == (self.n_max,)
        ):
            raise ValidationError("derived arrays must have length n_max")
        if self.kappa != 0.0 and not (splitting > 0.0).all():
            raise ValidationError("dressed splittings must be positive")
        if self.kappa > 0.0 and not ((theta > 0.0) & (theta < np.pi / 2)).all():
            raise ValidationError("mixing angles must lie in (0, pi/2)")
        if not ((gamma >= 0.0) & (gamma <= 0.5)).all():
            raise ValidationError("gamma values must lie in [0, 1/2]")
        for name, arr in (("theta", theta), ("splitting", splitting), ("gamma", gamma)):
            arr = arr.copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def dim_a(self) -> int:
        return self.n_max + 1

    @property
    def dim_b(self) -> int:
        return 2


def _atom_osc_index(fock: int, atom: int) -> int:
    # amplitude index for |fock>_A (x) |atom>_B with atom: 0 = ground, 1 = excited
    return 2 * fock + atom


def jaynes_cummings(
    omega: float,
    omega0: float,
    kappa: float,
    n_max: int,
    degeneracy_tol: float = DEGENERACY_TOL_DEFAULT,
) -> tuple[SpectralDecomposition, JaynesCummingsModel]:
    """Analytic eigenbasis of the truncated Jaynes-Cummings Hamiltonian.

    The eigenvectors are the decoupled ground state |0, g> at energy
    -omega0/2 and, per excitation block n, the dressed pair mixing
    |n+1, g> and |n, e> at energies omega (n + 1/2) +/- splitting. The
    excitation-number blocks close under the cutoff, so truncation is exact
    for states supported below it.
    """
    if n_max < 1:
        raise ValidationError("n_max must be at least 1")
    ns = np.arange(n_max)
    coupling = kappa * np.sqrt(ns + 1.0)
    half_detuning = 0.5 * (omega - omega0)
    splitting = np.hypot(half_detuning, coupling)
    theta = np.arctan2(coupling, half_detuning + splitting)
    gamma = 0.5 * np.sin(2.0 * theta) ** 2
    model = JaynesCummingsModel(
        omega=float(omega),
        omega0=float(omega0),
        kappa=float(kappa),
        n_max=int(n_max),
        theta=theta,
        splitting=splitting,
        gamma=gamma,
    )

    dim_a = n_max + 1
    dim = 2 * dim_a
    energies = [-0.5 * omega0]
    rows = [np.zeros(dim, dtype=np.complex128)]
    rows[0][_atom_osc_index(0, 0)] = 1.0
    for n in range(n_max):
        center = omega * (n + 0.5)
        upper = np.zeros(dim, dtype=np.complex128)
        upper[_atom_osc_index(n + 1, 0)] = np.cos(theta[n])
        upper[_atom_osc_index(n, 1)] = np.sin(theta[n])
        lower = np.zeros(dim, dtype=np.complex128)
        lower[_atom_osc_index(n + 1, 0)] = -np.sin(theta[n])
        lower[_atom_osc_index(n, 1)] = np.cos(theta[n])
        energies.extend([center + splitting[n], center - splitting[n]])
        rows.extend([upper, lower])

    energy_arr = np.array(energies)
    states = tuple(PureState(dim_a, 2, row) for row in rows)
    s = SpectralDecomposition(
        energies=energy_arr,
        eigenvectors=states,
        degeneracy_groups=group_energies(energy_arr, degeneracy_tol),
        degeneracy_tol=degeneracy_tol,
    )
    return s, model


def jc_hamiltonian(model: JaynesCummingsModel) -> np.ndarray:
    """Truncated Jaynes-Cummings Hamiltonian assembled from ladder operators."""
    na = model.dim_a
    lower = np.zeros((na, na))
    for i in range(na - 1):
        lower[i, i + 1] = np.sqrt(i + 1.0)
    raise_ = lower.T
    number = raise_ @ lower
    eye_osc = np.eye(na)
    eye_atom = np.eye(2)
    sz = np.diag([-1.0, 1.0])
    sigma_plus = np.array([[0.0, 0.0], [1.0, 0.0]])
    sigma_minus = sigma_plus.T
    h = (
        model.omega * np.kron(number, eye_atom)
        + 0.5 * model.omega0 * np.kron(eye_osc, sz)
        + model.kappa
        * (np.kron(raise_, sigma_minus) + np.kron(lower, sigma_plus))
    )
    return h


def jc_excited_fock_state(model: JaynesCummingsModel, n: int) -> PureState:
    """Product state of the excited atom with the n-th Fock level."""
    if not 0 <= n <= model.n_max - 1:
        raise ValidationError(
            f"Fock index {n} outside the exactly-truncated range [0, {model.n_max - 1}]"
        )
    amp = np.zeros(2 * model.dim_a, dtype=np.complex128)
    amp[_atom_osc_index(n, 1)] = 1.0
    return PureState(model.dim_a, 2, amp)


def jc_population_w(model: JaynesCummingsModel, n: int, t: float) -> float:
    """Atom ground-state population at time t for the initial |n, excited>.

    Oscillates at the dressed splitting of block n with amplitude
    ``2 gamma_n``; on resonance the splitting reduces to kappa sqrt(n+1).
    """
    if not 0 <= n <= model.n_max - 1:
        raise ValidationError(f"Fock index {n} outside [0, {model.n_max - 1}]")
    return float(
        2.0 * model.gamma[n] * np.sin(model.splitting[n] * t) ** 2
    )


def jc_mean_entanglement_reference(model: JaynesCummingsModel, n: int) -> float:
    """Analytic mean linear entanglement for the initial |n, excited>."""
    if not 0 <= n <= model.n_max - 1:
        raise ValidationError(f"Fock index {n} outside [0, {model.n_max - 1}]")
    g = float(model.gamma[n])
    return 2.0 * g - 3.0 * g * g
