"""Unitary time evolution from a spectral decomposition.

Energies are angular frequencies (hbar = 1). Degenerate eigenvalues are
grouped into invariant subspaces; projecting an initial state onto those
subspaces yields the phase ensemble whose average the closed form computes.
The exact time average keeps every resonant index quadruple, so it can
differ from the ensemble average exactly when nontrivial resonances exist.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .ensemble import MicrocanonicalEnsemble
from .entropy import EntropyKind
from .errors import DimensionError, ValidationError
from .hilbert import PureState

DEGENERACY_TOL_DEFAULT = 1e-9
RESONANCE_TOL_FACTOR = 1e-9
SPAN_RESIDUAL_ATOL = 1e-10
PROJECTION_WEIGHT_CUTOFF = 1e-14
EIGENVECTOR_ORTHO_ATOL = 1e-10
HAMILTONIAN_HERMITIAN_ATOL = 1e-10

_TIME_CHUNK = 1 << 14


def group_energies(energies, tol: float) -> tuple[tuple[int, ...], ...]:
    """Partition indices into degeneracy groups by chained closeness.

    Consecutive energies (in sorted order) are merged when they differ by at
    most ``tol * max(1, |e|)``. Returned groups are ordered by energy and
    hold original indices.
    """
    e = np.asarray(energies, dtype=np.float64).ravel()
    if e.size == 0:
        raise DimensionError("need at least one energy")
    order = np.argsort(e, kind="stable")
    groups: list[tuple[int, ...]] = []
    current = [int(order[0])]
    for prev, idx in zip(order, order[1:]):
        scale = max(1.0, abs(e[prev]), abs(e[idx]))
        if e[idx] - e[prev] <= tol * scale:
            current.append(int(idx))
        else:
            groups.append(tuple(current))
            current = [int(idx)]
    groups.append(tuple(current))
    return tuple(groups)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Energies with orthonormal eigenvectors and their degeneracy groups."""

    energies: np.ndarray
    eigenvectors: tuple[PureState, ...]
    degeneracy_groups: tuple[tuple[int, ...], ...]
    degeneracy_tol: float = DEGENERACY_TOL_DEFAULT

    def __post_init__(self) -> None:
        e = np.asarray(self.energies, dtype=np.float64).ravel()
        vectors = tuple(self.eigenvectors)
        if e.size != len(vectors) or e.size == 0:
            raise DimensionError("need one eigenvector per energy")
        shape = (vectors[0].dim_a, vectors[0].dim_b)
        for v in vectors:
            if (v.dim_a, v.dim_b) != shape:
                raise DimensionError("eigenvectors live on different spaces")
        matrix = np.array([v.amplitudes for v in vectors])
        gram = matrix @ matrix.conj().T
        defect = float(np.abs(gram - np.eye(e.size)).max())
        if defect > EIGENVECTOR_ORTHO_ATOL:
            raise ValidationError(
                f"eigenvectors are not orthonormal (max defect {defect:.3e})"
            )
        expected = group_energies(e, self.degeneracy_tol)
        if {frozenset(g) for g in self.degeneracy_groups} != {
            frozenset(g) for g in expected
        }:
            raise ValidationError(
                "degeneracy groups do not match the stated tolerance"
            )
        e = e.copy()
        e.setflags(write=False)
        matrix.setflags(write=False)
        object.__setattr__(self, "energies", e)
        object.__setattr__(self, "eigenvectors", vectors)
        object.__setattr__(
            self, "degeneracy_groups", tuple(tuple(g) for g in self.degeneracy_groups)
        )
        object.__setattr__(self, "_matrix", matrix)

    @property
    def size(self) -> int:
        return len(self.eigenvectors)

    @property
    def dim_a(self) -> int:
        return self.eigenvectors[0].dim_a

    @property
    def dim_b(self) -> int:
        return self.eigenvectors[0].dim_b

    def eigenvector_matrix(self) -> np.ndarray:
        """Eigenvector amplitudes stacked as rows."""
        return self._matrix


@dataclass(frozen=True)
class TimeSeries:
    """Sampled scalar signal on a strictly increasing time grid."""

    times: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        t = np.asarray(self.times, dtype=np.float64).ravel()
        v = np.asarray(self.values, dtype=np.float64).ravel()
        if t.size != v.size or t.size == 0:
            raise DimensionError("times and values must have equal, nonzero length")
        if t.size > 1 and not (np.diff(t) > 0.0).all():
            raise ValidationError("times must be strictly increasing")
        t = t.copy()
        v = v.copy()
        t.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "values", v)


@dataclass(frozen=True)
class ExactTimeAverage:
    """Algebraic time average with its resonance bookkeeping."""

    value: float
    resonant_quadruples: int
    has_nontrivial_resonances: bool


def spectral(
    h, dim_a: int, dim_b: int, degeneracy_tol: float = DEGENERACY_TOL_DEFAULT
) -> SpectralDecomposition:
    """Eigen-decompose a Hermitian matrix on the full bipartite space.

    Energies come out ascending. Eigenvalues closer than the relative
    degeneracy tolerance merge into one invariant-subspace group.
    """
    mat = np.asarray(h, dtype=np.complex128)
    d = dim_a * dim_b
    if mat.shape != (d, d):
        raise DimensionError(f"expected a {d}x{d} matrix, got shape {mat.shape}")
    defect = float(np.abs(mat - mat.conj().T).max())
    if defect > HAMILTONIAN_HERMITIAN_ATOL:
        raise ValidationError(f"matrix is not Hermitian (max defect {defect:.3e})")
    vals, vecs = np.linalg.eigh(0.5 * (mat + mat.conj().T))
    states = tuple(PureState(dim_a, dim_b, vecs[:, k]) for k in range(d))
    return SpectralDecomposition(
        energies=vals,
        eigenvectors=states,
        degeneracy_groups=group_energies(vals, degeneracy_tol),
        degeneracy_tol=degeneracy_tol,
    )


def _coefficients(psi: PureState, s: SpectralDecomposition) -> np.ndarray:
    if (psi.dim_a, psi.dim_b) != (s.dim_a, s.dim_b):
        raise DimensionError("state and spectrum live on different spaces")
    matrix = s.eigenvector_matrix()
    lam = matrix.conj() @ psi.amplitudes
    residual = float(np.linalg.norm(psi.amplitudes - lam @ matrix))
    if residual > SPAN_RESIDUAL_ATOL:
        raise ValidationError(
            f"state lies outside the spectral span (residual {residual:.3e})"
        )
    return lam


def evolve(psi: PureState, s: SpectralDecomposition, t: float) -> PureState:
    """Unitary evolution of an in-span state by time t."""
    lam = _coefficients(psi, s)
    amp = (lam * np.exp(-1j * s.energies * t)) @ s.eigenvector_matrix()
    return PureState(psi.dim_a, psi.dim_b, amp)


def evolve_amplitudes(psi: PureState, s: SpectralDecomposition, times) -> np.ndarray:
    """Evolved amplitude rows for a batch of times, shape (len(times), dim)."""
    lam = _coefficients(psi, s)
    t = np.asarray(times, dtype=np.float64).ravel()
    coeffs = lam * np.exp(-1j * np.outer(t, s.energies))
    return coeffs @ s.eigenvector_matrix()


def _entanglement_values(
    lam: np.ndarray, s: SpectralDecomposition, kind: EntropyKind, times: np.ndarray
) -> np.ndarray:
    matrix = s.eigenvector_matrix()
    out = np.empty(times.size, dtype=np.float64)
    for start in range(0, times.size, _TIME_CHUNK):
        chunk = times[start : start + _TIME_CHUNK]
        coeffs = lam * np.exp(-1j * np.outer(chunk, s.energies))
        if kind is EntropyKind.LINEAR:
            vals = _kernels.linear_entanglement_batch(
                coeffs, matrix, s.dim_a, s.dim_b
            )
        else:
            vals = _kernels.von_neumann_entanglement_batch(
                coeffs, matrix, s.dim_a, s.dim_b
            )
        out[start : start + chunk.size] = vals
    return out


def entanglement_series(
    psi: PureState, s: SpectralDecomposition, kind: EntropyKind, times
) -> TimeSeries:
    """Entanglement of the evolved state on a time grid."""
    lam = _coefficients(psi, s)
    t = np.asarray(times, dtype=np.float64).ravel()
    return TimeSeries(times=t, values=_entanglement_values(lam, s, kind, t))


def _nonzero_gaps(s: SpectralDecomposition) -> np.ndarray:
    e = s.energies
    diffs = np.abs(e[:, None] - e[None, :])[np.triu_indices(e.size, k=1)]
    scale = max(1.0, float(np.abs(e).max()))
    return diffs[diffs > RESONANCE_TOL_FACTOR * scale]


def default_time_grid_parameters(s: SpectralDecomposition) -> tuple[float, float]:
    """Default (horizon, step): 200 periods of the slowest beat, 2% of the fastest."""
    gaps = _nonzero_gaps(s)
    if gaps.size == 0:
        raise ValidationError("spectrum has no nonzero gaps; dynamics is stationary")
    horizon = 200.0 * 2.0 * np.pi / float(gaps.min())
    step = 0.02 * 2.0 * np.pi / float(gaps.max())
    return horizon, step


def time_average_numeric(
    psi: PureState,
    s: SpectralDecomposition,
    kind: EntropyKind,
    horizon: float | None = None,
    step: float | None = None,
) -> float:
    """Trapezoidal average of the evolved state's entanglement over [0, horizon].

    The grid uses ceil(horizon/step) uniform intervals, so the effective
    spacing never exceeds the requested step.
    """
    lam = _coefficients(psi, s)
    if horizon is None or step is None:
        gaps = _nonzero_gaps(s)
        if gaps.size == 0:
            # stationary up to phases: the average is the instantaneous value
            return float(_entanglement_values(lam, s, kind, np.zeros(1))[0])
        if horizon is None:
            horizon = 200.0 * 2.0 * np.pi / float(gaps.min())
        if step is None:
            step = 0.02 * 2.0 * np.pi / float(gaps.max())
    if not horizon > 0.0:
        raise ValidationError("horizon must be positive")
    if not 0.0 < step < horizon:
        raise ValidationError("step must satisfy 0 < step < horizon")
    intervals = int(np.ceil(horizon / step))
    times = np.linspace(0.0, horizon, intervals + 1)
    values = _entanglement_values(lam, s, kind, times)
    return float((values.sum() - 0.5 * (values[0] + values[-1])) / intervals)


def exact_time_average(
    psi: PureState,
    s: SpectralDecomposition,
    resonance_tol: float | None = None,
) -> ExactTimeAverage:
    """Infinite-horizon linear-entropy time average, evaluated algebraically.

    The purity of the evolved reduced matrix is a sum over index quadruples
    (m, n, r, s) oscillating at e_m - e_n + e_r - e_s; averaging kills every
    quadruple except those with zero frequency sum (within the tolerance).
    Quadruples beyond the pairings {m=n, r=s} and {m=s, n=r} are nontrivial
    resonances: exactly where the time and ensemble averages may differ.
    """
    lam = _coefficients(psi, s)
    if resonance_tol is None:
        resonance_tol = RESONANCE_TOL_FACTOR * float(np.abs(s.energies).max())
    support = np.flatnonzero(np.abs(lam) ** 2 > PROJECTION_WEIGHT_CUTOFF)
    lam_s = lam[support]
    energies = s.energies[support]
    k = support.size
    mats = [s.eigenvectors[int(i)].matrix() for i in support]
    keep_a = s.dim_a <= s.dim_b

    # cross[i][j] is the smaller-side reduced operator of |psi_j><psi_i|
    cross = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if keep_a:
                cross[i][j] = mats[j] @ mats[i].conj().T
            else:
                cross[i][j] = mats[j].T @ mats[i].conj()

    pair_index = [(m, n) for m in range(k) for n in range(k)]
    diffs = np.array([energies[m] - energies[n] for m, n in pair_index])
    order = np.argsort(diffs, kind="stable")
    sorted_diffs = diffs[order]

    total = 0.0 + 0.0j
    count = 0
    nontrivial = False
    for a, (m, n) in enumerate(pair_index):
        target = -diffs[a]
        lo = int(np.searchsorted(sorted_diffs, target - resonance_tol, side="left"))
        hi = int(np.searchsorted(sorted_diffs, target + resonance_tol, side="right"))
        for b in order[lo:hi]:
            r, sdx = pair_index[int(b)]
            weight = (
                np.conj(lam_s[m]) * lam_s[n] * np.conj(lam_s[r]) * lam_s[sdx]
            )
            trace = np.sum(cross[m][n] * cross[r][sdx].T)
            total += weight * trace
            count += 1
            if not ((m == n and r == sdx) or (m == sdx and n == r)):
                nontrivial = True
    return ExactTimeAverage(
        value=1.0 - float(total.real),
        resonant_quadruples=count,
        has_nontrivial_resonances=nontrivial,
    )


def time_average_exact_linear(
    psi: PureState,
    s: SpectralDecomposition,
    resonance_tol: float | None = None,
) -> float:
    """Value of the algebraic infinite-horizon linear time average."""
    return exact_time_average(psi, s, resonance_tol).value


def form_ensemble(psi: PureState, s: SpectralDecomposition) -> MicrocanonicalEnsemble:
    """Project a state onto the invariant subspaces to form its ensemble.

    One member per degeneracy group with nonzero projection; weights are the
    squared projection norms. Groups with weight below 1e-14 are dropped so
    no member needs a near-zero normalization.
    """
    lam = _coefficients(psi, s)
    matrix = s.eigenvector_matrix()
    weights = []
    members = []
    for group in s.degeneracy_groups:
        idx = list(group)
        amp = lam[idx] @ matrix[idx]
        p = float(np.vdot(amp, amp).real)
        if p < PROJECTION_WEIGHT_CUTOFF:
            continue
        weights.append(p)
        members.append(PureState(s.dim_a, s.dim_b, amp / np.sqrt(p)))
    return MicrocanonicalEnsemble(np.array(weights), tuple(members))
