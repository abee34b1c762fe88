"""Microcanonical ensembles of wavefunctions and their mean entanglement.

An ensemble is a fixed orthonormal family of bipartite pure states with
weights; its members differ only by free phase factors. The mean linear
entanglement over all phase choices has a closed form built from the
members' reduced density matrices; a seeded Monte Carlo phase average is
provided as an independent estimator for either entropy kind.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .entropy import EntropyKind
from .errors import DimensionError, ValidationError
from .hilbert import DensityMatrix, PureState, reduced_matrix

WEIGHT_SUM_ATOL = 1e-12
MEMBER_ORTHO_ATOL = 1e-10
DELTA_SIDES_ATOL = 1e-10

_ORACLE_CHUNK = 1 << 14


@dataclass(frozen=True)
class MicrocanonicalEnsemble:
    """Weights plus a pairwise-orthonormal family of bipartite states.

    Zero-weight members are allowed; they contribute nothing but keep index
    alignment with the spectra they came from.
    """

    weights: np.ndarray
    members: tuple[PureState, ...]

    def __post_init__(self) -> None:
        w = np.asarray(self.weights, dtype=np.float64).ravel()
        members = tuple(self.members)
        if w.size != len(members) or w.size == 0:
            raise DimensionError("need one weight per member, at least one member")
        if (w < 0.0).any():
            raise ValidationError("weights must be nonnegative")
        total = float(w.sum())
        if abs(total - 1.0) > WEIGHT_SUM_ATOL:
            raise ValidationError(f"weights must sum to 1, got {total!r}")
        shape = (members[0].dim_a, members[0].dim_b)
        for m in members:
            if (m.dim_a, m.dim_b) != shape:
                raise DimensionError("members live on different bipartite spaces")
        matrix = np.array([m.amplitudes for m in members])
        gram = matrix @ matrix.conj().T
        defect = float(np.abs(gram - np.eye(w.size)).max())
        if defect > MEMBER_ORTHO_ATOL:
            raise ValidationError(
                f"members are not pairwise orthonormal (max defect {defect:.3e})"
            )
        w = w.copy()
        w.setflags(write=False)
        matrix.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "_matrix", matrix)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def dim_a(self) -> int:
        return self.members[0].dim_a

    @property
    def dim_b(self) -> int:
        return self.members[0].dim_b

    def member_matrix(self) -> np.ndarray:
        """Member amplitudes stacked as rows, shape (size, dim_a*dim_b)."""
        return self._matrix


@dataclass(frozen=True)
class MeanEntanglementReport:
    """Closed-form mean entanglement and the terms it is built from."""

    s1_sigma: float
    s1_tau: float
    delta: float
    mean: float

    def __post_init__(self) -> None:
        if self.mean != self.s1_sigma + self.s1_tau - self.delta:
            raise ValidationError("mean must equal s1_sigma + s1_tau - delta")


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Seeded sampling estimate with its standard error."""

    mean: float
    std_error: float
    samples: int
    seed: int

    def __post_init__(self) -> None:
        if self.samples < 2:
            raise ValidationError("need at least 2 samples")
        if self.std_error < 0.0:
            raise ValidationError("standard error must be nonnegative")
        if self.seed < 0:
            raise ValidationError("seed must be a nonnegative integer")


def average_reduced(e: MicrocanonicalEnsemble, keep: str) -> DensityMatrix:
    """Weighted average of the members' reduced density matrices."""
    acc = None
    for p, member in zip(e.weights, e.members):
        rho = reduced_matrix(member, keep)
        acc = p * rho if acc is None else acc + p * rho
    acc = 0.5 * (acc + acc.conj().T)
    return DensityMatrix(acc.shape[0], acc)


def _frobenius_sq(mat: np.ndarray) -> float:
    return float(np.vdot(mat, mat).real)


def mean_entanglement_closed_form(e: MicrocanonicalEnsemble) -> MeanEntanglementReport:
    """Phase-averaged linear entanglement of the ensemble, in closed form.

    The mean is the sum of the linear entropies of the two averaged reduced
    matrices minus an overlap correction. The correction has equal A-side
    and B-side forms; both are computed and must agree to 1e-10.
    """
    p = e.weights
    side_a = [reduced_matrix(m, "A") for m in e.members]
    side_b = [reduced_matrix(m, "B") for m in e.members]
    avg_a = sum(w * rho for w, rho in zip(p, side_a))
    avg_b = sum(w * rho for w, rho in zip(p, side_b))
    s1_sigma = 1.0 - _frobenius_sq(avg_a)
    s1_tau = 1.0 - _frobenius_sq(avg_b)
    delta_a = 1.0 - float(sum(w * w * _frobenius_sq(rho) for w, rho in zip(p, side_a)))
    delta_b = 1.0 - float(sum(w * w * _frobenius_sq(rho) for w, rho in zip(p, side_b)))
    if abs(delta_a - delta_b) > DELTA_SIDES_ATOL:
        raise ArithmeticError(
            f"A-side and B-side overlap corrections disagree: "
            f"{delta_a!r} vs {delta_b!r}"
        )
    return MeanEntanglementReport(
        s1_sigma=s1_sigma,
        s1_tau=s1_tau,
        delta=delta_a,
        mean=s1_sigma + s1_tau - delta_a,
    )


def cross_term_matrix(e: MicrocanonicalEnsemble) -> np.ndarray:
    """Symmetric matrix of A-side cross-operator product traces.

    Entry (m, n) is the trace of the product of the (m, n) and (n, m) cross
    operators, which is the squared Frobenius norm of either one. Diagonal
    entries are the purities of the members' reduced matrices.
    """
    mats = [m.matrix() for m in e.members]
    n = len(mats)
    out = np.empty((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i, n):
            cross = mats[j] @ mats[i].conj().T
            out[i, j] = out[j, i] = _frobenius_sq(cross)
    return out


def phase_average_oracle(
    e: MicrocanonicalEnsemble,
    kind: EntropyKind,
    samples: int,
    seed: int,
) -> MonteCarloEstimate:
    """Monte Carlo estimate of the phase-averaged entanglement.

    Each sample draws independent phases uniform on [0, 2pi) for every
    member, forms the dressed superposition, and evaluates its entanglement.
    Phases come from numpy's default generator (PCG64) seeded with ``seed``
    and are drawn in fixed-size chunks, so results are reproducible for a
    given seed regardless of the kernel backend (up to summation roundoff).
    """
    if samples < 2:
        raise ValidationError("need at least 2 samples")
    if seed < 0:
        raise ValidationError("seed must be a nonnegative integer")
    rng = np.random.default_rng(seed)
    root_p = np.sqrt(e.weights)
    members = e.member_matrix()
    dim_a, dim_b = e.dim_a, e.dim_b
    values = np.empty(samples, dtype=np.float64)
    for start in range(0, samples, _ORACLE_CHUNK):
        count = min(_ORACLE_CHUNK, samples - start)
        phases = rng.uniform(0.0, 2.0 * np.pi, size=(count, e.size))
        coeffs = root_p * np.exp(1j * phases)
        if kind is EntropyKind.LINEAR:
            chunk = _kernels.linear_entanglement_batch(coeffs, members, dim_a, dim_b)
        else:
            chunk = _kernels.von_neumann_entanglement_batch(
                coeffs, members, dim_a, dim_b
            )
        values[start : start + count] = chunk
    mean = float(values.mean())
    std_error = float(values.std(ddof=1) / np.sqrt(samples))
    return MonteCarloEstimate(mean=mean, std_error=std_error, samples=samples, seed=seed)
