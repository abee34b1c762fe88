"""Dense complex linear algebra for bipartite pure states.

States live on a tensor product of two finite spaces. Amplitudes are stored
row-major with subsystem A as the slow index: entry ``i * dim_b + j`` is the
coefficient of ``|i>_A (x) |j>_B``. All types are immutable after
construction and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, InvalidDensityError, ValidationError

NORM_ATOL = 1e-12
HERMITIAN_ATOL = 1e-12
EIGENVALUE_FLOOR = -1e-10
ORTHO_ATOL = 1e-12
SCHMIDT_WEIGHT_CUTOFF = 1e-14

_SUBSYSTEMS = ("A", "B")


def _frozen_copy(values, dtype) -> np.ndarray:
    out = np.array(values, dtype=dtype, copy=True)
    out.setflags(write=False)
    return out


def _check_subsystem(keep: str) -> None:
    if keep not in _SUBSYSTEMS:
        raise ValidationError(f"subsystem tag must be 'A' or 'B', got {keep!r}")


@dataclass(frozen=True)
class PureState:
    """Normalized wavefunction on a bipartite (dim_a, dim_b) space."""

    dim_a: int
    dim_b: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if int(self.dim_a) < 1 or int(self.dim_b) < 1:
            raise DimensionError("subsystem dimensions must be positive")
        amp = np.asarray(self.amplitudes, dtype=np.complex128).ravel()
        if amp.size != self.dim_a * self.dim_b:
            raise DimensionError(
                f"expected {self.dim_a * self.dim_b} amplitudes, got {amp.size}"
            )
        norm_sq = float(np.vdot(amp, amp).real)
        if abs(norm_sq - 1.0) > NORM_ATOL:
            raise ValidationError(
                f"state is not normalized: |psi|^2 = {norm_sq!r}"
            )
        object.__setattr__(self, "amplitudes", _frozen_copy(amp, np.complex128))

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b

    def matrix(self) -> np.ndarray:
        """Amplitudes reshaped to a (dim_a, dim_b) coefficient matrix."""
        return self.amplitudes.reshape(self.dim_a, self.dim_b)

    def inner(self, other: "PureState") -> complex:
        """Inner product <self|other>."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, positive-semidefinite, trace-one matrix on one subsystem."""

    dim: int
    entries: np.ndarray

    def __post_init__(self) -> None:
        if int(self.dim) < 1:
            raise DimensionError("dimension must be positive")
        mat = np.asarray(self.entries, dtype=np.complex128)
        if mat.shape != (self.dim, self.dim):
            raise DimensionError(
                f"expected shape {(self.dim, self.dim)}, got {mat.shape}"
            )
        herm_defect = float(np.abs(mat - mat.conj().T).max())
        if herm_defect > HERMITIAN_ATOL:
            raise ValidationError(
                f"matrix is not Hermitian (max defect {herm_defect:.3e})"
            )
        trace = complex(np.trace(mat))
        if abs(trace - 1.0) > NORM_ATOL:
            raise ValidationError(f"trace must be 1, got {trace!r}")
        lowest = float(np.linalg.eigvalsh(mat).min())
        if lowest < EIGENVALUE_FLOOR:
            raise InvalidDensityError(
                f"negative eigenvalue {lowest:.3e} below tolerance"
            )
        object.__setattr__(self, "entries", _frozen_copy(mat, np.complex128))


@dataclass(frozen=True)
class CrossOperator:
    """Partial trace of |psi_n><psi_m| over the discarded subsystem.

    Not Hermitian in general; the (m, n) operator is the conjugate transpose
    of the (n, m) one.
    """

    dim: int
    entries: np.ndarray
    subsystem: str

    def __post_init__(self) -> None:
        _check_subsystem(self.subsystem)
        mat = np.asarray(self.entries, dtype=np.complex128)
        if mat.shape != (self.dim, self.dim):
            raise DimensionError(
                f"expected shape {(self.dim, self.dim)}, got {mat.shape}"
            )
        object.__setattr__(self, "entries", _frozen_copy(mat, np.complex128))


@dataclass(frozen=True)
class SchmidtDecomposition:
    """Weights and paired orthonormal vectors of the Schmidt form.

    ``sum_n sqrt(weights[n]) vectors_a[n] (x) vectors_b[n]`` reproduces the
    decomposed state. Weights are sorted descending and sum to one.
    """

    weights: np.ndarray
    vectors_a: np.ndarray
    vectors_b: np.ndarray

    def __post_init__(self) -> None:
        w = np.asarray(self.weights, dtype=np.float64).ravel()
        va = np.asarray(self.vectors_a, dtype=np.complex128)
        vb = np.asarray(self.vectors_b, dtype=np.complex128)
        if va.ndim != 2 or vb.ndim != 2 or va.shape[0] != w.size or vb.shape[0] != w.size:
            raise DimensionError("weights and vector sets must have matching counts")
        if (w < 0.0).any():
            raise ValidationError("Schmidt weights must be nonnegative")
        total = float(w.sum())
        if abs(total - 1.0) > NORM_ATOL:
            raise ValidationError(f"Schmidt weights must sum to 1, got {total!r}")
        for label, vecs in (("A", va), ("B", vb)):
            gram = vecs @ vecs.conj().T
            defect = float(np.abs(gram - np.eye(w.size)).max())
            if defect > ORTHO_ATOL:
                raise ValidationError(
                    f"subsystem {label} Schmidt vectors are not orthonormal "
                    f"(max defect {defect:.3e})"
                )
        object.__setattr__(self, "weights", _frozen_copy(w, np.float64))
        object.__setattr__(self, "vectors_a", _frozen_copy(va, np.complex128))
        object.__setattr__(self, "vectors_b", _frozen_copy(vb, np.complex128))


def tensor(a, b) -> PureState:
    """Product state of two normalized single-subsystem vectors."""
    va = np.asarray(a, dtype=np.complex128).ravel()
    vb = np.asarray(b, dtype=np.complex128).ravel()
    if va.size == 0 or vb.size == 0:
        raise DimensionError("factors must have positive dimension")
    return PureState(va.size, vb.size, np.kron(va, vb))


def reduced_matrix(psi: PureState, keep: str) -> np.ndarray:
    """Raw reduced-density-matrix entries of one subsystem.

    Output is symmetrized to be exactly Hermitian; roundoff from the
    accumulation would otherwise leak into entropy inputs.
    """
    _check_subsystem(keep)
    m = psi.matrix()
    if keep == "A":
        rho = m @ m.conj().T
    else:
        rho = m.T @ m.conj()
    return 0.5 * (rho + rho.conj().T)


def partial_trace(psi: PureState, keep: str) -> DensityMatrix:
    """Reduced density matrix of the kept subsystem."""
    rho = reduced_matrix(psi, keep)
    return DensityMatrix(rho.shape[0], rho)


def cross_operator(psi_m: PureState, psi_n: PureState, keep: str) -> CrossOperator:
    """Partial trace of |psi_n><psi_m| over the discarded subsystem.

    The diagonal case (psi_m == psi_n) reduces to the ordinary partial trace.
    """
    _check_subsystem(keep)
    if (psi_m.dim_a, psi_m.dim_b) != (psi_n.dim_a, psi_n.dim_b):
        raise DimensionError("states live on different bipartite spaces")
    mm = psi_m.matrix()
    mn = psi_n.matrix()
    if keep == "A":
        entries = mn @ mm.conj().T
    else:
        entries = mn.T @ mm.conj()
    return CrossOperator(entries.shape[0], entries, keep)


def schmidt(psi: PureState) -> SchmidtDecomposition:
    """Schmidt decomposition via the smaller reduced density matrix.

    Weights are the descending eigenvalues of the smaller-side reduced
    matrix; partner vectors are obtained by applying the coefficient matrix
    and renormalizing. Weights below 1e-14 are dropped together with their
    vectors.
    """
    m = psi.matrix()
    a_is_small = psi.dim_a <= psi.dim_b
    if a_is_small:
        red = m @ m.conj().T
    else:
        red = m.T @ m.conj()
    red = 0.5 * (red + red.conj().T)
    vals, vecs = np.linalg.eigh(red)
    order = np.argsort(vals)[::-1]
    weights = np.clip(vals[order], 0.0, None)
    own = np.ascontiguousarray(vecs[:, order].T)
    keep = weights > SCHMIDT_WEIGHT_CUTOFF
    weights = weights[keep]
    own = own[keep]
    if a_is_small:
        partner = own.conj() @ m
    else:
        partner = own.conj() @ m.T
    partner = partner / np.linalg.norm(partner, axis=1)[:, None]
    if a_is_small:
        return SchmidtDecomposition(weights, own, partner)
    return SchmidtDecomposition(weights, partner, own)
