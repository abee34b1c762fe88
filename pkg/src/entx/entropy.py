"""Linear and von Neumann entropies, and pure-state entanglement."""

from __future__ import annotations

import enum

import numpy as np

from .errors import InvalidDensityError
from .hilbert import EIGENVALUE_FLOOR, DensityMatrix, PureState, partial_trace


class EntropyKind(enum.Enum):
    LINEAR = "linear"
    VON_NEUMANN = "von-neumann"


def entropy(rho: DensityMatrix, kind: EntropyKind) -> float:
    """Entropy of a density matrix, in nats for the von Neumann case.

    The linear entropy ``1 - Tr rho^2`` is evaluated directly from the
    matrix entries without diagonalization. The von Neumann entropy
    ``-sum(w log w)`` clamps eigenvalues to [0, 1] after checking them
    against the admissibility floor, with the convention 0 log 0 = 0.
    """
    if kind is EntropyKind.LINEAR:
        purity = float(np.vdot(rho.entries, rho.entries).real)
        return max(0.0, 1.0 - purity)
    if kind is not EntropyKind.VON_NEUMANN:
        raise TypeError(f"unknown entropy kind: {kind!r}")
    vals = np.linalg.eigvalsh(rho.entries)
    if float(vals.min()) < EIGENVALUE_FLOOR:
        raise InvalidDensityError(
            f"eigenvalue {float(vals.min()):.3e} below admissibility floor"
        )
    vals = np.clip(vals, 0.0, 1.0)
    logs = np.log(np.where(vals > 0.0, vals, 1.0))
    return max(0.0, float(-(vals * logs).sum()))


def entanglement(psi: PureState, kind: EntropyKind) -> float:
    """Entanglement of a pure state: entropy of a reduced density matrix.

    Both subsystems give the same value; the smaller one is used.
    """
    keep = "A" if psi.dim_a <= psi.dim_b else "B"
    return entropy(partial_trace(psi, keep), kind)
