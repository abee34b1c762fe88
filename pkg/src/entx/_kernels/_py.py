"""Vectorized numpy implementation of the batch entanglement kernels."""

from __future__ import annotations

import numpy as np


def _gram_batch(amps: np.ndarray, dim_a: int, dim_b: int) -> np.ndarray:
    """Smaller-side reduced matrices for a batch of amplitude rows."""
    m = amps.reshape(amps.shape[0], dim_a, dim_b)
    if dim_a <= dim_b:
        return m @ m.conj().swapaxes(1, 2)
    return m.conj().swapaxes(1, 2) @ m


def linear_entanglement_amplitudes(amps, dim_a: int, dim_b: int) -> np.ndarray:
    """Linear-entropy entanglement of each amplitude row of shape (n, dim_a*dim_b)."""
    g = _gram_batch(np.asarray(amps, dtype=np.complex128), dim_a, dim_b)
    purity = np.einsum("kij,kij->k", g, g.conj()).real
    return 1.0 - purity


def von_neumann_entanglement_amplitudes(amps, dim_a: int, dim_b: int) -> np.ndarray:
    """Von Neumann entanglement of each amplitude row, in nats."""
    g = _gram_batch(np.asarray(amps, dtype=np.complex128), dim_a, dim_b)
    vals = np.clip(np.linalg.eigvalsh(g), 0.0, 1.0)
    logs = np.log(np.where(vals > 0.0, vals, 1.0))
    return -(vals * logs).sum(axis=1)


def linear_entanglement_batch(coeffs, members, dim_a: int, dim_b: int) -> np.ndarray:
    """Linear entanglement of superpositions ``coeffs @ members``.

    ``coeffs`` has shape (n_samples, n_members) and ``members`` holds one
    amplitude row of length dim_a*dim_b per member.
    """
    amps = np.asarray(coeffs, dtype=np.complex128) @ np.asarray(
        members, dtype=np.complex128
    )
    return linear_entanglement_amplitudes(amps, dim_a, dim_b)


def von_neumann_entanglement_batch(coeffs, members, dim_a: int, dim_b: int) -> np.ndarray:
    amps = np.asarray(coeffs, dtype=np.complex128) @ np.asarray(
        members, dtype=np.complex128
    )
    return von_neumann_entanglement_amplitudes(amps, dim_a, dim_b)
