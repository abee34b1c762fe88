"""Shared construction helpers for the test suite."""

import numpy as np

from entx import MicrocanonicalEnsemble, PureState


def random_pure_state(rng, dim_a, dim_b, real=False):
    n = dim_a * dim_b
    amp = rng.normal(size=n)
    if not real:
        amp = amp + 1j * rng.normal(size=n)
    amp = amp / np.linalg.norm(amp)
    return PureState(dim_a, dim_b, amp)


def random_orthonormal_rows(rng, dim, count):
    """Rows of a Haar-ish random isometry: count orthonormal vectors in C^dim."""
    mat = rng.normal(size=(dim, count)) + 1j * rng.normal(size=(dim, count))
    q, _ = np.linalg.qr(mat)
    return q.T.copy()


def random_weights(rng, count):
    w = rng.random(count)
    return w / w.sum()


def random_ensemble(rng, dim_a, dim_b, count):
    rows = random_orthonormal_rows(rng, dim_a * dim_b, count)
    members = tuple(PureState(dim_a, dim_b, row) for row in rows)
    return MicrocanonicalEnsemble(random_weights(rng, count), members)


def bell_ensemble(weights):
    from entx import two_spin

    _, model = two_spin([1.0, 2.0, 3.0, 4.0])
    return MicrocanonicalEnsemble(np.asarray(weights, dtype=float), model.basis)
