# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled tight-loop kernel for phase-sampled linear entanglement."""

import numpy as np


def linear_entanglement_batch(const double complex[:, ::1] coeffs,
                              const double complex[:, ::1] members,
                              Py_ssize_t dim_a, Py_ssize_t dim_b):
    """Linear entanglement of superpositions ``coeffs @ members``.

    Matches the pure-python backend; each sample is evaluated with straight
    loops and no intermediate allocations.
    """
    cdef Py_ssize_t n_samples = coeffs.shape[0]
    cdef Py_ssize_t n_members = coeffs.shape[1]
    cdef Py_ssize_t dim = members.shape[1]
    if members.shape[0] != n_members:
        raise ValueError("coefficient and member counts disagree")
    if dim != dim_a * dim_b:
        raise ValueError("member length does not match dim_a * dim_b")

    out_arr = np.empty(n_samples, dtype=np.float64)
    psi_arr = np.empty(dim, dtype=np.complex128)
    cdef double[::1] out = out_arr
    cdef double complex[::1] psi = psi_arr

    cdef Py_ssize_t k, m, i, j, r, s
    cdef double complex cf, z
    cdef double ar, ai, br, bi
    cdef double gre, gim, diag, purity

    for k in range(n_samples):
        for i in range(dim):
            psi[i] = 0
        for m in range(n_members):
            cf = coeffs[k, m]
            if cf.real == 0.0 and cf.imag == 0.0:
                continue
            for i in range(dim):
                psi[i] = psi[i] + cf * members[m, i]

        purity = 0.0
        if dim_a <= dim_b:
            for r in range(dim_a):
                diag = 0.0
                for j in range(dim_b):
                    z = psi[r * dim_b + j]
                    diag += z.real * z.real + z.imag * z.imag
                purity += diag * diag
                for s in range(r + 1, dim_a):
                    gre = 0.0
                    gim = 0.0
                    for j in range(dim_b):
                        z = psi[r * dim_b + j]
                        ar = z.real
                        ai = z.imag
                        z = psi[s * dim_b + j]
                        br = z.real
                        bi = z.imag
                        gre += ar * br + ai * bi
                        gim += ai * br - ar * bi
                    purity += 2.0 * (gre * gre + gim * gim)
        else:
            for r in range(dim_b):
                diag = 0.0
                for i in range(dim_a):
                    z = psi[i * dim_b + r]
                    diag += z.real * z.real + z.imag * z.imag
                purity += diag * diag
                for s in range(r + 1, dim_b):
                    gre = 0.0
                    gim = 0.0
                    for i in range(dim_a):
                        z = psi[i * dim_b + r]
                        ar = z.real
                        ai = z.imag
                        z = psi[i * dim_b + s]
                        br = z.real
                        bi = z.imag
                        gre += ar * br + ai * bi
                        gim += ai * br - ar * bi
                    purity += 2.0 * (gre * gre + gim * gim)
        out[k] = 1.0 - purity

    return out_arr
