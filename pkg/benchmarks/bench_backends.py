"""Benchmark the compiled and pure-python linear-entanglement kernels.

Workloads mirror the hot paths: Monte Carlo phase sampling over small
bipartite spaces and dense time-evolution grids. Run with

    python benchmarks/bench_backends.py [--samples N]
"""

import argparse
import time

import numpy as np

from entx._kernels import available_backends

WORKLOADS = [
    # (label, dim_a, dim_b, members)
    ("two-spin ensemble", 2, 2, 4),
    ("4x4 ensemble, 8 members", 4, 4, 8),
    ("JC cutoff 5", 6, 2, 11),
    ("JC cutoff 20", 21, 2, 41),
]


def random_inputs(rng, dim_a, dim_b, members, samples):
    dim = dim_a * dim_b
    mat = rng.normal(size=(dim, members)) + 1j * rng.normal(size=(dim, members))
    basis, _ = np.linalg.qr(mat)
    weights = rng.random(members)
    weights /= weights.sum()
    coeffs = np.sqrt(weights) * np.exp(
        2j * np.pi * rng.random((samples, members))
    )
    return np.ascontiguousarray(coeffs), np.ascontiguousarray(basis.T)


def time_kernel(kernel, coeffs, members, dim_a, dim_b, repeats=3):
    best = np.inf
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = kernel(coeffs, members, dim_a, dim_b)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=100_000)
    args = parser.parse_args()

    backends = available_backends()
    rng = np.random.default_rng(0)
    names = list(backends)
    print(f"samples per workload: {args.samples}")
    print(f"backends: {', '.join(names)}")
    header = f"{'workload':<28}" + "".join(f"{n:>14}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}{'max diff':>12}"
    print(header)
    print("-" * len(header))
    for label, dim_a, dim_b, members in WORKLOADS:
        coeffs, basis = random_inputs(rng, dim_a, dim_b, members, args.samples)
        timings = {}
        results = {}
        for name in names:
            timings[name], results[name] = time_kernel(
                backends[name], coeffs, basis, dim_a, dim_b
            )
        row = f"{label:<28}" + "".join(
            f"{timings[n] * 1e3:>11.1f} ms" for n in names
        )
        if len(names) == 2:
            ratio = timings["python"] / timings["compiled"]
            diff = float(np.abs(results[names[0]] - results[names[1]]).max())
            row += f"{ratio:>9.2f}x{diff:>12.2e}"
        print(row)


if __name__ == "__main__":
    main()
