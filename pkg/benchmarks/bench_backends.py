"""Benchmark the numba kernels against the pure-numpy fallback.

Times the three hot kernels on the real sweep workload (16-operator lifted
Kraus conjugations of the 16x16 purification, Hermitian eigensolve, entropy)
plus the composed spectrum evaluation, and reports the speedup and the worst
cross-backend deviation.

Run:  python benchmarks/bench_backends.py [--points 200] [--repeats 5]
"""

import argparse
import time

import numpy as np

from paulimem import backend, kernels
from paulimem.channels import build_memory_kraus, canonical_purification, lift_to_purification


def build_workload(points, seed=20240811):
    rng = np.random.default_rng(seed)
    stacks = []
    for _ in range(points):
        p = rng.uniform(0.0, 1.0)
        mu = rng.uniform(0.0, 1.0)
        stacks.append(lift_to_purification(build_memory_kraus("depolarizing", p, mu)))
    return stacks, canonical_purification()


def spectrum_point(stack, phi, apply_fn, eig_fn, entropy_fn):
    out = apply_fn(stack, phi)
    out = (out + out.conj().T) / 2
    vals = eig_fn(out)
    return entropy_fn(vals)


def time_backend(label, stacks, phi, apply_fn, eig_fn, entropy_fn, repeats):
    # warmup (JIT compile / cache load)
    spectrum_point(stacks[0], phi, apply_fn, eig_fn, entropy_fn)
    best = float("inf")
    entropies = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        entropies = [
            spectrum_point(s, phi, apply_fn, eig_fn, entropy_fn) for s in stacks
        ]
        best = min(best, time.perf_counter() - t0)
    per_point = best / len(stacks) * 1e6
    print(f"{label:>8}: {best:8.4f} s best of {repeats} "
          f"({per_point:7.1f} us/point, {len(stacks)} points)")
    return best, np.array(entropies)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=200)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    stacks, phi = build_workload(args.points)
    phi = phi.astype(np.complex128)
    stacks = [s.astype(np.complex128) for s in stacks]

    print(f"active backend for the package: {backend.active_backend()}")
    t_np, e_np = time_backend(
        "numpy", stacks, phi,
        kernels._apply_kraus_sum_np,
        kernels._eigvalsh_descending_np,
        kernels._entropy_bits_np,
        args.repeats,
    )
    if not backend.HAS_NUMBA:
        print("numba not installed; nothing to compare")
        return
    t_nb, e_nb = time_backend(
        "numba", stacks, phi,
        kernels._apply_kraus_sum_nb,
        lambda m: kernels._jacobi_eigvalsh_nb(m, kernels.JACOBI_TOL),
        kernels._entropy_bits_nb,
        args.repeats,
    )
    print(f"speedup numba vs numpy: {t_np / t_nb:.2f}x")
    print(f"max |entropy difference| across backends: {np.abs(e_np - e_nb).max():.3e}")


if __name__ == "__main__":
    main()
