#!/usr/bin/env python3
"""Benchmark the compiled weight-count kernel against the numpy fallback.

Times two_zero_counts on representative towers and a full exhaustive search
with each implementation.  Usage: python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from twoweight._kernels import HAVE_NATIVE, numpy_impl
from twoweight.tower import build_field_tower

try:
    from twoweight._kernels import _native
except ImportError:
    _native = None

CASES = [
    ((2, 2, 2), 1, 2, 15),
    ((2, 3, 2), 1, 2, 63),
    ((7, 1, 3), 1, 2, 342),
    ((2, 3, 3), 1, 2, 511),
    ((3, 2, 3), 1, 2, 728),
    ((3, 2, 3), 2, 4, 364),
]


def time_kernel(mod, tower, a1, a2, n, reps):
    best = float("inf")
    out = None
    for _ in range(reps):
        t0 = time.perf_counter()
        out = mod.two_zero_counts(
            tower.n1, tower.delta, n, a1, a2, tower.trace_zero_exp, tower.log1p
        )
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    print(f"compiled kernel available: {HAVE_NATIVE}")
    print(f"{'tower':<12} {'pair':<10} {'n':>5} {'numpy':>12} {'native':>12} {'speedup':>8}")
    for pmk, a1, a2, n in CASES:
        tower = build_field_tower(*pmk)
        t_np, out_np = time_kernel(numpy_impl, tower, a1, a2, n, reps=9)
        row = f"q={tower.q},k={tower.k}"
        if _native is not None:
            t_nat, out_nat = time_kernel(_native, tower, a1, a2, n, reps=9)
            assert np.array_equal(out_np, out_nat), "implementations disagree"
            print(
                f"{row:<12} {f'({a1},{a2})':<10} {n:>5} {t_np * 1e3:>10.3f}ms"
                f" {t_nat * 1e3:>10.3f}ms {t_np / t_nat:>7.1f}x"
            )
        else:
            print(f"{row:<12} {f'({a1},{a2})':<10} {n:>5} {t_np * 1e3:>10.3f}ms {'-':>12} {'-':>8}")

    # end-to-end: the exhaustive pair search on the largest sweep tower
    from twoweight import checks, codes

    tower = build_field_tower(3, 2, 3)
    impls = [("numpy", numpy_impl.two_zero_counts)]
    if _native is not None:
        impls.append(("native", _native.two_zero_counts))
    saved = codes.two_zero_counts
    try:
        for label, fn in impls:
            codes.two_zero_counts = fn
            t0 = time.perf_counter()
            res = checks.search_second_type(tower)
            dt = time.perf_counter() - t0
            print(
                f"search q=9 k=3 [{label:>6}]: {dt:.2f}s"
                f"  ({len(res.reports)} pairs, A=B={res.a_equals_b})"
            )
    finally:
        codes.two_zero_counts = saved


if __name__ == "__main__":
    main()
