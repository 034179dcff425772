"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--n N] [--repeats R]

Times the three hot scans on G(n, p) instances at the two interesting
operating points (sparse, where bad sets abound, and dense, where the star
certificate is verified in full). The compiled backend must be built for the
comparison column to appear.
"""

import argparse
import time

import numpy as np

from rainbowindex import GNP, GenSpec, gen_gnp, random_coloring
from rainbowindex import threshold_p
from rainbowindex._kernels import have_compiled, pure

if have_compiled():
    from rainbowindex._kernels import _speedups as compiled
else:
    compiled = None


def clock(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench(name, pure_fn, compiled_fn, repeats):
    t_pure, r_pure = clock(pure_fn, repeats)
    if compiled_fn is None:
        print(f"{name:34s} pure {t_pure * 1e3:10.1f} ms   (no compiled backend)")
        return
    t_comp, r_comp = clock(compiled_fn, repeats)
    assert r_pure == r_comp, f"{name}: backends disagree"
    print(f"{name:34s} pure {t_pure * 1e3:10.1f} ms   compiled "
          f"{t_comp * 1e3:8.2f} ms   speedup {t_pure / t_comp:8.1f}x")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    n = args.n
    p_star = min(1.0, 2.0 * threshold_p(n, 3))
    dense = gen_gnp(GenSpec(GNP, n, p=p_star, seed=0))
    coloring = random_coloring(dense, 3, seed=0)
    rows, packed = dense.rows(), dense.packed()
    lists, mat = coloring.dense_lists(), coloring.dense()
    sets = np.sort(
        np.random.default_rng(0).choice(n, size=(10 ** 5, 3), replace=True),
        axis=1,
    )
    sets = np.ascontiguousarray(
        sets[(sets[:, 0] != sets[:, 1]) & (sets[:, 1] != sets[:, 2])][:50000],
        dtype=np.int64,
    )
    set_tuples = [tuple(int(v) for v in s) for s in sets]

    print(f"G({n}, {p_star:.4f}): m={dense.m}, "
          f"triples={n * (n - 1) * (n - 2) // 6}")
    bench(
        "bad-set scan (full, no witness)",
        lambda: pure.first_bad_set(rows, n, 3),
        (lambda: compiled.first_bad_set(packed, n, 3)) if compiled else None,
        args.repeats,
    )
    bench(
        "star certificate (full verify)",
        lambda: pure.star_cert_ok(rows, lists, n, 3, 1),
        (lambda: bool(compiled.star_cert_ok(packed, mat, n, 3, 1)))
        if compiled else None,
        args.repeats,
    )
    bench(
        f"common stats ({len(sets)} sampled sets)",
        lambda: pure.common_stats_sets(rows, set_tuples),
        (lambda: compiled.common_stats_sets(packed, sets)) if compiled else None,
        args.repeats,
    )


if __name__ == "__main__":
    main()
