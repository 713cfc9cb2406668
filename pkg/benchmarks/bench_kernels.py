#!/usr/bin/env python3
"""Benchmark the numba kernels against their pure-numpy fallbacks.

Covers both hot paths: canonical-form permutation scans (the catalogue
workload) and the subset DP behind exact treewidth/pathwidth. Verifies that
the backends agree bit-for-bit before timing them.

Usage: python benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from prodstruct._kernels import (
    min_adjacency_bits,
    pathwidth_dp_table,
    treewidth_dp_table,
)
from prodstruct.catalogue import _perms_for_profile
from prodstruct.generators import random_graph


def _adj_matrix(g):
    a = np.zeros((g.n, g.n), np.uint8)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return a


def _masks(g):
    m = np.zeros(g.n, np.int64)
    for u, v in g.edges:
        m[u] |= 1 << v
        m[v] |= 1 << u
    return m


def timeit(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_canonical(repeats: int) -> list[tuple[str, float, float]]:
    rng = random.Random(1)
    rows = []
    # worst case: one refinement class, full 8! permutation scan
    batch = [random_graph(8, 0.5, rng) for _ in range(20)]
    perms = _perms_for_profile((8,))
    mats = [_adj_matrix(g) for g in batch]
    for a in mats:
        assert min_adjacency_bits(a, perms, backend="numba") == min_adjacency_bits(
            a, perms, backend="numpy"
        )
    t_nb = timeit(lambda: [min_adjacency_bits(a, perms, backend="numba") for a in mats], repeats)
    t_np = timeit(lambda: [min_adjacency_bits(a, perms, backend="numpy") for a in mats], repeats)
    rows.append(("canonical 8! x 20 graphs", t_nb, t_np))
    # typical case: small refinement classes
    small = _perms_for_profile((1, 2, 2, 3))
    t_nb = timeit(lambda: [min_adjacency_bits(a, small, backend="numba") for a in mats], repeats)
    t_np = timeit(lambda: [min_adjacency_bits(a, small, backend="numpy") for a in mats], repeats)
    rows.append(("canonical refined x 20 graphs", t_nb, t_np))
    return rows


def bench_width_dp(repeats: int) -> list[tuple[str, float, float]]:
    rng = random.Random(2)
    rows = []
    for n in (12, 13, 14):
        g = random_graph(n, 0.35, rng)
        masks = _masks(g)
        assert np.array_equal(
            treewidth_dp_table(masks, n, backend="numba"),
            treewidth_dp_table(masks, n, backend="numpy"),
        )
        t_nb = timeit(lambda: treewidth_dp_table(masks, n, backend="numba"), repeats)
        t_np = timeit(lambda: treewidth_dp_table(masks, n, backend="numpy"), repeats)
        rows.append((f"treewidth DP n={n}", t_nb, t_np))
        t_nb = timeit(lambda: pathwidth_dp_table(masks, n, backend="numba"), repeats)
        t_np = timeit(lambda: pathwidth_dp_table(masks, n, backend="numpy"), repeats)
        rows.append((f"pathwidth DP n={n}", t_nb, t_np))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    # warm up the JIT so compilation is not timed
    g = random_graph(6, 0.5, random.Random(0))
    min_adjacency_bits(_adj_matrix(g), _perms_for_profile((6,)), backend="numba")
    treewidth_dp_table(_masks(g), g.n, backend="numba")
    pathwidth_dp_table(_masks(g), g.n, backend="numba")

    rows = bench_canonical(args.repeats) + bench_width_dp(args.repeats)
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'numba':>10}  {'numpy':>10}  {'speedup':>8}")
    for name, t_nb, t_np in rows:
        print(f"{name:<{width}}  {t_nb * 1e3:>8.2f}ms  {t_np * 1e3:>8.2f}ms  {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
