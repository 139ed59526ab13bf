#!/usr/bin/env python3
"""Benchmark the compiled GF(2) kernels against the pure-Python twins.

Covers the three hot paths behind every exact search: batched rank,
full cut-rank tables, and the bounded-height depth feasibility search.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from vmkit._kernels import pure

try:
    from vmkit._kernels import _fastcore
except ImportError:
    _fastcore = None


def timed(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_rank(backend, batches):
    def run():
        for rows, ncols in batches:
            backend.rank_masks(rows, ncols)
    return run


def bench_table(backend, graphs):
    def run():
        for adj, n in graphs:
            backend.cutrank_table(adj, n)
    return run


def bench_depth(backend, cases):
    def run():
        for rho, n, k in cases:
            backend.depth_levels(rho, n, k)
    return run


def random_adjacency(rng, n):
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rng = random.Random(1)
    rank_batches = [
        ([rng.randrange(1 << 16) for _ in range(16)], 16)
        for _ in range(20000)
    ]
    table_graphs = [(random_adjacency(rng, 12), 12) for _ in range(40)]
    depth_cases = []
    for _ in range(12):
        n = 8
        adj = random_adjacency(rng, n)
        rho = pure.cutrank_table(adj, n)
        depth_cases.append((rho, n, 3))

    jobs = [
        ("rank_masks (20k batched 16x16)", bench_rank, rank_batches),
        ("cutrank_table (40 graphs, n=12)", bench_table, table_graphs),
        ("depth_levels (12 graphs, n=8, k=3)", bench_depth, depth_cases),
    ]

    print(f"{'kernel':38s} {'pure':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, factory, payload in jobs:
        t_pure = timed(factory(pure, payload), args.repeat)
        if _fastcore is None:
            print(f"{name:38s} {t_pure * 1e3:9.1f}ms {'n/a':>10s} {'-':>8s}")
            continue
        t_fast = timed(factory(_fastcore, payload), args.repeat)
        print(
            f"{name:38s} {t_pure * 1e3:9.1f}ms {t_fast * 1e3:9.1f}ms "
            f"{t_pure / t_fast:7.1f}x"
        )


if __name__ == "__main__":
    main()
