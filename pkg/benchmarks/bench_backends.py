#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the three hot paths on both backends: per-call conflict counting
(the hill-climb objective), exhaustive tournament counting, and the
orientation sweep of the 7-vertex counterexample graph. Run after an
editable install:

    python benchmarks/bench_backends.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from linkirr import _backend_py
from linkirr.constructions import counterexample_graph
from linkirr.search import _random_tournament_adj

try:
    from linkirr import _backend_nb
except ImportError:
    _backend_nb = None

BACKENDS = {"numpy": _backend_py}
if _backend_nb is not None:
    BACKENDS["numba"] = _backend_nb


def time_call(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_conflict_count(impl, repeat):
    rng = np.random.Generator(np.random.PCG64(1))
    mats = [_random_tournament_adj(n, rng) for n in (10, 20, 40) for _ in range(20)]
    return time_call(lambda: [impl.conflict_count(m, True) for m in mats], repeat)


def bench_tournament_census(impl, repeat):
    return time_call(
        lambda: impl.count_link_irregular_range(6, impl.UNIVERSE_TOURNAMENTS, 0, 1 << 15),
        repeat)


def bench_orientation_scan(impl, repeat):
    g, _ = counterexample_graph()
    eu = np.array([u for u, _ in g.edges], dtype=np.int64)
    ev = np.array([v for _, v in g.edges], dtype=np.int64)
    return time_call(lambda: impl.scan_orientations(7, eu, ev, 0, 1 << 11, False), repeat)


BENCHES = [
    ("conflict_count (60 tournaments, n=10..40)", bench_conflict_count),
    ("tournament census n=6 (32768 objects)", bench_tournament_census),
    ("orientation scan (2048 orientations)", bench_orientation_scan),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5,
                        help="repetitions per measurement (best is kept)")
    args = parser.parse_args()

    if _backend_nb is None:
        print("numba backend unavailable; benchmarking numpy only")
    else:
        # trigger jit compilation outside the timed region
        bench_conflict_count(_backend_nb, 1)
        bench_tournament_census(_backend_nb, 1)
        bench_orientation_scan(_backend_nb, 1)

    width = max(len(name) for name, _ in BENCHES)
    header = f"{'benchmark':<{width}}  " + "  ".join(f"{b:>10}" for b in BACKENDS)
    print(header)
    print("-" * len(header))
    for name, bench in BENCHES:
        times = {b: bench(impl, args.repeat) for b, impl in BACKENDS.items()}
        row = f"{name:<{width}}  " + "  ".join(f"{times[b]:>9.4f}s" for b in BACKENDS)
        if "numba" in times and times["numba"] > 0:
            row += f"   ({times['numpy'] / times['numba']:.1f}x)"
        print(row)


if __name__ == "__main__":
    main()
