"""Benchmark the numba kernels against their numpy fallbacks.

Run: python benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from semidil import _accel
from semidil.core import from_generators
from semidil.dilatation import dilate
from semidil.presentation import search_bound


def _time(fn, args, repeat):
    fn(*args)  # warm-up / compile
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    S = from_generators([7, 11])
    T = dilate(S, 60)
    m = T.table(T.frobenius + T.multiplicity + 1)
    rng = np.random.default_rng(0)
    a = rng.random(400) < 0.5
    b = rng.random(400) < 0.5
    big = np.concatenate([rng.random(400) < 0.8, np.ones(400, dtype=bool)])
    offs = np.flatnonzero(rng.random(400) < 0.1).astype(np.int64)
    small = from_generators([5, 7, 9])
    return {
        "sieve": (np.array([13, 17, 23], dtype=np.int64), 2000),
        "sumset": (a, b, 400),
        "quotient": (big, offs, 400),
        "decomposable": (m, T.multiplicity),
        "arf": (small.membership, 2 * small.frobenius + 2),
        "betti": (dilate(from_generators([3, 5]), 10).membership,
                  np.array(dilate(from_generators([3, 5]), 10).minimal_generators, dtype=np.int64),
                  search_bound(dilate(from_generators([3, 5]), 10))),
    }


def run_benchmark(repeat: int = 5) -> list[tuple[str, float, float]]:
    if not _accel.HAS_NUMBA:
        print("numba not available; nothing to compare")
        return []
    rows = []
    for name, args in cases().items():
        fast = getattr(_accel, f"{name}_numba")
        slow = getattr(_accel, f"{name}_numpy")
        out_fast, out_slow = fast(*args), slow(*args)
        assert np.array_equal(np.asarray(out_fast), np.asarray(out_slow)), name
        rows.append((name, _time(fast, args, repeat), _time(slow, args, repeat)))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{'kernel':14s} {'numba ms':>10s} {'numpy ms':>10s} {'ratio':>7s}")
    for name, tn, tp in run_benchmark(args.repeat):
        print(f"{name:14s} {tn * 1e3:10.3f} {tp * 1e3:10.3f} {tp / tn:7.1f}x")


if __name__ == "__main__":
    main()
