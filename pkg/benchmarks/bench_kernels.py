#!/usr/bin/env python3
"""Benchmark the compiled distance kernels against the pure-Python fallback.

Times the pairwise-distance census and the threshold-graph construction on
random codes of growing vertex count, which is where the package spends its
time at oracle scale.

Usage: python benchmarks/bench_kernels.py [--sizes 256,1024,4096] [--repeats 3]
"""

import argparse
import random
import time

from tgv import _pykernels

try:
    from tgv import _speedups
except ImportError:
    _speedups = None


def random_blob(rng: random.Random, n_words: int, length: int, q: int = 4) -> bytes:
    # Duplicates are fine for timing; the kernels make no distinctness assumption.
    return bytes(rng.randrange(q) for _ in range(n_words * length))


def time_call(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="256,1024,4096")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--length", type=int, default=10)
    args = parser.parse_args()
    sizes = [int(tok) for tok in args.sizes.split(",")]

    if _speedups is None:
        print("compiled extension not built; timing pure kernels only")

    rng = random.Random(1)
    header = f"{'kernel':<16} {'n':>6} {'pure (s)':>10}"
    if _speedups is not None:
        header += f" {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    for n in sizes:
        length = args.length
        blob = random_blob(rng, n, length)
        for name, call_args in (
            ("distance_census", (blob, n, length)),
            ("adjacency(d=4)", (blob, n, length, 4)),
        ):
            fn_name = name.split("(")[0]
            pure_fn = getattr(_pykernels, fn_name)
            pure_time = time_call(lambda: pure_fn(*call_args), args.repeats)
            line = f"{name:<16} {n:>6} {pure_time:>10.4f}"
            if _speedups is not None:
                fast_fn = getattr(_speedups, fn_name)
                fast_time = time_call(lambda: fast_fn(*call_args), args.repeats)
                line += f" {fast_time:>13.4f} {pure_time / fast_time:>7.1f}x"
            print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
