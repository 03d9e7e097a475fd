#!/usr/bin/env python3
"""Benchmark the compiled modular kernels against the pure-Python fallback.

Times each kernel on a representative workload and prints the speedup.
Outputs are compared for equality before timing, so a divergent backend
fails loudly instead of producing a meaningless table.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import random
import time

from recseq import _kernels_py

try:
    from recseq import _kernels_cy
except ImportError:
    _kernels_cy = None

MOD = 10007


def workloads(rng):
    order = 8
    hs = [rng.randrange(MOD) for _ in range(order)]
    init = [rng.randrange(MOD) for _ in range(order)]
    xs = [rng.randrange(MOD) for _ in range(1200)]
    ys = [rng.randrange(MOD) for _ in range(1200)]
    n = 40
    entries = [rng.randrange(MOD) for _ in range(n * n)]
    return [
        ("lin_terms(order 8, 50k terms)", "lin_terms_mod", (hs, init, 50_000, MOD)),
        ("berkowitz(40 x 40)", "berkowitz_mod", (entries, n, MOD)),
        ("cauchy conv (1200 terms)", "conv_cauchy_mod", (xs, ys, MOD)),
        ("hurwitz conv (1200 terms)", "conv_hurwitz_mod", (xs, ys, MOD)),
        ("newton conv (first 220 terms)", "conv_newton_mod", (xs[:220], ys[:220], MOD)),
    ]


def best_time(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions per case")
    args = parser.parse_args()

    rng = random.Random(2024)
    cases = workloads(rng)

    print(f"{'workload':38} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for label, name, case_args in cases:
        py_fn = getattr(_kernels_py, name)
        py_time = best_time(py_fn, case_args, args.repeat)
        if _kernels_cy is None:
            print(f"{label:38} {py_time * 1e3:10.2f}ms {'missing':>12} {'-':>9}")
            continue
        cy_fn = getattr(_kernels_cy, name)
        if cy_fn(*case_args) != py_fn(*case_args):
            raise AssertionError(f"backend mismatch on {label}")
        cy_time = best_time(cy_fn, case_args, args.repeat)
        print(f"{label:38} {py_time * 1e3:10.2f}ms {cy_time * 1e3:10.2f}ms {py_time / cy_time:8.1f}x")

    if _kernels_cy is None:
        print("\ncompiled kernels not built; showing pure-Python times only")


if __name__ == "__main__":
    main()
