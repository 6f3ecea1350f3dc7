#!/usr/bin/env python3
"""Benchmark the identity-residual kernels: compiled extension vs pure Python.

Times residual_profile (the full per-triangle evaluation the verifier runs)
over a fixed population of random valid triangles, taking the best of several
repeats per backend, and checks along the way that both backends agree bit
for bit.

    python3 benchmarks/bench_kernels.py [--count 200000] [--repeat 5]
"""

import argparse
import math
import random
import time

from trisolve import _kernels_py

try:
    from trisolve import _kernels
except ImportError:
    _kernels = None


def sample_parts(count, seed=20260811):
    rng = random.Random(seed)
    population = []
    for _ in range(count):
        u, v = sorted((rng.random(), rng.random()))
        room = 180.0 - 1.5
        a1 = 0.5 + room * u
        a2 = 0.5 + room * (v - u)
        a3 = 180.0 - a1 - a2
        c = 10.0 ** rng.uniform(-3, 3)
        ratio = c / math.sin(math.radians(a3))
        population.append(
            (
                math.radians(a1),
                math.radians(a2),
                math.radians(a3),
                ratio * math.sin(math.radians(a1)),
                ratio * math.sin(math.radians(a2)),
                c,
            )
        )
    return population


def bench(module, population, repeat):
    profile = module.residual_profile
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        for parts in population:
            profile(*parts)
        best = min(best, time.perf_counter() - started)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=200_000,
                        help="triangles per timed pass")
    parser.add_argument("--repeat", type=int, default=5,
                        help="timed passes per backend (best is reported)")
    args = parser.parse_args()

    population = sample_parts(args.count)

    backends = [("python", _kernels_py)]
    if _kernels is not None:
        for parts in population[:2000]:
            assert _kernels.residual_profile(*parts) == _kernels_py.residual_profile(*parts)
        backends.append(("compiled", _kernels))
    else:
        print("compiled extension not built; timing pure Python only")

    results = {}
    for name, module in backends:
        seconds = bench(module, population, args.repeat)
        results[name] = seconds
        print(
            f"{name:>9}: {seconds:8.3f} s for {args.count} profiles "
            f"({seconds / args.count * 1e9:8.1f} ns/call)"
        )
    if len(results) == 2:
        print(f"  speedup: {results['python'] / results['compiled']:.1f}x")


if __name__ == "__main__":
    main()
