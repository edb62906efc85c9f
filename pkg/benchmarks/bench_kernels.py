#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Times the three evaluation-heavy workloads (point evaluation, zero tables for
all three zero kinds, and a full spectrum build) on each backend and prints
the speedup.
"""

import argparse
import importlib
import time


def load_backends():
    backends = {}
    from specpack import _kernels_py

    backends["python"] = _kernels_py
    try:
        from specpack import _kernels

        backends["cython"] = _kernels
    except ImportError:
        print("compiled kernels not built; benchmarking the fallback only")
    return backends


def bench_point_eval(k):
    n = 0
    total = 0.0
    for m in range(0, 16):
        x = 0.3
        while x < 60.0:
            total += k.bessel_j_prime(m, x)
            total += k.bessel_j(m, x)
            x += 0.11
        n += 2
    return total


def bench_zero_tables(k):
    zeros = []
    for kind in (k.KIND_BESSEL_PRIME, k.KIND_BESSEL, k.KIND_SPHERICAL_PRIME):
        for order in range(0, 12):
            cursor = max(order * 0.5, 0.01)
            for _ in range(8):
                z, cursor = k.next_zero(kind, order, cursor, 0.05, 200.0)
                zeros.append(z)
    return zeros


def bench_spherical_sweep(k):
    zeros = []
    for order in range(0, 30):
        cursor = max(order * 0.5, 0.01)
        for _ in range(6):
            z, cursor = k.next_zero(k.KIND_SPHERICAL_PRIME, order, cursor, 0.05, 200.0)
            zeros.append(z)
    return zeros


WORKLOADS = [
    ("point evaluation (J, J') on a grid", bench_point_eval),
    ("zero tables, 3 kinds x 12 orders x 8 ranks", bench_zero_tables),
    ("spherical derivative zeros, 30 orders x 6 ranks", bench_spherical_sweep),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = load_backends()
    results = {}
    for name, module in backends.items():
        results[name] = []
        for label, fn in WORKLOADS:
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                fn(module)
                best = min(best, time.perf_counter() - t0)
            results[name].append(best)

    width = max(len(label) for label, _ in WORKLOADS)
    header = f"{'workload':<{width}}  " + "".join(f"{n:>12}" for n in results)
    if len(results) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for i, (label, _) in enumerate(WORKLOADS):
        line = f"{label:<{width}}  " + "".join(
            f"{results[n][i] * 1e3:>10.2f}ms" for n in results
        )
        if len(results) == 2:
            line += f"{results['python'][i] / results['cython'][i]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
