"""Benchmark the triplet-scan kernels: compiled extension vs pure Python.

Runs the same prime-range scan through both backends and reports wall
time and speedup. The scan is the hot path of the package; everything
else is O(p) bookkeeping around it.

Usage: python benchmarks/bench_scan.py [--p-max 20000] [--k 2] [--repeat 3]
"""

import argparse
import time

from pkarith import _kernel_py
from pkarith.primes import odd_primes_in

try:
    from pkarith import _kernel
except ImportError:
    _kernel = None


def run_scan(backend, primes, k) -> tuple[float, int, int]:
    """One full scan; returns (seconds, total proper, total degenerate)."""
    proper = degenerate = 0
    start = time.perf_counter()
    for p in primes:
        fixed, triplets = backend.scan_core_triplets(p, k)
        proper += len(triplets)
        degenerate += len(fixed)
    return time.perf_counter() - start, proper, degenerate


def best_of(backend, primes, k, repeat) -> tuple[float, int, int]:
    runs = [run_scan(backend, primes, k) for _ in range(repeat)]
    return min(runs, key=lambda r: r[0])


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--p-min", type=int, default=3)
    parser.add_argument("--p-max", type=int, default=20_000)
    parser.add_argument("--k", type=int, default=2)
    parser.add_argument("--repeat", type=int, default=3, help="best-of runs")
    args = parser.parse_args()

    primes = list(odd_primes_in(args.p_min, args.p_max))
    print(
        f"scan: {len(primes)} primes in [{args.p_min}, {args.p_max}], "
        f"k = {args.k}, best of {args.repeat}"
    )

    pure_time, proper, degenerate = best_of(_kernel_py, primes, args.k, args.repeat)
    print(f"pure python: {pure_time:8.3f} s  "
          f"({proper} proper, {degenerate} degenerate)")

    if _kernel is None:
        print("compiled:    not built (install with the extension to compare)")
        return

    comp_time, c_proper, c_degenerate = best_of(_kernel, primes, args.k, args.repeat)
    print(f"compiled:    {comp_time:8.3f} s  "
          f"({c_proper} proper, {c_degenerate} degenerate)")

    if (proper, degenerate) != (c_proper, c_degenerate):
        raise SystemExit("backend mismatch: counts differ, do not trust timings")
    print(f"speedup:     {pure_time / comp_time:8.1f}x")


if __name__ == "__main__":
    main()
