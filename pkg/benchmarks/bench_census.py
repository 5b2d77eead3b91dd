"""Time the compiled and pure-Python plane-partition scans.

    python benchmarks/bench_census.py --max-volume 16 --repeat 3
"""

import argparse
import time

from bkpplane import kernels


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-volume", type=int, default=16)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--all", action="store_true",
                    help="scan every plane partition, not only diagonally strict ones")
    args = ap.parse_args()

    strict_only = not args.all
    timings = {}
    results = {}
    for name in sorted(kernels.BACKENDS):
        timings[name], results[name] = best_of(
            lambda: kernels.scan(args.max_volume, strict_only, name, args.threads), args.repeat)
        print(f"{name:>8}: {timings[name] * 1000:10.2f} ms")
    if len(set(map(repr, results.values()))) != 1:
        raise SystemExit("backends disagree")
    if "cython" in timings:
        print(f"speedup: {timings['python'] / timings['cython']:.1f}x")
    else:
        print("compiled backend not built; only the Python scan was timed")


if __name__ == "__main__":
    main()
