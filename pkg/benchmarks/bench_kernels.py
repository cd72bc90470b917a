"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py --levels 13,23,31 --repeat 3
"""

import argparse
import time

from beauville import kernels, weyl


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench(n, name, repeat):
    table = weyl.action_table()
    mats = kernels.members(n, name=name)
    unit = kernels.unit_mask(n)
    k = kernels.backend(name)
    return {
        "enumerate": best_of(repeat, lambda: kernels.members(n, name=name)),
        "count": best_of(repeat, lambda: k.count_by_leading(n, unit)),
        "orbit_stats": best_of(repeat, lambda: kernels.orbit_stats(mats, n, table, name=name)),
        "fixed_counts": best_of(repeat, lambda: kernels.fixed_counts(mats, n, table, name=name)),
    }, mats.shape[0]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--levels", default="13,19,23,31", help="comma-separated levels")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--threads", type=int, default=None)
    args = ap.parse_args()
    if not kernels.HAVE_NUMBA:
        raise SystemExit("numba is not available (or BEAUVILLE_NO_NUMBA is set)")
    kernels.set_threads(args.threads)

    # first calls compile or load the cached machine code
    bench(7, "numba", 1)

    print(f"{'n':>4} {'rows':>9} {'kernel':<13} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for n in (int(x) for x in args.levels.split(",")):
        fast, rows = bench(n, "numba", args.repeat)
        slow, _ = bench(n, "numpy", args.repeat)
        for key in fast:
            ratio = slow[key] / fast[key] if fast[key] else float("inf")
            print(f"{n:>4} {rows:>9} {key:<13} {fast[key]:>10.4f} {slow[key]:>10.4f} {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
