"""Time the compiled and pure-Python kernels side by side.

    python3 benchmarks/bench_kernels.py [--bound 5000] [--trees 13] [--repeat 3]

Prints one row per (kernel, backend) with the best wall time over the repeats
and the speed-up of the compiled backend.  Both backends must return identical
results; the script exits non-zero if they do not.
"""

import argparse
import sys
import time

from metrigraph import kernels
from metrigraph.freetrees import free_tree_level_sequences


def best_time(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=5000)
    ap.add_argument("--trees", type=int, default=13, help="vertex count for the Wiener spectrum kernel")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = {"python": kernels.backend_module("python")}
    try:
        backends["compiled"] = kernels.backend_module("compiled")
    except ImportError:
        print("compiled extension not built; timing the Python backend only")

    levels = list(free_tree_level_sequences(args.trees))
    jobs = {
        f"F to {args.bound}": lambda m: m.poly_attained(kernels.POLY_F, args.bound, 0, args.bound, 10**13)[:2],
        f"G to {args.bound}": lambda m: m.poly_attained(kernels.POLY_G, args.bound, 0, args.bound, 10**13)[:2],
        f"W of {len(levels)} trees (n={args.trees})": lambda m: [m.wiener_from_levels(x) for x in levels],
    }
    print(f"{'kernel':32} {'backend':9} {'seconds':>9} {'speed-up':>9}")
    ok = True
    for name, job in jobs.items():
        times, results = {}, {}
        for label, mod in backends.items():
            times[label], results[label] = best_time(lambda: job(mod), args.repeat)
        for label in backends:
            ratio = times["python"] / times[label] if times[label] else float("inf")
            print(f"{name:32} {label:9} {times[label]:9.3f} {ratio:8.1f}x")
        if len(results) == 2:
            a, b = results["python"], results["compiled"]
            same = a == b if isinstance(a, list) else (bytes(a[0]) == bytes(b[0]) and a[1] == b[1])
            ok &= same
            if not same:
                print(f"  MISMATCH between backends on {name}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
