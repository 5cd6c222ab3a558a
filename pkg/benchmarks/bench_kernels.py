"""Compare the numba and numpy sweep kernels on full permutation tables.

Usage: python3 benchmarks/bench_kernels.py [--max-n N] [--repeat R]
"""

import argparse
import time

import numpy as np

from permshuffle.kernels import numba_available, perm_table, stat_sweep


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=9)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = ["numpy"]
    if numba_available():
        backends.insert(0, "numba")
        stat_sweep(perm_table(4), backend="numba")  # compile outside the timings
    else:
        print("numba unavailable; timing numpy only")

    print(f"{'n':>3} {'rows':>10}", *(f"{b:>12}" for b in backends))
    for n in range(6, args.max_n + 1):
        table = perm_table(n)
        row = [f"{n:>3} {table.shape[0]:>10}"]
        results = {}
        for backend in backends:
            elapsed = best_of(args.repeat, lambda: stat_sweep(table, backend=backend))
            results[backend] = stat_sweep(table, backend=backend)
            row.append(f"{elapsed * 1000:>10.2f}ms")
        print(*row)
        if len(backends) == 2:
            for name in results["numpy"]._fields:
                assert np.array_equal(
                    getattr(results["numba"], name), getattr(results["numpy"], name)
                ), f"backend mismatch in {name} at n={n}"


if __name__ == "__main__":
    main()
