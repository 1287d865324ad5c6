"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from latticeiso import _kernels
from latticeiso.lattice import neighbor_vectors

PATH_CASES = [
    # (r, length, target)
    (1, 12, (2, 0)),
    (2, 9, (0, 2)),
    (5, 6, (3, 1)),
    (25, 4, (8, 6)),
]
WALK_CASES = [(1, 40), (5, 20), (25, 12), (65, 8)]


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [("python", _kernels.pure)]
    if _kernels.compiled is not None:
        backends.append(("cython", _kernels.compiled))
    else:
        print("compiled kernels not built; timing the fallback only")

    print(f"{'kernel':<34}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for r, length, (tx, ty) in PATH_CASES:
        steps = neighbor_vectors(r).vectors
        times, results = [], []
        for _, mod in backends:
            t, res = best_of(lambda: mod.count_paths(steps, tx, ty, length, r, 10**9), args.repeat)
            times.append(t)
            results.append(res)
        assert all(res == results[0] for res in results)
        label = f"paths r={r} l={length} -> ({tx},{ty}) [{results[0][0]}]"
        _row(label, times)
    for r, length in WALK_CASES:
        steps = neighbor_vectors(r).vectors
        times, grids = [], []
        for _, mod in backends:
            t, (grid, _) = best_of(lambda: mod.walk_counts(steps, length), args.repeat)
            times.append(t)
            grids.append(grid)
        assert all((g == grids[0]).all() for g in grids)
        _row(f"walks r={r} l={length}", times)


def _row(label, times):
    cells = "".join(f"{t * 1e3:>10.2f}ms" for t in times)
    speed = f"{times[0] / times[-1]:>9.1f}x" if len(times) > 1 else ""
    print(f"{label:<34}{cells}{speed}")


if __name__ == "__main__":
    main()
