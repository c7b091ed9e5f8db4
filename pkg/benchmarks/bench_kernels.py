"""Time the numba kernels against the pure numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

The numpy side is selected per call through ``backend="numpy"``, so one
process times both. Set KNOTMOSAIC_DISABLE_NUMBA=1 to check that the
fallback alone still runs.
"""

import argparse
import time

import numpy as np

from knotmosaic._accel import HAVE_NUMBA
from knotmosaic.convert import grid_to_mosaic, mosaic_to_pd
from knotmosaic.counting import PRIMES
from knotmosaic.grid import torus_grid
from knotmosaic.kernels import count_mod, state_histogram


def best_of(fn, repeat):
    fn()  # warm-up, includes JIT compilation
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    p = PRIMES[0]
    for n in (6, 8, 10):
        yield f"count_mod n={n}", lambda b, n=n: count_mod(n, p, backend=b)
    for pq in ((3, 4), (3, 5), (4, 5)):
        pd = mosaic_to_pd(grid_to_mosaic(torus_grid(*pq)))
        table = pd.smoothing_table()
        label = f"state_histogram T{pq} c={table.shape[0]}"
        yield label, lambda b, t=table, a=pd.n_arcs: state_histogram(t, a, backend=b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    print(f"{'kernel':<36}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if HAVE_NUMBA else ""))
    for label, fn in cases():
        if HAVE_NUMBA:
            # both backends must agree before timing means anything
            assert np.array_equal(np.asarray(fn("numpy")), np.asarray(fn("numba"))), label
        t = [best_of(lambda b=b: fn(b), args.repeat) for b in backends]
        row = f"{label:<36}" + "".join(f"{x * 1e3:>10.1f}ms" for x in t)
        if HAVE_NUMBA:
            row += f"{t[0] / t[1]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
