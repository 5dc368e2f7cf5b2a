"""Compare the jit-compiled kernels against the pure-numpy/python path.

Run:  python3 benchmarks/bench_accel.py [--orders 4 5] [--samples 20000]

Reports wall time for associativity checking over random tables and for
the backtracking table sampler, on both paths. Set GREENHEIGHT_NO_NUMBA=1
to confirm the package itself falls back cleanly (this script always
benchmarks both paths explicitly when the jit path is importable).
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from greenheight import _accel


def bench_assoc(order: int, count: int, seed: int):
    rng = np.random.default_rng(seed)
    tables = rng.integers(0, order, size=(count, order, order), dtype=np.int32)

    def run(kernels):
        hits = 0
        t0 = time.perf_counter()
        for tab in tables:
            if kernels.assoc_witness_loop(tab)[0] < 0:
                hits += 1
        return time.perf_counter() - t0, hits

    def run_numpy():
        hits = 0
        t0 = time.perf_counter()
        for tab in tables:
            if _accel.assoc_witness_numpy(tab) is None:
                hits += 1
        return time.perf_counter() - t0, hits

    results = {"numpy": run_numpy(), "python": run(_accel.python_kernels)}
    if _accel.numba_kernels is not None:
        _accel.numba_kernels.assoc_witness_loop(tables[0])  # compile outside timing
        results["numba"] = run(_accel.numba_kernels)
    return results


def bench_sampler(order: int, count: int, seed: int):
    results = {}
    t0 = time.perf_counter()
    py = _accel.sample_assoc_tables_python(order, count, seed=seed)
    results["python"] = (time.perf_counter() - t0, len(py))
    if _accel.numba_kernels is not None:
        _accel.sample_assoc_tables_numba(order, 1, seed=seed)  # compile
        t0 = time.perf_counter()
        jit = _accel.sample_assoc_tables_numba(order, count, seed=seed)
        results["numba"] = (time.perf_counter() - t0, len(jit))
        if not all(np.array_equal(a, b) for a, b in zip(py, jit)):
            raise AssertionError("paths disagree on sampled tables")
    return results


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--assoc-count", type=int, default=2000)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"numba available: {_accel.numba_kernels is not None}")
    for order in args.orders:
        print(f"\norder {order}, associativity witness x{args.assoc_count}:")
        for name, (dt, hits) in bench_assoc(order, args.assoc_count, args.seed).items():
            print(f"  {name:7s} {dt * 1000:9.1f} ms  ({hits} associative)")
        print(f"order {order}, sampler x{args.samples}:")
        for name, (dt, n) in bench_sampler(order, args.samples, args.seed).items():
            print(f"  {name:7s} {dt * 1000:9.1f} ms  ({n} tables)")


if __name__ == "__main__":
    main()
