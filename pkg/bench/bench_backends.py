#!/usr/bin/env python3
"""Benchmark the numba kernel backend against the pure-numpy fallback.

Runs the same workloads through both backends in one process (the cached
backend module is swapped between timing sections) and prints a table of
median wall times plus the speedup. The numba JIT warmup is timed
separately and excluded from the kernel timings.

Usage: python3 bench/bench_backends.py [--repeats N]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

import whittaker_mono.backends as backends
from whittaker_mono.backends import numpy_backend
from whittaker_mono.core import SectorPoint, TolerancePolicy
from whittaker_mono.erdelyi import ModulusProductParams, erdelyi_rhs_modulus
from whittaker_mono.hyp2f1 import (
    Hyp2F1Params,
    find_largest_negative_zero,
    hyp2f1_eval_many,
)

TOL = TolerancePolicy()


def _use(module):
    backends._BACKEND = module


def _median_time(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return float(np.median(times))


def _workloads():
    bessel = Hyp2F1Params.from_bessel(2.0)
    general = Hyp2F1Params.from_whittaker(0.3 + 0.4j, 0.25)
    nodes = {n: -np.geomspace(1e-3, 1e3, n) for n in (100, 1000, 10000)}
    mod = ModulusProductParams(0.3, 0.7, SectorPoint(1.0 + 1.0j), 1.5)

    loads = []
    for n, z in nodes.items():
        loads.append((f"hyp2f1_real_many bessel nu=2, {n} nodes",
                      lambda z=z: hyp2f1_eval_many(bessel, z, TOL)))
    loads.append(("hyp2f1_real_many complex k, 1000 nodes",
                  lambda: hyp2f1_eval_many(general, nodes[1000], TOL)))
    loads.append(("erdelyi_rhs_modulus k=0.3 m=0.7 x=1+1i t=1.5",
                  lambda: erdelyi_rhs_modulus(mod, TOL)))
    loads.append(("find_largest_negative_zero nu=2",
                  lambda: find_largest_negative_zero(bessel, tol=TOL)))
    return loads


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=7,
                    help="timed repetitions per workload (median reported)")
    args = ap.parse_args()

    try:
        from whittaker_mono.backends import numba_backend
    except ImportError:
        raise SystemExit("numba backend unavailable; nothing to compare")

    t0 = time.perf_counter()
    numba_backend.warmup()
    warmup_s = time.perf_counter() - t0
    print(f"numba JIT warmup: {warmup_s:.2f} s (one-off, excluded below)\n")

    loads = _workloads()
    width = max(len(name) for name, _ in loads)
    header = f"{'workload':<{width}}  {'numpy':>10}  {'numba':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, fn in loads:
        _use(numpy_backend)
        fn()  # untimed first call: pack construction, allocator
        t_np = _median_time(fn, args.repeats)
        _use(numba_backend)
        fn()
        t_nb = _median_time(fn, args.repeats)
        print(f"{name:<{width}}  {t_np * 1e3:>8.2f}ms  {t_nb * 1e3:>8.2f}ms"
              f"  {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
