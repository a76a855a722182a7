"""Benchmark the compiled merge-count kernel against the pure-Python fallback.

The inversion counter is the hot loop of Kendall's tau; everything else in
the measure stack is vectorized numpy. Run:

    python benchmarks/bench_kernels.py
"""
import time

import numpy as np

import degcorr as dc
from degcorr._kernels import _fallback

try:
    from degcorr._kernels import _inversions
except ImportError:
    _inversions = None


def time_call(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_counter():
    print(f"{'n':>9}  {'compiled':>10}  {'pure py':>10}  {'speedup':>8}")
    rng = np.random.default_rng(0)
    for n in (1_000, 10_000, 100_000, 1_000_000):
        vals = rng.integers(0, n // 2, n)
        if _inversions is not None:
            def compiled():
                buf = vals.astype(np.int64)
                work = np.empty_like(buf)
                _inversions.count_strict_inversions(buf, work)

            tc = time_call(compiled)
        else:
            tc = float("nan")
        repeat = 3 if n <= 100_000 else 1
        tp = time_call(_fallback.count_strict_inversions, vals.tolist(), repeat=repeat)
        speedup = tp / tc if tc == tc else float("nan")
        print(f"{n:>9}  {tc:>9.4f}s  {tp:>9.4f}s  {speedup:>7.1f}x")


def bench_kendall_end_to_end():
    g = dc.bridge_graph(dc.BridgeParams(50_000, 50_000))
    t = dc.DependencyType.IN_OUT
    print(f"\nkendall_tau on a {g.edge_count}-edge graph "
          f"(backend: {dc.kernel_backend}): "
          f"{time_call(dc.kendall_tau, g, t):.4f}s")


if __name__ == "__main__":
    if _inversions is None:
        print("compiled kernel not built; showing fallback only\n")
    bench_counter()
    bench_kendall_end_to_end()
