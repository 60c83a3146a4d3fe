"""Wall-clock comparison of the FFT-based DLCT and direct summation."""

from __future__ import annotations

import time

import numpy as np

from .core import LctParams
from .kernels import direct_dlct
from .transform import dlct

METHODS = {"fast": dlct, "direct": direct_dlct}

# Generic matrix with all three chirp rates nonzero.
BENCH_PARAMS = LctParams(0.6, 0.8, -0.5, 1.0)


def time_method(method: str, N: int, repeat: int = 5, seed: int = 0) -> float:
    """Best-of-``repeat`` seconds for one transform of a length-``N`` signal."""
    fn = METHODS[method]
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(N) + 1j * rng.standard_normal(N)
    fn(x, BENCH_PARAMS)  # warm-up
    best = float("inf")
    for _ in range(max(1, repeat)):
        t0 = time.perf_counter()
        fn(x, BENCH_PARAMS)
        best = min(best, time.perf_counter() - t0)
    return best


def loglog_slope(sizes, seconds) -> float:
    """Least-squares slope of log(seconds) against log(N)."""
    slope, _ = np.polyfit(np.log(np.asarray(sizes, float)), np.log(np.asarray(seconds, float)), 1)
    return float(slope)
