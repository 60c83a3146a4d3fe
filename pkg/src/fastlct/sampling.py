"""Sampling period and sample-count bounds for approximating the continuous LCT.

A signal of duration ``T`` and bandwidth ``F`` is sheared by each factor of the
CM-CC-CM chain. The first chirp widens the band to ``|a-1|/|b| T + F``, the
chirp convolution stretches the duration to ``|a| T + |b| F`` and the last
chirp sets the output band to ``|c| T + |d| F``. The bounds below keep every
stage inside one period of the discrete grid.

If the time-frequency support is a tilted parallelogram rather than a box, the
signal is first described as the LCT of a box-limited signal ``x0`` with
matrix ``M0 = (1, b0; c0, b0 c0 + 1)``. The bounds then apply to ``M @ M0``
acting on the box of ``x0``, which is usually much tighter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import LctError, LctParams, SamplingPlan, ZeroBError, compose, map_continuous_to_discrete


class DegenerateParallelogram(LctError):
    pass


@dataclass(frozen=True)
class TimeFreqBox:
    duration_T: float
    bandwidth_F: float

    def __post_init__(self):
        if not (self.duration_T > 0 and self.bandwidth_F > 0):
            raise ValueError(
                f"duration and bandwidth must be positive, got T={self.duration_T}, "
                f"F={self.bandwidth_F}"
            )


@dataclass(frozen=True)
class ParallelogramSpec:
    """Two upper vertices of the support parallelogram, ``p1`` to the right of ``p2``.

    For an axis-aligned box ``[-T/2, T/2] x [-F/2, F/2]`` these are
    ``p1 = (T/2, F/2)`` and ``p2 = (-T/2, F/2)``.
    """

    p1: tuple[float, float]
    p2: tuple[float, float]


@dataclass(frozen=True)
class ReducedParallelogram:
    T0: float
    F0: float
    b0: float
    c0: float

    @property
    def M0(self) -> LctParams:
        return LctParams(1.0, self.b0, self.c0, self.b0 * self.c0 + 1.0)

    def __iter__(self):
        return iter((self.T0, self.F0, self.b0, self.c0))


def _require_b(M: LctParams) -> None:
    if M.b == 0:
        raise ZeroBError(f"sampling bounds need b != 0, got {M.as_tuple()}")


def _first_band(T: float, F: float, M: LctParams) -> float:
    return abs(M.a - 1) / abs(M.b) * T + F


def _output_band(T: float, F: float, M: LctParams) -> float:
    return abs(M.c) * T + abs(M.d) * F


def _ceil(value: float) -> int:
    # Guard against products like 12.000000000000002 from inexact 1/delta.
    return max(1, math.ceil(value * (1 - 1e-12)))


def min_rate_basic(box: TimeFreqBox, M: LctParams) -> float:
    """Lower bound on ``1/delta`` so the chirped input is not aliased."""
    _require_b(M)
    return _first_band(box.duration_T, box.bandwidth_F, M)


def min_rate_recoverable(box: TimeFreqBox, M: LctParams) -> float:
    """As :func:`min_rate_basic`, but also keeps input and output recoverable."""
    _require_b(M)
    T, F = box.duration_T, box.bandwidth_F
    return max(_first_band(T, F, M), _output_band(T, F, M))


def min_samples(delta: float, box: TimeFreqBox, M: LctParams) -> int:
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta}")
    T, F = box.duration_T, box.bandwidth_F
    return _ceil(max(T, abs(M.a) * T + abs(M.b) * F) / delta)


def plan(box: TimeFreqBox, M: LctParams, recoverable: bool = False) -> SamplingPlan:
    """Sampling plan for a box-limited signal."""
    rate = min_rate_recoverable(box, M) if recoverable else min_rate_basic(box, M)
    delta = 1.0 / rate
    n = min_samples(delta, box, M)
    return SamplingPlan(
        delta_max=delta,
        n_min=n,
        discrete_params=map_continuous_to_discrete(M, n, delta),
        oversampling_required=box.bandwidth_F < rate,
    )


def parallelogram_reduce(spec: ParallelogramSpec) -> ReducedParallelogram:
    (t1, f1), (t2, f2) = spec.p1, spec.p2
    T0 = t1 - t2
    if not T0 > 0:
        raise DegenerateParallelogram(f"p1 must lie right of p2 (T0 = {T0})")
    c0 = (f1 - f2) / T0
    F0 = f1 + f2 - c0 * (t1 + t2)
    if not F0 > 0:
        raise DegenerateParallelogram(f"vertices give non-positive bandwidth F0 = {F0}")
    b0 = (t1 + t2) / F0
    return ReducedParallelogram(T0, F0, b0, c0)


def box_from_parallelogram(spec: ParallelogramSpec) -> TimeFreqBox:
    """Bounding duration and bandwidth of the parallelogram support."""
    r = parallelogram_reduce(spec)
    T = r.T0 + abs(r.b0) * r.F0
    F = abs(r.c0) * r.T0 + abs(r.b0 * r.c0 + 1) * r.F0
    return TimeFreqBox(T, F)


def plan_refined(spec: ParallelogramSpec, M: LctParams, recoverable: bool = False) -> SamplingPlan:
    """Sampling plan using the parallelogram support instead of its bounding box."""
    r = parallelogram_reduce(spec)
    box = box_from_parallelogram(spec)
    T, F = box.duration_T, box.bandwidth_F
    M1 = compose(M, r.M0)
    _require_b(M1)
    rate = _first_band(r.T0, r.F0, M1)
    if recoverable:
        rate = max(rate, _output_band(r.T0, r.F0, M1), F)
    delta = 1.0 / rate
    n = _ceil(max(T, abs(M1.a) * r.T0 + abs(M1.b) * r.F0) / delta)
    return SamplingPlan(
        delta_max=delta,
        n_min=n,
        discrete_params=map_continuous_to_discrete(M, n, delta),
        oversampling_required=F < rate,
    )
