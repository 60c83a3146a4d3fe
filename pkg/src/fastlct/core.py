"""Parameter matrices, signal container and the continuous/discrete parameter map."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

DET_TOL = 1e-9

# Chirp rates are plain reals; the alias documents intent in signatures.
ChirpRate = float


class LctError(ValueError):
    """Base class for all domain errors raised by this package."""


class InvalidParams(LctError):
    pass


class DeterminantError(InvalidParams):
    pass


class ZeroBError(LctError):
    """Raised when an operation needs a nonzero ``b`` entry."""


@dataclass(frozen=True)
class LctParams:
    """A real 2x2 parameter matrix ``(a, b; c, d)`` with ``ad - bc = 1``."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise InvalidParams(f"parameter {name}={value!r} is not finite")
            object.__setattr__(self, name, value)
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > DET_TOL:
            raise DeterminantError(
                f"ad - bc = {det!r} for {self.as_tuple()}; expected 1 (tolerance {DET_TOL})"
            )

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    def inverse(self) -> LctParams:
        return inverse(self)

    def __matmul__(self, other: LctParams) -> LctParams:
        return compose(self, other)

    def __iter__(self):
        return iter(self.as_tuple())


def make_params(a: float, b: float, c: float, d: float) -> LctParams:
    return LctParams(a, b, c, d)


def as_params(M) -> LctParams:
    """Coerce an ``LctParams``, 4-sequence or 2x2 array into ``LctParams``."""
    if isinstance(M, LctParams):
        return M
    arr = np.asarray(M, dtype=float).ravel()
    if arr.size != 4:
        raise InvalidParams(f"expected four parameters (a, b, c, d), got {arr.size}")
    return LctParams(*arr.tolist())


def inverse(M: LctParams) -> LctParams:
    """``(d, -b; -c, a)``; exact, no division needed since det = 1."""
    return LctParams(M.d, -M.b, -M.c, M.a)


def compose(M1: LctParams, M2: LctParams) -> LctParams:
    """Matrix product ``M1 @ M2``: the transform that applies ``M2`` first."""
    return LctParams(
        M1.a * M2.a + M1.b * M2.c,
        M1.a * M2.b + M1.b * M2.d,
        M1.c * M2.a + M1.d * M2.c,
        M1.c * M2.b + M1.d * M2.d,
    )


IDENTITY = LctParams(1.0, 0.0, 0.0, 1.0)
FOURIER = LctParams(0.0, 1.0, -1.0, 0.0)


def map_continuous_to_discrete(M: LctParams, N: int, delta: float) -> LctParams:
    """Discrete matrix ``(a, b/(N delta^2); c N delta^2, d)`` for sampling period ``delta``.

    With ``delta = sqrt(1/N)`` the discrete and continuous matrices coincide.
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta}")
    scale = N * delta * delta
    return LctParams(M.a, M.b / scale, M.c * scale, M.d)


def centered_indices(N: int) -> np.ndarray:
    """Integer indices ``ceil(-N/2) .. ceil(N/2) - 1`` in ascending order."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    return np.arange(N) - N // 2


def default_delta(N: int) -> float:
    return math.sqrt(1.0 / N)


@dataclass(frozen=True, eq=False)
class Signal:
    """Finite complex sequence on the centered index grid.

    ``samples[i]`` is the value at index ``centered_indices(N)[i]``.
    ``delta`` is the sampling period; it defaults to ``sqrt(1/N)``.
    """

    samples: np.ndarray
    delta: float | None = None
    _n: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        x = np.array(self.samples, dtype=complex)
        if x.ndim != 1:
            raise ValueError(f"signal samples must be one-dimensional, got shape {x.shape}")
        if x.size < 1:
            raise ValueError("signal must have at least one sample")
        if not np.all(np.isfinite(x)):
            raise ValueError("signal samples must be finite")
        x.setflags(write=False)
        object.__setattr__(self, "samples", x)
        delta = default_delta(x.size) if self.delta is None else float(self.delta)
        if not (math.isfinite(delta) and delta > 0):
            raise ValueError(f"delta must be a positive finite number, got {self.delta!r}")
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "_n", centered_indices(x.size))

    @property
    def N(self) -> int:
        return self.samples.size

    @property
    def indices(self) -> np.ndarray:
        return self._n

    def __len__(self) -> int:
        return self.N

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.samples, dtype=dtype)

    def with_samples(self, samples) -> Signal:
        return Signal(samples, self.delta)

    def norm(self) -> float:
        return float(np.linalg.norm(self.samples))


@dataclass(frozen=True)
class SamplingPlan:
    delta_max: float
    n_min: int
    discrete_params: LctParams
    oversampling_required: bool

    def __post_init__(self):
        if not self.delta_max > 0:
            raise ValueError("delta_max must be positive")
        if self.n_min < 1:
            raise ValueError("n_min must be at least 1")

    def to_dict(self) -> dict:
        return {
            "delta_max": self.delta_max,
            "n_min": self.n_min,
            "discrete_params": list(self.discrete_params.as_tuple()),
            "oversampling_required": self.oversampling_required,
        }
