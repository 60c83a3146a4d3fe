"""Fast discrete linear canonical transform.

For ``B != 0`` the transform is the chirp-multiplication / chirp-convolution /
chirp-multiplication chain

    X = C[(D-1)/B] F^-1 C[-B] F C[(A-1)/B] x

where ``C[xi]`` multiplies by ``exp(j pi xi n^2 / N)`` and ``F`` is the centered
DFT. For ``B == 0`` one of two three-DFT factorizations is used, chosen so
that a matrix and its inverse always land on different forms; that pairing
makes the inverse transform cancel exactly.

Every branch is unitary and ``idlct(dlct(x, M), M) == x`` up to round-off.
"""

from __future__ import annotations

import math
import warnings

import numpy as np

from .core import LctParams, as_params, inverse
from .kernels import _chirp_mul, _dft, _idft, is_zero_b
from .validation import rewrap, unwrap

SQRT_MINUS_J = np.exp(-0.25j * np.pi)
SQRT_J = np.exp(0.25j * np.pi)


class IllConditionedWarning(RuntimeWarning):
    """B is nonzero but small enough that the chirp rates blow up."""


def _check_b(M: LctParams) -> None:
    scale = max(abs(M.a), abs(M.d), 1.0)
    if abs(M.b) < 1e-6 * scale:
        warnings.warn(
            f"|B| = {abs(M.b):.3g} is close to zero; chirp rates (A-1)/B and (D-1)/B "
            "are numerically ill-conditioned",
            IllConditionedWarning,
            stacklevel=3,
        )


def _reflect(x: np.ndarray) -> np.ndarray:
    """``y[k] = x[-k]`` with ``-k`` taken modulo N on the centered grid."""
    N = x.shape[-1]
    h = N // 2
    pos = (2 * h - np.arange(N)) % N
    return x[..., pos]


def _unitary_dft(x):
    return _dft(x, norm="ortho")


def _unitary_idft(x):
    return _idft(x, norm="ortho")


def _chirp_convolution(x: np.ndarray, B: float) -> np.ndarray:
    # F^-1 C[-B] F; the unnormalized/1-over-N pair is itself unitary.
    return _idft(_chirp_mul(_dft(x), -B))


def _dlct(x: np.ndarray, M: LctParams) -> np.ndarray:
    A, B, C, D = M.a, M.b, M.c, M.d
    if not is_zero_b(M):
        _check_b(M)
        x1 = _chirp_mul(x, (A - 1) / B)
        return _chirp_mul(_chirp_convolution(x1, B), (D - 1) / B)

    if A == D:
        # B == 0 and AD == 1 leaves A == D == +-1.
        if A > 0:
            return _chirp_mul(x, C)
        # b = 0 row of the continuous transform with d = -1: reflect, then
        # chirp by c*d = -C. Constant phase 1 keeps the branch self-inverse.
        return _chirp_mul(_reflect(x), -C)

    if abs(A) > abs(D):
        y = _unitary_dft(_chirp_mul(x, (C + 1) / D))
        y = _unitary_idft(_chirp_mul(y, D))
        return SQRT_MINUS_J * _unitary_dft(_chirp_mul(y, 1 / D))

    y = _chirp_mul(_unitary_idft(x), -1 / A)
    y = _unitary_idft(_chirp_mul(_unitary_dft(y), -A))
    return SQRT_J * _chirp_mul(y, (C - 1) / A)


def dlct(x, M):
    """Discrete LCT of ``x`` with discrete parameter matrix ``M = (A, B; C, D)``.

    ``x`` may be a :class:`~fastlct.core.Signal` or an array (transformed along
    the last axis). ``M`` may be an :class:`~fastlct.core.LctParams` or any
    four-element sequence.
    """
    M = as_params(M)
    arr, template = unwrap(x)
    return rewrap(_dlct(arr, M), template)


def idlct(X, M):
    """Inverse DLCT, computed as the forward transform with ``inverse(M)``."""
    return dlct(X, inverse(as_params(M)))


def rotation(alpha: float) -> LctParams:
    c, s = math.cos(alpha), math.sin(alpha)
    return LctParams(c, s, -s, c)


def dfrft(x, alpha: float):
    """Discrete fractional Fourier transform of angle ``alpha`` (radians).

    Equals ``exp(j alpha/2) * dlct(x, rotation(alpha))``. The angle is reduced
    modulo 2pi to pick the branch, while the phase uses the angle as given.
    """
    alpha = float(alpha)
    reduced = math.remainder(alpha, 2 * math.pi)
    arr, template = unwrap(x)
    phase = np.exp(0.5j * alpha)
    if reduced == 0.0:
        out = phase * arr
    elif abs(reduced) == math.pi:
        out = phase * _dlct(arr, LctParams(-1.0, 0.0, 0.0, -1.0))
    else:
        out = phase * _dlct(arr, rotation(reduced))
    return rewrap(out, template)


def dfresnel(x, wavelength: float, z: float):
    """Discrete Fresnel transform: ``exp(j pi z / lambda) F^-1 C[-lambda z] F x``."""
    if not wavelength > 0:
        raise ValueError(f"wavelength must be positive, got {wavelength}")
    arr, template = unwrap(x)
    out = np.exp(1j * np.pi * z / wavelength) * _chirp_convolution(arr, wavelength * z)
    return rewrap(out, template)


def scaling(sigma: float) -> LctParams:
    return LctParams(sigma, 0.0, 0.0, 1.0 / sigma)


def dscale(x, sigma: float):
    """Discrete scaling by ``sigma``: the ``B == 0`` transform with ``(sigma, 0; 0, 1/sigma)``."""
    sigma = float(sigma)
    if sigma == 0 or not math.isfinite(sigma):
        raise ValueError(f"sigma must be finite and nonzero, got {sigma}")
    arr, template = unwrap(x)
    if sigma == 1.0:
        return rewrap(arr.copy(), template)
    if sigma == -1.0:
        return rewrap(_reflect(arr), template)
    return rewrap(_dlct(arr, scaling(sigma)), template)
