"""Primitive operators: discrete chirp multiplication, centered DFT/IDFT and the
O(N^2) direct-summation DLCT.

All functions accept a :class:`~fastlct.core.Signal` (and return one) or an
array whose last axis holds the samples (and return an array).
"""

from __future__ import annotations

import numpy as np

from .core import ChirpRate, LctParams, ZeroBError, as_params, centered_indices
from .validation import rewrap, unwrap

# Rows of the direct-summation kernel evaluated at once; bounds peak memory.
_DIRECT_BLOCK = 256


def chirp(N: int, xi: ChirpRate) -> np.ndarray:
    """Diagonal of the discrete chirp operator, ``exp(j pi xi n^2 / N)``."""
    n = centered_indices(N).astype(float)
    return np.exp(1j * np.pi * xi * (n * n) / N)


def _chirp_mul(x: np.ndarray, xi: float) -> np.ndarray:
    if xi == 0:
        return x.copy()
    return x * chirp(x.shape[-1], xi)


def _dft(x: np.ndarray, norm: str = "backward") -> np.ndarray:
    # Rotating centered order to standard order is exact: the DFT kernel only
    # depends on m*n mod N.
    y = np.fft.ifftshift(x, axes=-1)
    return np.fft.fftshift(np.fft.fft(y, axis=-1, norm=norm), axes=-1)


def _idft(X: np.ndarray, norm: str = "backward") -> np.ndarray:
    y = np.fft.ifftshift(X, axes=-1)
    return np.fft.fftshift(np.fft.ifft(y, axis=-1, norm=norm), axes=-1)


def chirp_mul(x, xi: ChirpRate):
    """Multiply by ``exp(j pi xi n^2 / N)`` at every centered index ``n``."""
    arr, template = unwrap(x)
    return rewrap(_chirp_mul(arr, float(xi)), template)


def centered_dft(x):
    """Unnormalized DFT with both indices on the centered range."""
    arr, template = unwrap(x)
    return rewrap(_dft(arr), template)


def centered_idft(X):
    """Inverse of :func:`centered_dft` (carries the ``1/N`` factor)."""
    arr, template = unwrap(X, name="X")
    return rewrap(_idft(arr), template)


def is_zero_b(M: LctParams) -> bool:
    return abs(M.b) < 1e-12 * max(abs(M.a), abs(M.d), 1.0)


def direct_dlct(x, M):
    """DLCT by literal O(N^2) summation over the centered grid.

    ``X[k] = sqrt(1/(jBN)) sum_n exp(j 2pi/N (D k^2/2B - k n/B + A n^2/2B)) x[n]``

    This is the reference oracle and the complexity baseline; it is not
    reversible in general.
    """
    M = as_params(M)
    if is_zero_b(M):
        raise ZeroBError("direct summation needs B != 0")
    arr, template = unwrap(x)
    N = arr.shape[-1]
    A, B, D = M.a, M.b, M.d
    n = centered_indices(N).astype(float)
    scale = np.sqrt(1.0 / (1j * B * N))
    w = 2.0 * np.pi / N
    out = np.empty(arr.shape, dtype=complex)
    for start in range(0, N, _DIRECT_BLOCK):
        k = n[start : start + _DIRECT_BLOCK, None]
        phase = w * (D / (2 * B) * k * k - k * n / B + A / (2 * B) * n * n)
        out[..., start : start + _DIRECT_BLOCK] = arr @ np.exp(1j * phase).T
    out *= scale
    return rewrap(out, template)
