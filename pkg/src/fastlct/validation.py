"""Input validation helpers.

scikit-learn's ``check_array`` rejects complex input, so signals get their own
checks here. Arrays are validated along the last axis: a 1-D array is one
signal, a 2-D array is a batch with one signal per row.
"""

from __future__ import annotations

import numpy as np

from .core import Signal


def check_samples(x, *, ndim: tuple[int, ...] = (1, 2), name: str = "x") -> np.ndarray:
    """Return ``x`` as a finite complex ndarray with a non-empty last axis."""
    arr = np.asarray(x)
    if arr.dtype == object:
        raise TypeError(f"{name} must be numeric, got dtype=object")
    arr = arr.astype(complex, copy=False)
    if arr.ndim not in ndim:
        raise ValueError(f"{name} must have ndim in {ndim}, got shape {arr.shape}")
    if arr.shape[-1] < 1:
        raise ValueError(f"{name} has no samples")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or infinity")
    return arr


def unwrap(x, name: str = "x") -> tuple[np.ndarray, Signal | None]:
    """Split a ``Signal`` or array-like into (samples, template-or-None)."""
    if isinstance(x, Signal):
        return x.samples, x
    return check_samples(x, name=name), None


def rewrap(samples: np.ndarray, template: Signal | None):
    """Inverse of :func:`unwrap`: keep the caller's container type."""
    if template is None:
        return samples
    return template.with_samples(samples)


def check_batch(X, n_features: int | None = None) -> np.ndarray:
    """Validate a 2-D batch of signals, optionally against a fitted length."""
    X = check_samples(X, ndim=(2,), name="X")
    if n_features is not None and X.shape[1] != n_features:
        raise ValueError(
            f"X has {X.shape[1]} samples per signal, but the transformer was fitted "
            f"with {n_features}"
        )
    return X
