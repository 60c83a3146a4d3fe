"""scikit-learn compatible transformers.

Each row of ``X`` is one signal on the centered grid; ``fit`` only records
the signal length (and, for :class:`LinearCanonicalTransform`, derives the
discrete parameter matrix from the sampling period). The transforms are
unitary and exactly invertible, so ``inverse_transform`` undoes
``transform`` to round-off.
"""

from __future__ import annotations

import math

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .core import LctParams, default_delta, map_continuous_to_discrete
from .transform import dfresnel, dfrft, dlct, dscale, idlct
from .validation import check_batch


class _SignalTransformer(TransformerMixin, BaseEstimator):
    def fit(self, X, y=None):
        X = check_batch(X)
        self.n_features_in_ = X.shape[1]
        self._fit_params(self.n_features_in_)
        return self

    def _fit_params(self, N):
        pass

    def transform(self, X):
        check_is_fitted(self)
        return self._forward(check_batch(X, self.n_features_in_))

    def inverse_transform(self, X):
        check_is_fitted(self)
        return self._backward(check_batch(X, self.n_features_in_))


class LinearCanonicalTransform(_SignalTransformer):
    """Fast DLCT with parameter matrix ``(a, b; c, d)``, ``ad - bc = 1``.

    Parameters
    ----------
    a, b, c, d : float
        Parameter matrix. Defaults to the Fourier transform ``(0, 1; -1, 0)``.
    delta : float, optional
        Sampling period of the input. When given, ``(a, b; c, d)`` is read as
        the continuous-domain matrix and mapped to the discrete one for the
        fitted length. When omitted the matrix is used as-is, which is the
        same as sampling at ``sqrt(1/N)``.

    Attributes
    ----------
    params_ : LctParams
    discrete_params_ : LctParams
    delta_ : float
    n_features_in_ : int
    """

    def __init__(self, a=0.0, b=1.0, c=-1.0, d=0.0, delta=None):
        self.a = a
        self.b = b
        self.c = c
        self.d = d
        self.delta = delta

    def _fit_params(self, N):
        self.params_ = LctParams(self.a, self.b, self.c, self.d)
        if self.delta is None:
            self.delta_ = default_delta(N)
            self.discrete_params_ = self.params_
        else:
            self.delta_ = float(self.delta)
            self.discrete_params_ = map_continuous_to_discrete(self.params_, N, self.delta_)

    def _forward(self, X):
        return dlct(X, self.discrete_params_)

    def _backward(self, X):
        return idlct(X, self.discrete_params_)


class FractionalFourierTransform(_SignalTransformer):
    def __init__(self, alpha=math.pi / 2):
        self.alpha = alpha

    def _fit_params(self, N):
        self.alpha_ = float(self.alpha)

    def _forward(self, X):
        return dfrft(X, self.alpha_)

    def _backward(self, X):
        return dfrft(X, -self.alpha_)


class FresnelTransform(_SignalTransformer):
    def __init__(self, wavelength=1.0, distance=0.0):
        self.wavelength = wavelength
        self.distance = distance

    def _fit_params(self, N):
        if not self.wavelength > 0:
            raise ValueError(f"wavelength must be positive, got {self.wavelength}")
        self.wavelength_ = float(self.wavelength)

    def _forward(self, X):
        return dfresnel(X, self.wavelength_, self.distance)

    def _backward(self, X):
        return dfresnel(X, self.wavelength_, -self.distance)


class ScalingTransform(_SignalTransformer):
    """Discrete scaling ``(sigma, 0; 0, 1/sigma)``."""

    def __init__(self, sigma=1.0):
        self.sigma = sigma

    def _fit_params(self, N):
        if self.sigma == 0:
            raise ValueError("sigma must be nonzero")
        self.params_ = LctParams(self.sigma, 0.0, 0.0, 1.0 / self.sigma)

    def _forward(self, X):
        return dscale(X, self.sigma)

    def _backward(self, X):
        return idlct(X, self.params_)
