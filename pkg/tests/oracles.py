"""Slow reference implementations built from literal sums with ``cmath``.

Nothing here calls into the package, so agreement with it is meaningful.
"""

import cmath
import math


def centered(N):
    return list(range(-(N // 2), N - N // 2))


def dft_sum(x):
    N = len(x)
    idx = centered(N)
    return [sum(x[i] * cmath.exp(-2j * math.pi * m * n / N) for i, n in enumerate(idx)) for m in idx]


def idft_sum(X):
    N = len(X)
    idx = centered(N)
    return [sum(X[i] * cmath.exp(2j * math.pi * m * k / N) for i, m in enumerate(idx)) / N for k in idx]


def unitary_dft_sum(x):
    return [v / math.sqrt(len(x)) for v in dft_sum(x)]


def unitary_idft_sum(X):
    return [v * math.sqrt(len(X)) for v in idft_sum(X)]


def cm(x, xi):
    N = len(x)
    return [v * cmath.exp(1j * math.pi * xi * n * n / N) for v, n in zip(x, centered(N))]


def three_step(x, A, B, C, D):
    """B != 0: CM, then the CC double sum written out, then CM."""
    N = len(x)
    idx = centered(N)
    x1 = [x[i] * cmath.exp(1j * math.pi / N * (A - 1) / B * n * n) for i, n in enumerate(idx)]
    inner = [sum(x1[i] * cmath.exp(-2j * math.pi * m * n / N) for i, n in enumerate(idx)) for m in idx]
    X1 = [
        sum(cmath.exp(-1j * math.pi / N * B * m * m) * inner[j] * cmath.exp(2j * math.pi * m * k / N)
            for j, m in enumerate(idx)) / N
        for k in idx
    ]
    return [X1[i] * cmath.exp(1j * math.pi / N * (D - 1) / B * k * k) for i, k in enumerate(idx)]


def b_zero_factors(x, A, C, D):
    """B == 0, |A| != |D|: the factor sequence with a unitary DFT."""
    if abs(A) > abs(D):
        y = unitary_dft_sum(cm(x, (C + 1) / D))
        y = unitary_idft_sum(cm(y, D))
        y = unitary_dft_sum(cm(y, 1 / D))
        return [cmath.sqrt(-1j) * v for v in y]
    y = cm(unitary_idft_sum(x), -1 / A)
    y = unitary_idft_sum(cm(unitary_dft_sum(y), -A))
    y = cm(y, (C - 1) / A)
    return [cmath.sqrt(1j) * v for v in y]


def direct_sum(x, A, B, C, D):
    N = len(x)
    idx = centered(N)
    s = cmath.sqrt(1 / (1j * B * N))
    return [
        s * sum(cmath.exp(2j * math.pi / N * (D / (2 * B) * k * k - k * n / B + A / (2 * B) * n * n)) * x[i]
                for i, n in enumerate(idx))
        for k in idx
    ]


def direct_inverse_sum(X, A, B, C, D):
    """The inverse direct summation, written as its own loop."""
    N = len(X)
    idx = centered(N)
    s = cmath.sqrt(1 / (-1j * B * N))
    return [
        s * sum(cmath.exp(2j * math.pi / N * (-A / (2 * B) * n * n + k * n / B - D / (2 * B) * k * k)) * X[i]
                for i, k in enumerate(idx))
        for n in idx
    ]


def rel_err(a, b):
    num = math.sqrt(sum(abs(p - q) ** 2 for p, q in zip(a, b)))
    den = math.sqrt(sum(abs(q) ** 2 for q in b))
    return num / den
