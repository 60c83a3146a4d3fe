import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import random_signal
from fastlct import Signal, ZeroBError, centered_dft, centered_idft, chirp_mul, direct_dlct, inverse, make_params

FT = make_params(0, 1, -1, 0)


def test_chirp_zero_rate_is_identity(rng):
    x = random_signal(rng, 9)
    assert np.array_equal(chirp_mul(x, 0.0), x)


def test_chirp_closed_form_value():
    x = np.ones(4, dtype=complex)
    y = chirp_mul(x, 1.0)
    # index n = 1 sits at position 3 for N = 4
    assert y[3] == pytest.approx(math.sqrt(2) / 2 * (1 + 1j), abs=1e-15)


@given(st.integers(1, 64), st.floats(-50, 50))
def test_chirp_cancels_and_preserves_magnitude(N, xi):
    x = np.random.default_rng(N).standard_normal(N) + 0j
    y = chirp_mul(x, xi)
    assert np.allclose(np.abs(y), np.abs(x), rtol=1e-15, atol=0)
    assert np.allclose(chirp_mul(y, -xi), x, rtol=1e-13, atol=1e-14)


def test_chirp_keeps_signal_metadata():
    s = Signal([1, 2, 3], delta=0.25)
    out = chirp_mul(s, 0.5)
    assert isinstance(out, Signal) and out.delta == 0.25 and out.N == 3


@pytest.mark.parametrize("N", [1, 2, 5, 8, 13])
def test_dft_of_constant(N):
    X = centered_dft(np.ones(N))
    expected = np.zeros(N, dtype=complex)
    expected[N // 2] = N
    assert np.allclose(X, expected, atol=1e-12)


@pytest.mark.parametrize("N", [1, 4, 7])
def test_dft_of_delta(N):
    x = np.zeros(N)
    x[N // 2] = 1
    assert np.allclose(centered_dft(x), np.ones(N), atol=1e-15)


@pytest.mark.parametrize("N", [3, 8])
def test_idft_of_delta(N):
    X = np.zeros(N)
    X[N // 2] = 1
    assert np.allclose(centered_idft(X), np.full(N, 1 / N), atol=1e-15)


@pytest.mark.parametrize("N", list(range(1, 17)))
def test_centered_transforms_match_defining_sums(N, rng):
    x = random_signal(rng, N)
    assert oracles.rel_err(centered_dft(x), oracles.dft_sum(list(x))) <= 1e-12
    assert oracles.rel_err(centered_idft(x), oracles.idft_sum(list(x))) <= 1e-12


@settings(max_examples=50)
@given(st.integers(1, 300), st.integers(0, 2**32 - 1))
def test_parseval_and_round_trip(N, seed):
    x = random_signal(np.random.default_rng(seed), N)
    X = centered_dft(x)
    assert np.sum(np.abs(X) ** 2) == pytest.approx(N * np.sum(np.abs(x) ** 2), rel=1e-10)
    assert np.linalg.norm(centered_idft(X) - x) <= 1e-12 * np.linalg.norm(x)


@pytest.mark.parametrize("N", [6, 7, 16])
def test_real_even_input_has_real_even_dft(N, rng):
    n = np.arange(N) - N // 2
    # even about n = 0 modulo N: x[n] = x[-n mod N]
    values = rng.standard_normal(N)
    x = np.array([values[min(k % N, (-k) % N)] for k in n])
    X = centered_dft(x)
    assert np.max(np.abs(X.imag)) <= 1e-10 * np.max(np.abs(X))
    reflected = X[(2 * (N // 2) - np.arange(N)) % N]
    assert np.allclose(X, reflected, atol=1e-10)


def test_batch_transforms_rowwise(rng):
    X = rng.standard_normal((3, 10)) + 0j
    assert np.allclose(centered_dft(X)[1], centered_dft(X[1]))


@pytest.mark.parametrize("N", [4, 8, 11, 64])
def test_direct_reduces_to_dft(N, rng):
    x = random_signal(rng, N)
    expected = cmath.sqrt(-1j) / math.sqrt(N) * centered_dft(x)
    assert np.linalg.norm(direct_dlct(x, FT) - expected) <= 1e-12 * np.linalg.norm(expected)


def test_direct_inverse_relation_on_dft_case(rng):
    x = random_signal(rng, 8)
    X = direct_dlct(x, FT)
    back_oracle = oracles.direct_inverse_sum(list(X), *FT.as_tuple())
    assert oracles.rel_err(back_oracle, list(x)) <= 1e-12
    assert np.allclose(direct_dlct(X, inverse(FT)), x, atol=1e-12)


def test_direct_single_term():
    x = np.zeros(8, dtype=complex)
    x[4] = 1
    k = np.arange(8) - 4
    expected = np.sqrt(1 / (8j)) * np.exp(1j * 2 * np.pi / 8 * k**2 / 2)
    assert np.allclose(direct_dlct(x, make_params(1, 1, 0, 1)), expected, atol=1e-15)


@pytest.mark.parametrize("M", [(0.6, 0.8, -0.5, 1.0), (1.3, -0.4, 0.2, 0.92 / 1.3)])
def test_direct_matches_loop_oracle(M, rng):
    x = random_signal(rng, 13)
    assert oracles.rel_err(direct_dlct(x, M), oracles.direct_sum(list(x), *M)) <= 1e-12


def test_direct_blocks_cover_large_inputs(rng):
    x = random_signal(rng, 600)
    expected = cmath.sqrt(-1j) / math.sqrt(600) * centered_dft(x)
    assert np.linalg.norm(direct_dlct(x, FT) - expected) <= 1e-10 * np.linalg.norm(expected)


def test_direct_rejects_zero_b():
    with pytest.raises(ZeroBError):
        direct_dlct(np.ones(4), make_params(2, 0, 1, 0.5))
