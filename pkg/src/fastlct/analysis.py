"""Closed-form references, error metrics, test signals and experiment protocols."""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np

from .core import (
    LctError,
    LctParams,
    Signal,
    ZeroBError,
    as_params,
    centered_indices,
    compose,
)
from .kernels import is_zero_b
from .transform import dlct, idlct
from .validation import unwrap


class ZeroReference(LctError):
    pass


class LengthMismatch(LctError):
    pass


class UnknownSignal(LctError):
    pass


# ---------------------------------------------------------------------------
# references and metrics


def gaussian_lct_closed_form(s: float, M, k, delta: float):
    """Continuous LCT of ``exp(-2 pi s t^2)`` evaluated at ``u = k * delta``.

    ``k`` may be a scalar or an array of (centered) indices.
    """
    M = as_params(M)
    if M.b == 0:
        raise ZeroBError("the Gaussian closed form needs b != 0")
    if not s > 0:
        raise ValueError(f"s must be positive, got {s}")
    a, b, d = M.a, M.b, M.d
    u = np.asarray(k, dtype=float) * delta
    amp = np.sqrt(1.0 / (a + 2j * b * s))
    rate = (a * d - 1 + 2j * s * b * d) / (2 * np.pi * s * b * b - 1j * np.pi * a * b)
    return amp * np.exp(rate * np.pi**2 * u * u)


def nmse(reference, estimate) -> float:
    """``sum |ref - est|^2 / sum |ref|^2``."""
    ref, _ = unwrap(reference, name="reference")
    est, _ = unwrap(estimate, name="estimate")
    if ref.shape != est.shape:
        raise LengthMismatch(f"reference has shape {ref.shape}, estimate {est.shape}")
    energy = float(np.sum(np.abs(ref) ** 2))
    if energy == 0:
        raise ZeroReference("reference signal is identically zero")
    return float(np.sum(np.abs(ref - est) ** 2)) / energy


# ---------------------------------------------------------------------------
# test signals

H3_SEED = 280
_FIXED_LENGTHS = {"h1": 128, "h2": 101, "h3": 280, "h4": 201}
SIGNAL_NAMES = ("h1", "h2", "h3", "h4", "gauss")


def gaussian_signal(s: float, N: int) -> Signal:
    """``g_s[n] = exp(-2 pi s n^2 / N)``, i.e. ``exp(-2 pi s t^2)`` at ``t = n / sqrt(N)``."""
    n = centered_indices(N).astype(float)
    return Signal(np.exp(-2 * np.pi * s * n * n / N))


def _trapezoid(N: int = 201, plateau: int = 81) -> np.ndarray:
    ramp = (N - plateau) // 2
    up = np.arange(ramp) / ramp
    return np.concatenate([up, np.ones(plateau), up[::-1]])


def make_test_signal(name: str, *, s: float = 1.0, N: int = 101) -> Signal:
    """Named test input. ``s`` and ``N`` only apply to ``"gauss"``.

    h1: chirped Gaussian, N=128.  h2: modulated Gaussian, N=101.
    h3: fixed-seed binary sequence, N=280.  h4: trapezoid, N=201 (81-sample
    plateau, 60-sample linear ramps starting at 0).
    """
    if name == "gauss":
        return gaussian_signal(s, N)
    if name not in _FIXED_LENGTHS:
        raise UnknownSignal(f"unknown signal {name!r}; choose from {', '.join(SIGNAL_NAMES)}")
    N = _FIXED_LENGTHS[name]
    n = centered_indices(N).astype(float)
    if name == "h1":
        x = np.exp(-np.pi * n * n / N - 1j * np.pi * n * n / N)
    elif name == "h2":
        t = n / math.sqrt(N)
        x = (2 * np.cos(2 * np.pi * t) + 1j * np.sin(np.pi * (t - 1))) * np.exp(-n * n / N)
    elif name == "h3":
        x = np.random.default_rng(H3_SEED).integers(0, 2, N).astype(float)
    else:
        x = _trapezoid(N)
    return Signal(x)


# ---------------------------------------------------------------------------
# random parameter protocols


def random_params(rng_seed=None, low: float = -2.0, high: float = 2.0, floor: float = 0.05) -> LctParams:
    """Draw ``a, b, c`` uniformly on ``(low, high)`` and solve ``d = (1 + bc) / a``.

    Draws with ``|a| < floor`` or ``|b| < floor`` are rejected. ``rng_seed`` is
    an int seed or a ``numpy.random.Generator`` (consumed in place).
    """
    rng = np.random.default_rng(rng_seed)
    while True:
        a, b, c = rng.uniform(low, high, 3)
        if abs(a) >= floor and abs(b) >= floor:
            return LctParams(a, b, c, (1 + b * c) / a)


def chirp_rates(M: LctParams) -> tuple[float, float, float]:
    """The three chirp rates of the ``B != 0`` chain: ``(A-1)/B, -B, (D-1)/B``."""
    if is_zero_b(M):
        raise ZeroBError("chirp rates are undefined for B = 0")
    return ((M.a - 1) / M.b, -M.b, (M.d - 1) / M.b)


def params_from_chirp_rates(xi1: float, xi2: float, xi3: float) -> LctParams:
    """Inverse of :func:`chirp_rates`."""
    B = -xi2
    # C = (AD - 1)/B expanded so that B -> 0 stays finite.
    return LctParams(1 + xi1 * B, B, xi1 + xi3 + xi1 * xi3 * B, 1 + xi3 * B)


def random_chirp_limited_pair(rng, limit: float, max_tries: int = 100_000) -> tuple[LctParams, LctParams]:
    """Draw ``(M1, M2)`` whose chirp rates, and those of ``M1 @ M2``, lie in ``[-limit, limit]``.

    The chirp rates of ``M1`` and ``M2`` are drawn uniformly; pairs whose
    product falls outside the limit are rejected.
    """
    rng = np.random.default_rng(rng)
    for _ in range(max_tries):
        M1 = params_from_chirp_rates(*rng.uniform(-limit, limit, 3))
        M2 = params_from_chirp_rates(*rng.uniform(-limit, limit, 3))
        if is_zero_b(M1) or is_zero_b(M2):
            continue
        M = compose(M1, M2)
        if not is_zero_b(M) and max(abs(r) for r in chirp_rates(M)) <= limit:
            return M1, M2
    raise RuntimeError(f"no admissible pair found in {max_tries} draws (limit={limit})")


# ---------------------------------------------------------------------------
# experiments


def accuracy_experiment(s: float, N: int, M) -> float:
    """NMSE of the DLCT of a sampled Gaussian against the sampled closed form.

    Sampling uses ``delta = sqrt(1/N)``, where discrete and continuous
    parameter matrices coincide.
    """
    M = as_params(M)
    g = gaussian_signal(s, N)
    reference = gaussian_lct_closed_form(s, M, g.indices, g.delta)
    return nmse(reference, dlct(g, M))


def additivity_experiment(x, M1, M2) -> float:
    """NMSE between ``dlct(x, M1 @ M2)`` and ``dlct(dlct(x, M2), M1)``."""
    M1, M2 = as_params(M1), as_params(M2)
    return nmse(dlct(x, compose(M1, M2)), dlct(dlct(x, M2), M1))


def reversibility_experiment(x, M) -> float:
    """NMSE between ``x`` and ``idlct(dlct(x, M), M)``."""
    return nmse(x, idlct(dlct(x, M), M))


@dataclass(frozen=True)
class Record:
    index: int
    params: LctParams
    nmse: float
    params2: LctParams | None = None

    def __post_init__(self):
        if not self.nmse >= 0:
            raise ValueError(f"nmse must be nonnegative, got {self.nmse}")


@dataclass
class ExperimentReport:
    protocol: str
    signal: str
    N: int
    seed: int | None
    records: list[Record] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.records)

    @property
    def nmses(self) -> np.ndarray:
        return np.array([r.nmse for r in self.records], dtype=float)

    def sorted(self) -> ExperimentReport:
        """Copy with records in ascending NMSE order (ties keep draw order)."""
        return replace(self, records=sorted(self.records, key=lambda r: (r.nmse, r.index)))

    def summary(self) -> dict:
        v = self.nmses
        if v.size == 0:
            return {"runs": 0, "min": None, "median": None, "max": None}
        return {
            "runs": int(v.size),
            "min": float(v.min()),
            "median": float(np.median(v)),
            "max": float(v.max()),
        }

    # -- serialization -----------------------------------------------------

    @property
    def _pairs(self) -> bool:
        return any(r.params2 is not None for r in self.records) or self.protocol == "additivity"

    def _header(self) -> list[str]:
        cols = ["index", "a", "b", "c", "d"]
        if self._pairs:
            cols += ["a2", "b2", "c2", "d2"]
        return cols + ["nmse"]

    def _meta(self) -> dict:
        return {"protocol": self.protocol, "signal": self.signal, "N": self.N, "seed": self.seed, **self.metadata}

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# {json.dumps(self._meta(), sort_keys=True)}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self._header())
        for r in self.records:
            row = [r.index, *map(repr, r.params.as_tuple())]
            if self._pairs:
                row += list(map(repr, r.params2.as_tuple()))
            writer.writerow(row + [repr(r.nmse)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> ExperimentReport:
        lines = text.splitlines()
        meta = {}
        if lines and lines[0].startswith("#"):
            meta = json.loads(lines[0][1:])
            lines = lines[1:]
        rows = list(csv.DictReader(lines))
        records = []
        for row in rows:
            p2 = None
            if "a2" in row:
                p2 = LctParams(*(float(row[k]) for k in ("a2", "b2", "c2", "d2")))
            records.append(
                Record(
                    int(row["index"]),
                    LctParams(*(float(row[k]) for k in "abcd")),
                    float(row["nmse"]),
                    p2,
                )
            )
        return cls._from_meta(meta, records)

    def to_json(self) -> str:
        out = dict(self._meta())
        out["records"] = [
            {
                "index": r.index,
                "params": list(r.params.as_tuple()),
                **({"params2": list(r.params2.as_tuple())} if r.params2 is not None else {}),
                "nmse": r.nmse,
            }
            for r in self.records
        ]
        # json writes floats with repr(), the shortest round-trip form.
        return json.dumps(out, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ExperimentReport:
        data = json.loads(text)
        records = [
            Record(
                r["index"],
                LctParams(*r["params"]),
                r["nmse"],
                LctParams(*r["params2"]) if "params2" in r else None,
            )
            for r in data.pop("records")
        ]
        return cls._from_meta(data, records)

    @classmethod
    def _from_meta(cls, meta: dict, records: list[Record]) -> ExperimentReport:
        meta = dict(meta)
        return cls(
            protocol=meta.pop("protocol", ""),
            signal=meta.pop("signal", ""),
            N=int(meta.pop("N", 0)),
            seed=meta.pop("seed", None),
            records=records,
            metadata=meta,
        )

    def save(self, path: str | os.PathLike) -> None:
        path = os.fspath(path)
        text = self.to_json() if path.endswith(".json") else self.to_csv()
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)

    @classmethod
    def load(cls, path: str | os.PathLike) -> ExperimentReport:
        path = os.fspath(path)
        with open(path, encoding="utf-8") as f:
            text = f.read()
        return cls.from_json(text) if path.endswith(".json") else cls.from_csv(text)


def _worker_count(n_jobs: int | None) -> int:
    if n_jobs is None:
        n_jobs = int(os.environ.get("LCT_THREADS", "1") or 1)
    return max(1, n_jobs)


def _run(tasks: Sequence, fn: Callable, n_jobs: int | None) -> list[float]:
    workers = _worker_count(n_jobs)
    if workers == 1 or len(tasks) < 2:
        return [fn(t) for t in tasks]
    # map() yields in submission order, so results follow draw order.
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


PROTOCOLS = ("accuracy", "additivity", "reversibility")


def run_experiment(
    protocol: str,
    *,
    signal: str = "h1",
    runs: int = 200,
    seed: int = 0,
    s: float = 1.0,
    N: int = 101,
    chirp_limit: float | None = None,
    n_jobs: int | None = None,
) -> ExperimentReport:
    """Run one of the randomized protocols; records are in draw order.

    * ``accuracy``: Gaussian ``g_s`` of length ``N`` against the closed form,
      one random matrix per run (``signal`` is ignored).
    * ``additivity``: cascade vs. composed transform on ``signal``. Matrices
      come from :func:`random_params`, or from :func:`random_chirp_limited_pair`
      when ``chirp_limit`` is given.
    * ``reversibility``: ``idlct(dlct(x))`` against ``x`` on ``signal``.

    ``n_jobs`` defaults to the ``LCT_THREADS`` environment variable (or 1).
    """
    if protocol not in PROTOCOLS:
        raise ValueError(f"unknown protocol {protocol!r}; choose from {', '.join(PROTOCOLS)}")
    if runs < 0:
        raise ValueError("runs must be nonnegative")
    rng = np.random.default_rng(seed)
    metadata = {}

    if protocol == "accuracy":
        signal_name = "gauss"
        metadata["s"] = s
        draws = [random_params(rng) for _ in range(runs)]
        values = _run(draws, lambda M: accuracy_experiment(s, N, M), n_jobs)
        records = [Record(i, M, v) for i, (M, v) in enumerate(zip(draws, values))]
        return ExperimentReport(protocol, signal_name, N, seed, records, metadata)

    x = make_test_signal(signal, s=s, N=N)
    if signal == "gauss":
        metadata["s"] = s
    if protocol == "reversibility":
        draws = [random_params(rng) for _ in range(runs)]
        values = _run(draws, lambda M: reversibility_experiment(x, M), n_jobs)
        records = [Record(i, M, v) for i, (M, v) in enumerate(zip(draws, values))]
    else:
        if chirp_limit is not None:
            metadata["chirp_limit"] = chirp_limit
            pairs = [random_chirp_limited_pair(rng, chirp_limit) for _ in range(runs)]
        else:
            pairs = []
            for _ in range(runs):
                M1 = random_params(rng)
                M2 = random_params(rng)
                pairs.append((M1, M2))
        values = _run(pairs, lambda p: additivity_experiment(x, p[0], p[1]), n_jobs)
        records = [Record(i, M1, v, M2) for i, ((M1, M2), v) in enumerate(zip(pairs, values))]
    return ExperimentReport(protocol, signal, x.N, seed, records, metadata)
