"""Signal file formats.

CSV: optional ``# delta=<value>`` comment line, header ``n,re,im``, then one
row per centered index in ascending order. Indices must be exactly the
centered range for the row count.

JSON: ``{"delta": float, "re": [...], "im": [...]}`` with implied centered
indexing; ``delta`` may be omitted.

Floats are written with ``repr`` so files round-trip bit-exactly.
"""

from __future__ import annotations

import csv
import io
import json
import os

import numpy as np

from .core import Signal, centered_indices


class SignalFormatError(ValueError):
    pass


def _fmt(x: float) -> str:
    return repr(float(x))


def dumps_csv(signal: Signal) -> str:
    buf = io.StringIO()
    buf.write(f"# delta={_fmt(signal.delta)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "re", "im"])
    for n, v in zip(signal.indices.tolist(), signal.samples.tolist()):
        writer.writerow([n, _fmt(v.real), _fmt(v.imag)])
    return buf.getvalue()


def loads_csv(text: str) -> Signal:
    delta = None
    body = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            key, _, value = stripped[1:].strip().partition("=")
            if key.strip() == "delta":
                try:
                    delta = float(value)
                except ValueError as exc:
                    raise SignalFormatError(f"bad delta comment: {line!r}") from exc
            continue
        body.append(line)
    if not body:
        raise SignalFormatError("empty signal file")
    reader = csv.reader(body)
    header = [h.strip() for h in next(reader)]
    if header != ["n", "re", "im"]:
        raise SignalFormatError(f"expected header 'n,re,im', got {','.join(header)!r}")
    idx, values = [], []
    for lineno, row in enumerate(reader, start=2):
        if len(row) != 3:
            raise SignalFormatError(f"row {lineno}: expected 3 fields, got {len(row)}")
        try:
            idx.append(int(row[0]))
            values.append(complex(float(row[1]), float(row[2])))
        except ValueError as exc:
            raise SignalFormatError(f"row {lineno}: {exc}") from exc
    if not values:
        raise SignalFormatError("signal file has no samples")
    expected = centered_indices(len(values)).tolist()
    if idx != expected:
        raise SignalFormatError(
            f"indices must be the centered range {expected[0]}..{expected[-1]} in ascending order"
        )
    return _build(values, delta)


def dumps_json(signal: Signal) -> str:
    data = {
        "delta": float(signal.delta),
        "re": signal.samples.real.tolist(),
        "im": signal.samples.imag.tolist(),
    }
    return json.dumps(data) + "\n"


def loads_json(text: str) -> Signal:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SignalFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "re" not in data:
        raise SignalFormatError("JSON signal must be an object with 're' (and optional 'im', 'delta')")
    re = data["re"]
    im = data.get("im", [0.0] * len(re))
    if len(re) != len(im):
        raise SignalFormatError(f"'re' has {len(re)} values but 'im' has {len(im)}")
    try:
        values = np.asarray(re, dtype=float) + 1j * np.asarray(im, dtype=float)
    except (TypeError, ValueError) as exc:
        raise SignalFormatError(f"non-numeric sample: {exc}") from exc
    return _build(values, data.get("delta"))


def _build(values, delta) -> Signal:
    try:
        return Signal(np.asarray(values, dtype=complex), delta)
    except (TypeError, ValueError) as exc:
        raise SignalFormatError(str(exc)) from exc


def _is_json(path) -> bool:
    return os.fspath(path).lower().endswith(".json")


def read_signal(path) -> Signal:
    with open(path, encoding="utf-8") as f:
        text = f.read()
    return loads_json(text) if _is_json(path) else loads_csv(text)


def write_signal(signal: Signal, path) -> None:
    text = dumps_json(signal) if _is_json(path) else dumps_csv(signal)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
