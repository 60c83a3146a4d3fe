import numpy as np
import pytest

from fastlct import Signal
from fastlct.io import SignalFormatError, dumps_csv, dumps_json, loads_csv, loads_json, read_signal, write_signal


@pytest.fixture
def sig(rng):
    return Signal(rng.standard_normal(7) + 1j * rng.standard_normal(7), delta=0.3)


@pytest.mark.parametrize("dumps, loads", [(dumps_csv, loads_csv), (dumps_json, loads_json)])
def test_lossless_round_trip(sig, dumps, loads):
    back = loads(dumps(sig))
    assert np.array_equal(back.samples, sig.samples) and back.delta == sig.delta


def test_csv_layout(sig):
    lines = dumps_csv(sig).splitlines()
    assert lines[0] == "# delta=0.3" and lines[1] == "n,re,im"
    assert lines[2].startswith("-3,") and lines[-1].startswith("3,")


def test_csv_without_delta_uses_default():
    s = loads_csv("n,re,im\n-2,1,0\n-1,0,0\n0,0,0\n1,0,0\n")
    assert s.delta == pytest.approx(0.5) and s.samples[0] == 1


@pytest.mark.parametrize(
    "text",
    [
        "",
        "a,b,c\n0,1,0\n",
        "n,re,im\n",
        "n,re,im\n0,1\n",
        "n,re,im\n0,x,0\n",
        "n,re,im\n1,1,0\n",
        "# delta=abc\nn,re,im\n0,1,0\n",
        "# delta=-1\nn,re,im\n0,1,0\n",
        "n,re,im\n0,nan,0\n",
    ],
)
def test_csv_errors(text):
    with pytest.raises(SignalFormatError):
        loads_csv(text)


@pytest.mark.parametrize("text", ["{", "[1, 2]", '{"re": [1], "im": [1, 2]}', '{"re": ["a"]}', '{"re": []}'])
def test_json_errors(text):
    with pytest.raises(SignalFormatError):
        loads_json(text)


def test_json_imag_optional():
    s = loads_json('{"re": [1, 2]}')
    assert np.array_equal(s.samples, [1, 2])


def test_format_by_extension(tmp_path, sig):
    for name in ("s.csv", "s.json", "s.txt"):
        write_signal(sig, str(tmp_path / name))
        assert np.array_equal(read_signal(str(tmp_path / name)).samples, sig.samples)
    assert (tmp_path / "s.json").read_text().lstrip().startswith("{")
