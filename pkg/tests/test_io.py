import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qaitchison import io
from qaitchison.linalg import random_density, random_hermitian


@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 6))
def test_round_trip_exact(seed, n):
    m = random_density(n, seed) if n > 1 else np.ones((1, 1))
    kind, back, meta = io.loads(io.dumps(m))
    assert kind == "state" and meta == {}
    np.testing.assert_array_equal(back, m)


@given(x=st.floats(allow_nan=False, allow_infinity=False))
def test_seventeen_digits(x):
    m = np.array([[x + 1j * x]])
    assert io.loads(io.dumps(m, kind="hamiltonian"))[1][0, 0] == m[0, 0]


def test_layout():
    text = io.dumps(np.eye(2) / 2, metadata={"label": "uniform"})
    assert text == (
        "{\n"
        '  "kind": "state",\n'
        '  "dim": 2,\n'
        '  "matrix": [\n'
        "    [[0.5, 0], [0, 0]],\n"
        "    [[0, 0], [0.5, 0]]\n"
        "  ],\n"
        '  "metadata": {"label": "uniform"}\n'
        "}\n"
    )
    assert json.loads(text)["metadata"] == {"label": "uniform"}


def test_negative_zero_normalized():
    assert "-0" not in io.dumps(np.array([[-0.0 - 0.0j]]))


def test_file_round_trip(tmp_path):
    h = random_hermitian(3, 5)
    io.write(tmp_path / "h.json", h, kind="hamiltonian", metadata={"n": 3})
    kind, back, meta = io.read(tmp_path / "h.json")
    assert kind == "hamiltonian" and meta == {"n": "3"}
    np.testing.assert_array_equal(back, h)


def test_format_scalar():
    assert io.format_scalar(np.tanh(1.0)) == "0.761594155955765"
    assert io.format_scalar(-0.0) == "0"


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"kind": "density", "dim": 1, "matrix": [[[1, 0]]]}',
        '{"kind": "state", "dim": 0, "matrix": []}',
        '{"kind": "state", "dim": true, "matrix": [[[1, 0]]]}',
        '{"kind": "state", "dim": 2, "matrix": [[[1, 0]]]}',
        '{"kind": "state", "dim": 1, "matrix": [[[1, 0], [0, 0]]]}',
        '{"kind": "state", "dim": 1, "matrix": [[[1]]]}',
        '{"kind": "state", "dim": 1, "matrix": [[["1", 0]]]}',
        '{"kind": "state", "dim": 1, "matrix": [[[NaN, 0]]]}',
        '{"kind": "state", "dim": 1, "matrix": [[[1, 0]]], "metadata": {"n": 1}}',
    ],
)
def test_schema_errors(text):
    with pytest.raises(io.StateFileError):
        io.loads(text)


def test_missing_file(tmp_path):
    with pytest.raises(io.StateFileError):
        io.read(tmp_path / "nope.json")


def test_dumps_rejects():
    with pytest.raises(ValueError):
        io.dumps(np.eye(2), kind="operator")
    with pytest.raises(ValueError):
        io.dumps(np.ones((2, 3)))
    with pytest.raises(ValueError):
        io.dumps(np.array([[np.inf]]))
