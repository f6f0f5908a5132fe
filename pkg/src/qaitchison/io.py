"""Reading and writing matrix files.

A matrix file is a JSON object::

    {
      "kind": "state",
      "dim": 2,
      "matrix": [
        [[0.5, 0], [0, 0]],
        [[0, 0], [0.5, 0]]
      ],
      "metadata": {"label": "uniform"}
    }

``kind`` is ``"state"`` or ``"hamiltonian"``, ``matrix`` is row-major with
``[re, im]`` pairs, and ``metadata`` is an optional string map. Floats are
written with 17 significant digits so values survive a round trip exactly.
"""

import json

import numpy as np

KINDS = ("state", "hamiltonian")


class StateFileError(ValueError):
    """Malformed or unreadable matrix file."""


def format_float(x):
    return format(float(x) + 0.0, ".17g")


def format_scalar(x):
    """Scalar output used on the command line: 15 significant digits."""
    return format(float(x) + 0.0, ".15g")


def dumps(matrix, kind="state", metadata=None):
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    m = np.asarray(matrix, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    n = m.shape[0]
    rows = []
    for row in m:
        cells = ", ".join(f"[{format_float(z.real)}, {format_float(z.imag)}]" for z in row)
        rows.append(f"    [{cells}]")
    lines = [
        "{",
        f'  "kind": {json.dumps(kind)},',
        f'  "dim": {n},',
        '  "matrix": [',
        ",\n".join(rows),
        "  ]" + ("," if metadata else ""),
    ]
    if metadata:
        lines.append(f'  "metadata": {json.dumps({str(k): str(v) for k, v in metadata.items()})}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def write(path, matrix, kind="state", metadata=None):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(matrix, kind, metadata))


def loads(text):
    """Parse a matrix file; returns ``(kind, matrix, metadata)``."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFileError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise StateFileError("top level must be an object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise StateFileError(f"kind must be one of {KINDS}, got {kind!r}")
    dim = obj.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise StateFileError(f"dim must be a positive integer, got {dim!r}")
    rows = obj.get("matrix")
    if not isinstance(rows, list) or len(rows) != dim:
        raise StateFileError(f"matrix must have {dim} rows")
    m = np.empty((dim, dim), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise StateFileError(f"row {i} must have {dim} entries")
        for j, cell in enumerate(row):
            if (
                not isinstance(cell, list)
                or len(cell) != 2
                or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in cell)
            ):
                raise StateFileError(f"entry ({i}, {j}) must be a [re, im] pair of numbers")
            m[i, j] = complex(cell[0], cell[1])
    if not np.all(np.isfinite(m)):
        raise StateFileError("matrix has non-finite entries")
    metadata = obj.get("metadata", {})
    if not isinstance(metadata, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in metadata.items()
    ):
        raise StateFileError("metadata must be a map of strings")
    return kind, m, metadata


def read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise StateFileError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)
