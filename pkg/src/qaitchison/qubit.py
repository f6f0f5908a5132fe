"""Closed-form Aitchison geometry of a single qubit in Bloch coordinates.

A Bloch vector ``v = (x, y, z)`` with ``|v| < 1`` stands for

    D = 1/2 [[1 + z, x + i y],
             [x - i y, 1 - z]]

In these coordinates the Aitchison norm is ``artanh|v|``, angles are the
Euclidean angles, negation is the reflection ``v -> -v`` and powering by
``lam`` rescales the radius to ``tanh(lam artanh|v|)``. Whenever one of
the vectors is the origin the undefined angle is multiplied by
``artanh(0) = 0`` and dropped.
"""

import math

import numpy as np

from .errors import DimensionMismatchError, OutsideBallError
from .linalg import hermitian

BALL_MARGIN = 1e-12


def _bloch(v):
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"Bloch vector must have 3 components, got shape {v.shape}")
    r = float(np.linalg.norm(v))
    if not r < 1.0 - BALL_MARGIN:
        raise OutsideBallError(f"Bloch radius {r:.17g} is not inside the unit ball")
    return v, r


def bloch_to_state(v):
    (x, y, z), _ = _bloch(v)
    return 0.5 * np.array([[1 + z, x + 1j * y], [x - 1j * y, 1 - z]])


def state_to_bloch(d):
    d = np.asarray(d)
    if d.shape != (2, 2):
        raise DimensionMismatchError(f"Bloch coordinates need a 2x2 state, got shape {d.shape}")
    d = hermitian(d)
    d = d / np.trace(d).real
    off = d[0, 1]
    # + 0.0 turns -0.0 into 0.0
    return np.array([2 * off.real, 2 * off.imag, (d[0, 0] - d[1, 1]).real]) + 0.0


def norm_closed(v):
    _, r = _bloch(v)
    return math.atanh(r)


def inner_closed(v1, v2):
    v1, r1 = _bloch(v1)
    v2, r2 = _bloch(v2)
    if r1 == 0.0 or r2 == 0.0:
        return 0.0
    cos = min(1.0, max(-1.0, float(v1 @ v2) / (r1 * r2)))
    return math.atanh(r1) * math.atanh(r2) * cos


def distance_closed(v1, v2):
    n1 = norm_closed(v1)
    n2 = norm_closed(v2)
    sq = n1 * n1 + n2 * n2 - 2.0 * inner_closed(v1, v2)
    return math.sqrt(max(sq, 0.0))


def negate_closed(v):
    v, _ = _bloch(v)
    return -v + 0.0


def dilate_closed(lam, v):
    """Bloch vector of ``lam . D``; negative ``lam`` passes through the origin."""
    v, r = _bloch(v)
    if r == 0.0:
        return np.zeros(3)
    return v * (math.tanh(lam * math.atanh(r)) / r)
