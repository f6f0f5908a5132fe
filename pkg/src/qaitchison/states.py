"""Aitchison geometry on the interior of the quantum state space.

Points are positive definite Hermitian matrices. Every operation is
invariant under positive rescaling of its inputs, so any positive definite
matrix is accepted and outputs always have unit trace.

Vector-space structure
----------------------
* ``perturb(A, B)``  -- addition, ``exp(log A + log B)`` normalized
* ``power(lam, A)``  -- scalar multiplication, ``exp(lam log A)`` normalized
* ``inner(A, B)``    -- ``Tr(log A log B)/n - Tr(log A) Tr(log B)/n^2``

The zero vector is the maximally mixed state ``I/n``.
"""

import math

import numpy as np

from .errors import (
    DimensionMismatchError,
    ExpRangeError,
    NotPositiveDefiniteError,
    NotUnitaryError,
    TraceError,
)
from .linalg import EPS_PD, hermitian, hermitian_eig, hs_inner

TRACE_TOL = 1e-10
UNITARY_TOL = 1e-10
# largest eigenvalue spread an exponential may have before the smallest
# normalized eigenvalue underflows
EXP_SPREAD_MAX = 700.0


def density_state(m, eps=EPS_PD, trace_tol=TRACE_TOL):
    """Validate a density matrix and return it with exactly unit trace.

    Raises
    ------
    NotHermitianError, TraceError, NotPositiveDefiniteError
    """
    m = hermitian(m)
    tr = np.trace(m).real
    if abs(tr - 1.0) > trace_tol:
        raise TraceError(f"trace {tr:.17g} differs from 1 by more than {trace_tol:.1e}")
    min_eig = hermitian_eig(m).eigenvalues[0]
    if min_eig <= eps:
        raise NotPositiveDefiniteError(f"minimum eigenvalue {min_eig:.3e} is not above {eps:.1e}")
    return m / tr


def hamiltonian(m, traceless=False, tol=TRACE_TOL):
    m = hermitian(m)
    if traceless:
        tr = np.trace(m).real
        if abs(tr) > tol:
            raise ValueError(f"Hamiltonian trace {tr:.3e} is not zero")
    return m


def maximally_mixed(n):
    return np.eye(n, dtype=np.complex128) / n


def _log(a, eps):
    eig = hermitian_eig(a)
    if eig.eigenvalues[0] <= eps:
        raise NotPositiveDefiniteError(
            f"minimum eigenvalue {eig.eigenvalues[0]:.3e} is not above {eps:.1e}"
        )
    return eig.reconstruct(np.log(eig.eigenvalues))


def _same_dim(a, b):
    if np.shape(a) != np.shape(b):
        raise DimensionMismatchError(f"shapes {np.shape(a)} and {np.shape(b)} differ")


def _trace_real(m):
    return math.fsum(np.diagonal(m).real)


def clr_inverse(x):
    """Map a Hamiltonian-like matrix ``X`` to ``exp(X) / Tr exp(X)``.

    The spectrum is shifted by its maximum before exponentiating, so only
    the spread of eigenvalues matters; spreads above 700 would underflow
    the smallest weight to zero and raise :class:`ExpRangeError`.
    """
    eig = hermitian_eig(x)
    w = eig.eigenvalues
    if w[-1] - w[0] > EXP_SPREAD_MAX:
        raise ExpRangeError(f"eigenvalue spread {w[-1] - w[0]:.3e} leaves the exp range")
    p = np.exp(w - w[-1])
    return eig.reconstruct(p / math.fsum(p))


def clr(a, eps=EPS_PD):
    """Centered log-ratio: ``log A - (Tr log A / n) I``, exactly traceless."""
    log_a = _log(a, eps)
    n = log_a.shape[0]
    return log_a - (_trace_real(log_a) / n) * np.eye(n)


def gibbs(h, beta=1.0):
    """Gibbs state ``exp(-beta H) / Tr exp(-beta H)`` for ``beta > 0``."""
    if not beta > 0:
        raise ValueError(f"inverse temperature must be positive, got {beta}")
    return clr_inverse(-beta * hermitian(h))


def perturb(a, b, eps=EPS_PD):
    _same_dim(a, b)
    return clr_inverse(_log(a, eps) + _log(b, eps))


def power(lam, a, eps=EPS_PD):
    return clr_inverse(lam * _log(a, eps))


def negate(a, eps=EPS_PD):
    return power(-1.0, a, eps)


def subtract(a, b, eps=EPS_PD):
    _same_dim(a, b)
    return perturb(a, negate(b, eps), eps)


def inner(a, b, eps=EPS_PD):
    _same_dim(a, b)
    la = _log(a, eps)
    lb = _log(b, eps)
    n = la.shape[0]
    return hs_inner(la, lb).real / n - _trace_real(la) * _trace_real(lb) / n**2


def gram(points, eps=EPS_PD):
    """Matrix of pairwise inner products, taking each logarithm once."""
    logs = [_log(p, eps) for p in points]
    if len({lg.shape for lg in logs}) > 1:
        raise DimensionMismatchError("points have different dimensions")
    n = logs[0].shape[0]
    flat = np.array([lg.ravel() for lg in logs])
    traces = np.array([_trace_real(lg) for lg in logs])
    return (flat.conj() @ flat.T).real / n - np.outer(traces, traces) / n**2


def norm(a, eps=EPS_PD):
    """Aitchison norm, ``|clr(a)|_F / sqrt(n)``.

    Equal to ``sqrt(inner(a, a))`` but summed as squares of the centered
    logarithm, which keeps full relative accuracy near the zero vector
    where the two-term inner-product formula cancels.
    """
    x = clr(a, eps)
    return float(np.linalg.norm(x)) / math.sqrt(x.shape[0])


def distance(a, b, eps=EPS_PD):
    return norm(subtract(a, b, eps), eps)


def arc(a, b, t, eps=EPS_PD):
    """Point ``(t . A) + ((1 - t) . B)`` of the segment from ``B`` to ``A``."""
    _same_dim(a, b)
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"arc parameter must lie in [0, 1], got {t}")
    return perturb(power(t, a, eps), power(1.0 - t, b, eps), eps)


def tensor(a, b):
    a = hermitian(a)
    b = hermitian(b)
    a = a / np.trace(a).real
    b = b / np.trace(b).real
    return np.kron(a, b)


def conjugate(a, u):
    """``U A U^*`` for a unitary ``U``."""
    a = hermitian(a)
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != a.shape:
        raise DimensionMismatchError(f"unitary shape {u.shape} does not match {a.shape}")
    resid = np.abs(u.conj().T @ u - np.eye(u.shape[0])).max()
    if resid > UNITARY_TOL:
        raise NotUnitaryError(f"unitarity residual {resid:.3e}")
    out = u @ a @ u.conj().T
    return (out + out.conj().T) / 2 / np.trace(a).real
