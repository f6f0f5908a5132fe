"""Aitchison geometry on the open probability simplex.

These are the commutative special case of :mod:`qaitchison.states`: a
diagonal density matrix ``diag(p)`` behaves exactly like the composition
``p``. They serve as an independent oracle for the quantum operations.
"""

import numpy as np

from .errors import DimensionMismatchError, NotPositiveDefiniteError
from .linalg import EPS_PD

SUM_TOL = 1e-12


def closure(p, eps=EPS_PD):
    """Rescale a strictly positive vector to unit sum."""
    p = np.asarray(p, dtype=float)
    if p.ndim != 1:
        raise ValueError(f"expected a 1-d composition, got shape {p.shape}")
    if not np.all(p > 0):
        raise NotPositiveDefiniteError("composition parts must be strictly positive")
    p = p / p.sum()
    if p.min() <= eps:
        raise NotPositiveDefiniteError(f"smallest part {p.min():.3e} is not above {eps:.1e}")
    return p


def _pair(p, q):
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise DimensionMismatchError(f"lengths {p.shape} and {q.shape} differ")
    return p, q


def c_perturb(p, q):
    p, q = _pair(p, q)
    return closure(p * q, eps=0.0)


def c_power(lam, p):
    # exponentiate centered logs so large |lam| does not overflow
    logp = np.log(np.asarray(p, dtype=float))
    z = lam * logp
    return closure(np.exp(z - z.max()), eps=0.0)


def c_inner(p, q):
    """Log-ratio inner product normalized like the quantum one.

    ``sum(log p * log q)/n - sum(log p) sum(log q)/n^2``, i.e.
    ``clr(p) . clr(q) / n``; this is what ``inner`` returns on
    ``diag(p), diag(q)``.
    """
    p, q = _pair(p, q)
    lp = np.log(p)
    lq = np.log(q)
    n = p.size
    return float(lp @ lq) / n - lp.sum() * lq.sum() / n**2


def c_inner_pairwise(p, q):
    """Classical Aitchison inner product as a sum over all pairs.

    ``sum_ij log(p_i/p_j) log(q_i/q_j) / (2n)``, which equals
    ``clr(p) . clr(q)`` and therefore ``n * c_inner(p, q)``.
    """
    p, q = _pair(p, q)
    lp = np.log(p)
    lq = np.log(q)
    rp = lp[:, None] - lp[None, :]
    rq = lq[:, None] - lq[None, :]
    return float((rp * rq).sum()) / (2 * p.size)


def c_norm(p):
    return float(np.sqrt(max(c_inner(p, p), 0.0)))


def c_clr(p):
    lp = np.log(np.asarray(p, dtype=float))
    return lp - lp.mean()


def c_arc(p, q, t):
    return c_perturb(c_power(t, p), c_power(1.0 - t, q))


def kl_divergence(p, q):
    p, q = _pair(p, q)
    return float(np.sum(p * (np.log(p) - np.log(q))))


def simplex_vector(p, eps=EPS_PD):
    """Validate a composition already on the simplex; values are returned unchanged."""
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.size < 2:
        raise ValueError(f"expected a 1-d composition with at least 2 parts, got shape {p.shape}")
    if p.min() <= eps:
        raise NotPositiveDefiniteError(f"smallest part {p.min():.3e} is not above {eps:.1e}")
    if abs(p.sum() - 1.0) > SUM_TOL:
        raise ValueError(f"composition sums to {p.sum():.17g}, not 1")
    return p


def embed_diagonal(p):
    """``diag(p)`` as a complex density matrix."""
    return np.diag(simplex_vector(p)).astype(np.complex128)
