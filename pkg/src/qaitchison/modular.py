"""Superoperators on the Hilbert-Schmidt space of n x n matrices.

Superoperators are plain ``(n*n, n*n)`` arrays acting on column-major
vectorizations, ``vec(X) = X.reshape(-1, order="F")``. In this convention

    L_X = I (x) X        (A -> X A)
    R_X = X^T (x) I      (A -> A X)

so the relative modular operator ``A -> D1 A D2^{-1}`` is the Kronecker
product ``(D2^{-1})^T (x) D1``, which is Hermitian positive definite.
"""

import math

import numpy as np

from .errors import DimensionMismatchError, NotPositiveDefiniteError
from .linalg import EPS_PD, as_matrix, hermitian, hermitian_eig, hs_inner, matrix_log_pd


def vec(x):
    return np.asarray(x).reshape(-1, order="F")


def unvec(v, n=None):
    v = np.asarray(v)
    if n is None:
        n = math.isqrt(v.size)
    return v.reshape((n, n), order="F")


def apply(s, x):
    """Apply superoperator ``s`` to the square matrix ``x``."""
    x = np.asarray(x)
    n = x.shape[0]
    if s.shape != (n * n, n * n):
        raise DimensionMismatchError(f"superoperator {s.shape} cannot act on {x.shape}")
    return unvec(s @ vec(x), n)


def left_mult(x):
    x = as_matrix(x)
    return np.kron(np.eye(x.shape[0]), x)


def right_mult(x):
    x = as_matrix(x)
    return np.kron(x.T, np.eye(x.shape[0]))


def _state_eig(d, eps):
    d = hermitian(d)
    eig = hermitian_eig(d / np.trace(d).real)
    if eig.eigenvalues[0] <= eps:
        raise NotPositiveDefiniteError(
            f"minimum eigenvalue {eig.eigenvalues[0]:.3e} is not above {eps:.1e}"
        )
    return eig


def relative_modular(d1, d2, eps=EPS_PD):
    """Matrix of ``Delta_{D1/D2} = L_{D1} R_{D2^{-1}}``."""
    if np.shape(d1) != np.shape(d2):
        raise DimensionMismatchError(f"shapes {np.shape(d1)} and {np.shape(d2)} differ")
    e1 = _state_eig(d1, eps)
    e2 = _state_eig(d2, eps)
    return left_mult(e1.reconstruct()) @ right_mult(e2.reconstruct(1.0 / e2.eigenvalues))


def log_modular(d1, d2, eps=EPS_PD, method="eig"):
    """Logarithm of the relative modular operator.

    ``method="eig"`` diagonalizes the n^2 x n^2 matrix of ``Delta_{D1/D2}``
    directly; ``method="split"`` uses ``L_{log D1} - R_{log D2}``. The two
    routes are independent and agree to roundoff.
    """
    if method == "eig":
        return matrix_log_pd(relative_modular(d1, d2, eps), eps=0.0)
    if method == "split":
        if np.shape(d1) != np.shape(d2):
            raise DimensionMismatchError(f"shapes {np.shape(d1)} and {np.shape(d2)} differ")
        e1 = _state_eig(d1, eps)
        e2 = _state_eig(d2, eps)
        log1 = e1.reconstruct(np.log(e1.eigenvalues))
        log2 = e2.reconstruct(np.log(e2.eigenvalues))
        return left_mult(log1) - right_mult(log2)
    raise ValueError(f"unknown method {method!r}")


def relative_entropy(d1, d2, eps=EPS_PD):
    """Araki relative entropy in nats.

    Evaluated as ``-<D1^{1/2}, log(Delta_{D2/D1}) D1^{1/2}>`` with the
    modular logarithm taken on the full superoperator.
    """
    e1 = _state_eig(d1, eps)
    root = e1.reconstruct(np.sqrt(e1.eigenvalues))
    log_delta = log_modular(d2, d1, eps, method="eig")
    return -hs_inner(root, apply(log_delta, root)).real


def inner_via_modular(a, b, eps=EPS_PD):
    """Aitchison inner product from ``<log Delta_A, log Delta_B> / (2 n^2)``."""
    if np.shape(a) != np.shape(b):
        raise DimensionMismatchError(f"shapes {np.shape(a)} and {np.shape(b)} differ")
    n = np.shape(a)[0]
    la = log_modular(a, a, eps, method="eig")
    lb = log_modular(b, b, eps, method="eig")
    return hs_inner(la, lb).real / (2 * n * n)
