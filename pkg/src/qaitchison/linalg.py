"""Dense Hermitian linear algebra used by every other module.

All matrix functions go through :func:`hermitian_eig`, which runs the
cyclic Jacobi kernel from :mod:`qaitchison._kernels`.
"""

from typing import NamedTuple

import numpy as np

from ._kernels import jacobi_eigh
from .errors import (
    ConvergenceError,
    DimensionMismatchError,
    ExpRangeError,
    NotHermitianError,
    NotPositiveDefiniteError,
)

EPS_PD = 1e-12
HERMITIAN_TOL = 1e-10
JACOBI_TOL = 1e-13
MAX_SWEEPS = 100
EXP_MAX = 700.0


class EigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self, values=None):
        """Return ``U diag(values) U^*``; defaults to the eigenvalues."""
        w = self.eigenvalues if values is None else values
        u = self.eigenvectors
        return hermitize((u * w) @ u.conj().T)


def hermitize(m):
    m = np.asarray(m)
    return (m + m.conj().T) / 2


def as_matrix(m):
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionMismatchError(f"expected a matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def hermitian(m, tol=HERMITIAN_TOL):
    """Validate and symmetrize a Hermitian matrix.

    The residual ``max|M - M^*|`` is compared against ``tol`` scaled by
    ``max(1, max|M|)``; the returned matrix is exactly ``(M + M^*)/2``.
    """
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
    resid = hermiticity_residual(m)
    scale = max(1.0, float(np.abs(m).max(initial=0.0)))
    if resid > tol * scale:
        raise NotHermitianError(f"hermiticity residual {resid:.3e} exceeds {tol:.1e}")
    return hermitize(m)


def hermiticity_residual(m):
    m = np.asarray(m)
    return float(np.abs(m - m.conj().T).max(initial=0.0))


def hermitian_eig(m):
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Raises
    ------
    ConvergenceError
        If the Jacobi iteration has not converged after ``MAX_SWEEPS``.
    """
    m = hermitian(m)
    w, v, sweeps = jacobi_eigh(m, JACOBI_TOL, MAX_SWEEPS)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps")
    order = np.argsort(w, kind="stable")
    return EigenDecomposition(w[order], v[:, order])


def matrix_log_pd(m, eps=EPS_PD):
    """Matrix logarithm of a positive definite Hermitian matrix."""
    eig = hermitian_eig(m)
    if eig.eigenvalues[0] <= eps:
        raise NotPositiveDefiniteError(
            f"minimum eigenvalue {eig.eigenvalues[0]:.3e} is not above {eps:.1e}"
        )
    return eig.reconstruct(np.log(eig.eigenvalues))


def matrix_exp_h(m):
    """Matrix exponential of a Hermitian matrix.

    Eigenvalues above 700 are reported as :class:`ExpRangeError` instead
    of being clamped.
    """
    eig = hermitian_eig(m)
    if eig.eigenvalues[-1] > EXP_MAX:
        raise ExpRangeError(f"eigenvalue {eig.eigenvalues[-1]:.3e} overflows exp")
    return eig.reconstruct(np.exp(eig.eigenvalues))


def kron(a, b):
    return np.kron(as_matrix(a), as_matrix(b))


def hs_inner(a, b):
    """Hilbert-Schmidt inner product ``Tr(A^* B)``."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shapes {a.shape} and {b.shape} differ")
    return complex(np.vdot(a, b))


def random_density(dim, seed):
    """Seeded full-rank density matrix.

    ``G G^*`` from a complex Gaussian ``G``, normalized, mixed with
    ``1e-3 I`` and renormalized, so the smallest eigenvalue stays above
    ``1e-3 / (1 + 1e-3 dim)``.
    """
    if dim < 2:
        raise ValueError("dim must be at least 2")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    p = g @ g.conj().T
    p = p / np.trace(p).real + 1e-3 * np.eye(dim)
    return hermitize(p / np.trace(p).real)


def random_unitary(dim, seed):
    """Seeded Haar unitary via QR with positive-diagonal normalization."""
    if dim < 2:
        raise ValueError("dim must be at least 2")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_hermitian(dim, seed, scale=1.0):
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return hermitize(scale * g / np.sqrt(2 * dim))
