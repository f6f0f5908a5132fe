"""Reference computations that do not go through the package's eigensolver.

LAPACK (numpy.linalg.eigh) and scipy's Pade/Schur based expm/logm stand in
for the Jacobi-based matrix functions; closed-form basis states are written
out entry by entry.
"""

import math

import numpy as np
import scipy.linalg

TANH1 = math.tanh(1.0)

# qubit orthonormal basis written out in closed form
D1 = 0.5 * np.array([[1, TANH1], [TANH1, 1]], dtype=complex)
D2 = 0.5 * np.array([[1, 1j * TANH1], [-1j * TANH1, 1]], dtype=complex)
D3 = np.diag([math.e, 1 / math.e]).astype(complex) / (math.e + 1 / math.e)


def logm(a):
    return scipy.linalg.logm(np.asarray(a, dtype=complex))


def expm(a):
    return scipy.linalg.expm(np.asarray(a, dtype=complex))


def eigvalsh(a):
    return np.linalg.eigvalsh(a)


def aitchison_inner(a, b):
    la, lb = logm(a), logm(b)
    n = la.shape[0]
    return (np.trace(la @ lb) / n - np.trace(la) * np.trace(lb) / n**2).real


def softmax_state(x):
    e = expm(x)
    return e / np.trace(e).real


def relative_entropy_trace_form(d1, d2):
    return np.trace(d1 @ (logm(d1) - logm(d2))).real


def kl(p, q):
    return sum(pi * math.log(pi / qi) for pi, qi in zip(p, q))


def closed_form_basis_state(kind, k, l, n):
    """Gibbs states of the basis Hamiltonians written out in closed form.

    Normalizers are the actual traces of the displayed matrices.
    """
    a = math.sqrt(n / 2)
    eye = np.eye(n, dtype=complex)

    def unit(i, j):
        e = np.zeros((n, n), dtype=complex)
        e[i - 1, j - 1] = 1
        return e

    if kind == "A":
        m = eye + (math.cosh(a) - 1) * (unit(k, k) + unit(l, l)) + math.sinh(a) * (unit(k, l) + unit(l, k))
        return m / (n - 2 + 2 * math.cosh(a))
    if kind == "B":
        m = eye + (math.cosh(a) - 1) * (unit(k, k) + unit(l, l)) + 1j * math.sinh(a) * (unit(k, l) - unit(l, k))
        return m / (n - 2 + 2 * math.cosh(a))
    if k == n - 1:
        m = eye + (math.exp(a) - 1) * unit(1, 1) + (math.exp(-a) - 1) * unit(n, n)
        return m / (n - 2 + 2 * math.cosh(a))
    alpha = math.sqrt(n / (k * k + 3 * k + 2))
    diag = [math.exp(alpha)] * k + [math.exp(-(k + 1) * alpha)] + [1.0] * (n - k - 2) + [math.exp(alpha)]
    return np.diag(diag).astype(complex) / ((k + 1) * math.exp(alpha) + math.exp(-(k + 1) * alpha) + n - k - 2)


def random_bloch(rng, rmax=0.99):
    """Uniform direction, radius uniform in [0, rmax)."""
    v = rng.standard_normal(3)
    return v / np.linalg.norm(v) * rng.uniform(0, rmax)


def random_simplex(rng, n):
    p = rng.uniform(0.02, 1.0, size=n)
    return p / p.sum()


def max_abs(x):
    return float(np.abs(np.asarray(x)).max(initial=0.0))
