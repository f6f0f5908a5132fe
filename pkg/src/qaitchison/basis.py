"""Orthonormal basis of the state space and coordinates in it.

The basis states are the Gibbs states ``exp(H)/Tr exp(H)`` of n^2 - 1
traceless Hamiltonians that are orthonormal under ``Tr(X Y)/n``:

* ``A(k,l) = a (E_kl + E_lk)``
* ``B(k,l) = i a (E_kl - E_lk)``
* ``C(k) = alpha_k diag(1,...,1, -(k+1), 0,...,0, 1)`` for k <= n-2
* ``C(n-1) = a (E_11 - E_nn)``

with ``a = sqrt(n/2)`` and ``alpha_k = sqrt(n / (k^2 + 3k + 2))``.
Labels are ordered A-block, B-block, C-block, each lexicographic.

The states are always built from the Hamiltonians. The closed-form
normalizing constants sometimes quoted for ``C(k)`` and ``C(n-1)`` do not
equal the traces of their matrices; the true traces are
``(k+1) e^alpha + e^{-(k+1) alpha} + n - k - 2`` and ``n - 2 + 2 cosh a``.
"""

from functools import lru_cache
from typing import NamedTuple, Optional

import numpy as np

from .errors import DimensionMismatchError, InvalidLabelError
from .linalg import EPS_PD
from .states import clr, clr_inverse


class BasisLabel(NamedTuple):
    kind: str
    k: int
    l: Optional[int] = None

    def __str__(self):
        if self.l is None:
            return f"{self.kind}_{self.k}"
        return f"{self.kind}_{self.k}_{self.l}"


def labels(n):
    if n < 2:
        raise ValueError("n must be at least 2")
    pairs = [(k, l) for k in range(1, n + 1) for l in range(k + 1, n + 1)]
    out = [BasisLabel("A", k, l) for k, l in pairs]
    out += [BasisLabel("B", k, l) for k, l in pairs]
    out += [BasisLabel("C", k) for k in range(1, n)]
    return out


def _check_label(label, n):
    kind, k, l = label
    if kind in ("A", "B"):
        ok = l is not None and 1 <= k < l <= n
    elif kind == "C":
        ok = l is None and 1 <= k <= n - 1
    else:
        ok = False
    if not ok:
        raise InvalidLabelError(f"{label!r} is not a basis label for n={n}")


def basis_hamiltonian(label, n):
    label = BasisLabel(*label)
    _check_label(label, n)
    a = np.sqrt(n / 2)
    h = np.zeros((n, n), dtype=np.complex128)
    kind, k, l = label
    if kind == "A":
        h[k - 1, l - 1] = h[l - 1, k - 1] = a
    elif kind == "B":
        h[k - 1, l - 1] = 1j * a
        h[l - 1, k - 1] = -1j * a
    elif k == n - 1:
        h[0, 0] = a
        h[n - 1, n - 1] = -a
    else:
        alpha = np.sqrt(n / (k * k + 3 * k + 2))
        diag = np.zeros(n)
        diag[:k] = 1.0
        diag[k] = -(k + 1)
        diag[n - 1] = 1.0
        h[np.diag_indices(n)] = alpha * diag
    return h


@lru_cache(maxsize=None)
def _hamiltonian_stack(n):
    stack = np.array([basis_hamiltonian(lab, n) for lab in labels(n)])
    stack.flags.writeable = False
    return stack


def basis_state(label, n):
    return clr_inverse(basis_hamiltonian(label, n))


def full_basis(n):
    return [clr_inverse(h) for h in _hamiltonian_stack(n)]


def coordinates(a, eps=EPS_PD):
    """Coordinates of ``a`` in the ordered basis, ``Tr(H_i clr(a)) / n``."""
    x = clr(a, eps)
    n = x.shape[0]
    # H_i Hermitian, so Tr(H_i X) = sum(conj(H_i) * X)
    return np.einsum("kij,ij->k", _hamiltonian_stack(n).conj(), x).real / n


def synthesize(c, n=None):
    c = np.asarray(c, dtype=float)
    if n is None:
        n = int(round(np.sqrt(c.size + 1)))
    if c.shape != (n * n - 1,):
        raise DimensionMismatchError(f"expected {n * n - 1} coordinates for n={n}, got {c.shape}")
    if not np.all(np.isfinite(c)):
        raise ValueError("coordinates must be finite")
    return clr_inverse(np.tensordot(c, _hamiltonian_stack(n), axes=1))
