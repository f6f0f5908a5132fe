"""Cyclic complex Jacobi eigensolver for Hermitian matrices.

Two implementations of the same sweep are kept side by side: a scalar-loop
kernel compiled with numba and a numpy version that updates whole rows and
columns per rotation. ``jacobi_eigh`` dispatches on ``QAITCHISON_NUMBA``.

Each rotation is a phase change ``diag(1, conj(e))`` that makes the pivot
real, followed by the classical real Jacobi rotation. Once the
off-diagonal norm drops below ``tol * |A|_F`` one more sweep is run: the
residue left by the global test is small next to |A| but not next to the
smallest eigenvalues, and quadratic convergence removes it in one pass.
The returned ``sweeps`` is ``-1`` when the sweep cap is hit first.
"""

import math

import numpy as np

from ._accel import USE_NUMBA, njit


@njit(cache=True)
def _jacobi_numba(a, tol, max_sweeps):
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)

    fro = 0.0
    for i in range(n):
        for j in range(n):
            fro += a[i, j].real ** 2 + a[i, j].imag ** 2
    fro = math.sqrt(fro)
    threshold = tol * fro
    polished = False

    for sweep in range(max_sweeps + 2):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += a[i, j].real ** 2 + a[i, j].imag ** 2
        if polished or off == 0.0:
            w = np.empty(n)
            for i in range(n):
                w[i] = a[i, i].real
            return w, v, sweep
        if math.sqrt(off) <= threshold:
            polished = True
        elif sweep >= max_sweeps:
            break

        for p in range(n - 1):
            for q in range(p + 1, n):
                b = a[p, q]
                absb = abs(b)
                if absb == 0.0:
                    continue
                e = b / absb
                ec = e.conjugate()
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * absb)
                if theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(1.0 + theta * theta))
                else:
                    t = -1.0 / (-theta + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c

                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * ec * akq
                    a[k, q] = s * akp + c * ec * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * e * aqk
                    a[q, k] = s * apk + c * e * aqk
                a[p, p] = app - t * absb
                a[q, q] = aqq + t * absb
                a[p, q] = 0.0
                a[q, p] = 0.0

                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * ec * vkq
                    v[k, q] = s * vkp + c * ec * vkq

    w = np.empty(n)
    for i in range(n):
        w[i] = a[i, i].real
    return w, v, -1


def _jacobi_numpy(a, tol, max_sweeps):
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    threshold = tol * np.linalg.norm(a)
    offdiag = ~np.eye(n, dtype=bool)
    polished = False

    for sweep in range(max_sweeps + 2):
        off = np.linalg.norm(a[offdiag])
        if polished or off == 0.0:
            return a.diagonal().real.copy(), v, sweep
        if off <= threshold:
            polished = True
        elif sweep >= max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = a[p, q]
                absb = abs(b)
                if absb == 0.0:
                    continue
                e = b / absb
                ec = e.conjugate()
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * absb)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c

                colp = a[:, p].copy()
                colq = a[:, q]
                a[:, p] = c * colp - s * ec * colq
                a[:, q] = s * colp + c * ec * colq
                rowp = a[p, :].copy()
                rowq = a[q, :]
                a[p, :] = c * rowp - s * e * rowq
                a[q, :] = s * rowp + c * e * rowq
                a[p, p] = app - t * absb
                a[q, q] = aqq + t * absb
                a[p, q] = 0.0
                a[q, p] = 0.0

                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * ec * vq
                v[:, q] = s * vp + c * ec * vq

    return a.diagonal().real.copy(), v, -1


def jacobi_eigh_numba(m, tol=1e-13, max_sweeps=100):
    a = np.array(m, dtype=np.complex128, order="C", copy=True)
    return _jacobi_numba(a, float(tol), int(max_sweeps))


def jacobi_eigh_numpy(m, tol=1e-13, max_sweeps=100):
    a = np.array(m, dtype=np.complex128, order="C", copy=True)
    return _jacobi_numpy(a, float(tol), int(max_sweeps))


jacobi_eigh = jacobi_eigh_numba if USE_NUMBA else jacobi_eigh_numpy
