"""Dense nonsymmetric eigenvalues: balance, Hessenberg reduction, Francis QR.

Eigenvalues only; no Schur vectors are accumulated, so each QR sweep touches
only the active diagonal block.  Inner loops over a row or column are numpy
slice operations.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NumericalFailure

_RADIX = 2.0
_EPS = np.finfo(float).eps


def balance(a: np.ndarray) -> np.ndarray:
    """Parlett-Reinsch diagonal scaling by powers of two (in place, returns ``a``)."""
    n = a.shape[0]
    sqrdx = _RADIX * _RADIX
    done = False
    while not done:
        done = True
        for i in range(n):
            c = float(np.abs(a[:, i]).sum() - abs(a[i, i]))
            r = float(np.abs(a[i, :]).sum() - abs(a[i, i]))
            if c == 0.0 or r == 0.0:
                continue
            g = r / _RADIX
            f = 1.0
            s = c + r
            while c < g:
                f *= _RADIX
                c *= sqrdx
            g = r * _RADIX
            while c > g:
                f /= _RADIX
                c /= sqrdx
            if (c + r) / f < 0.95 * s:
                done = False
                a[i, :] /= f
                a[:, i] *= f
    return a


def hessenberg(a: np.ndarray) -> np.ndarray:
    """Householder reduction to upper Hessenberg form (in place, returns ``a``)."""
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1 :, k]
        norm = float(np.linalg.norm(x))
        if norm == 0.0:
            continue
        alpha = -math.copysign(norm, x[0])
        v = x.copy()
        v[0] -= alpha
        vnorm = float(np.linalg.norm(v))
        if vnorm == 0.0:
            continue
        v /= vnorm
        a[k + 1 :, k:] -= 2.0 * np.outer(v, v @ a[k + 1 :, k:])
        a[:, k + 1 :] -= 2.0 * np.outer(a[:, k + 1 :] @ v, v)
        a[k + 2 :, k] = 0.0
    return a


def hqr(a: np.ndarray, max_reflectors: int | None = None) -> np.ndarray:
    """Eigenvalues of an upper Hessenberg matrix by Francis double-shift QR.

    Destroys ``a``.  Exceptional shifts are taken every 10 iterations on the
    same eigenvalue; ``NumericalFailure`` is raised once the total number of
    3x3 reflector applications exceeds ``max_reflectors`` (default ``30 n^2``).
    """
    n = a.shape[0]
    w = np.zeros(n, dtype=complex)
    if n == 0:
        return w
    budget = 30 * n * n if max_reflectors is None else max_reflectors
    spent = 0
    anorm = float(np.abs(np.triu(a, -1)).sum())
    nn = n - 1
    t = 0.0
    x = y = ww = 0.0
    while nn >= 0:
        its = 0
        while True:
            l = nn
            while l > 0:
                s = abs(a[l - 1, l - 1]) + abs(a[l, l])
                if s == 0.0:
                    s = anorm
                if abs(a[l, l - 1]) <= _EPS * s:
                    a[l, l - 1] = 0.0
                    break
                l -= 1
            x = a[nn, nn]
            if l == nn:
                w[nn] = x + t
                nn -= 1
            else:
                y = a[nn - 1, nn - 1]
                ww = a[nn, nn - 1] * a[nn - 1, nn]
                if l == nn - 1:
                    p = 0.5 * (y - x)
                    q = p * p + ww
                    z = math.sqrt(abs(q))
                    x += t
                    if q >= 0.0:
                        z = p + math.copysign(z, p)
                        w[nn - 1] = w[nn] = x + z
                        if z != 0.0:
                            w[nn] = x - ww / z
                    else:
                        w[nn] = complex(x + p, -z)
                        w[nn - 1] = complex(x + p, z)
                    nn -= 2
                else:
                    if its and its % 10 == 0:
                        t += x
                        idx = np.arange(nn + 1)
                        a[idx, idx] -= x
                        s = abs(a[nn, nn - 1]) + abs(a[nn - 1, nn - 2])
                        y = x = 0.75 * s
                        ww = -0.4375 * s * s
                    its += 1
                    m = nn - 2
                    while m >= l:
                        z = a[m, m]
                        r = x - z
                        s = y - z
                        p = (r * s - ww) / a[m + 1, m] + a[m, m + 1]
                        q = a[m + 1, m + 1] - z - r - s
                        r = a[m + 2, m + 1]
                        s = abs(p) + abs(q) + abs(r)
                        p /= s
                        q /= s
                        r /= s
                        if m == l:
                            break
                        u = abs(a[m, m - 1]) * (abs(q) + abs(r))
                        v = abs(p) * (abs(a[m - 1, m - 1]) + abs(z) + abs(a[m + 1, m + 1]))
                        if u <= _EPS * v:
                            break
                        m -= 1
                    for i in range(m, nn - 1):
                        a[i + 2, i] = 0.0
                        if i != m:
                            a[i + 2, i - 1] = 0.0
                    for k in range(m, nn):
                        if k != m:
                            p = a[k, k - 1]
                            q = a[k + 1, k - 1]
                            r = a[k + 2, k - 1] if k + 1 != nn else 0.0
                            x = abs(p) + abs(q) + abs(r)
                            if x != 0.0:
                                p /= x
                                q /= x
                                r /= x
                        s = math.copysign(math.sqrt(p * p + q * q + r * r), p)
                        if s == 0.0:
                            continue
                        spent += 1
                        if k == m:
                            if l != m:
                                a[k, k - 1] = -a[k, k - 1]
                        else:
                            a[k, k - 1] = -s * x
                        p += s
                        x = p / s
                        y = q / s
                        z = r / s
                        q /= p
                        r /= p
                        rows = a[k : k + 3, k : nn + 1]
                        pv = rows[0] + q * rows[1]
                        if k + 1 != nn:
                            pv = pv + r * rows[2]
                            rows[2] -= pv * z
                        rows[1] -= pv * y
                        rows[0] -= pv * x
                        mmin = min(nn, k + 3)
                        cols = a[l : mmin + 1, k : k + 3]
                        pv = x * cols[:, 0] + y * cols[:, 1]
                        if k + 1 != nn:
                            pv = pv + z * cols[:, 2]
                            cols[:, 2] -= pv * r
                        cols[:, 1] -= pv * q
                        cols[:, 0] -= pv
                    if spent > budget:
                        raise NumericalFailure(
                            "Francis QR did not converge",
                            order=n,
                            unconverged=nn + 1,
                            iterations_on_current=its,
                            reflectors=spent,
                            budget=budget,
                        )
            if l + 1 >= nn:
                break
    return w


def eigvals(matrix, max_reflectors: int | None = None) -> np.ndarray:
    """All eigenvalues of a real square matrix."""
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"square matrix required, got shape {a.shape}")
    if a.shape[0] == 1:
        return np.array([complex(a[0, 0])])
    balance(a)
    hessenberg(a)
    return hqr(a, max_reflectors)
