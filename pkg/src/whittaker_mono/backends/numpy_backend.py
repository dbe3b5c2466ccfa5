"""Pure-numpy kernel backend.

Scalar evaluation reuses the shared implementation uncompiled; the hot
real-axis path is vectorized over nodes, region by region, with the term
recursions running across whole node arrays.
"""
from __future__ import annotations

import numpy as np

from .scalar import EULER_GAMMA, _make_hyp2f1_scalar, _make_near_one, _series

NAME = "numpy"

hyp2f1_scalar = _make_hyp2f1_scalar(_series, _make_near_one(_series))


def _series_vec(A, B, C, w, rel_tol, max_terms):
    term = np.ones_like(w, dtype=np.complex128)
    acc = term.copy()
    for n in range(max_terms):
        term = term * ((A + n) * (B + n) / ((C + n) * (n + 1.0))) * w
        acc += term
        if np.all(np.abs(term) <= rel_tol * np.abs(acc) + 1e-300):
            # one confirming pass
            term = term * ((A + n + 1) * (B + n + 1) / ((C + n + 1) * (n + 2.0))) * w
            acc += term
            if np.all(np.abs(term) <= rel_tol * np.abs(acc) + 1e-300):
                return acc
    return acc


def _log_series_vec(A, B, m, om, lom, psiA0, psiB0, rel_tol, max_terms):
    """sum_n (A+m)_n (B+m)_n / (n! (n+m)!) om^n * (lom - psi(n+1)
    - psi(n+m+1) + psi(A+m+n) + psi(B+m+n)); the psi chain is scalar."""
    fact = 1.0
    for j in range(1, m + 1):
        fact *= j
    term = np.full_like(om, 1.0 / fact, dtype=np.complex128)
    pa, pb = psiA0, psiB0
    h1 = -EULER_GAMMA
    h2 = -EULER_GAMMA + sum(1.0 / j for j in range(1, m + 1))
    acc = np.zeros_like(om, dtype=np.complex128)
    for n in range(max_terms):
        contrib = term * (lom - h1 - h2 + pa + pb)
        acc += contrib
        if n > 0 and np.all(np.abs(contrib) <= rel_tol * (np.abs(acc) + 1e-300)):
            break
        pa += 1.0 / (A + m + n)
        pb += 1.0 / (B + m + n)
        h1 += 1.0 / (n + 1.0)
        h2 += 1.0 / (n + m + 1.0)
        term = term * ((A + m + n) * (B + m + n) / ((n + 1.0) * (n + m + 1.0))) * om
    return acc


def _finite_sum_vec(A, B, m, om):
    """sum_{n<m} (A)_n (B)_n / (n! (1-m)_n) om^n."""
    term = np.ones_like(om, dtype=np.complex128)
    acc = np.zeros_like(om, dtype=np.complex128)
    for n in range(m):
        acc += term
        if n < m - 1:
            term = term * ((A + n) * (B + n) / ((n + 1.0) * (1.0 - m + n))) * om
    return acc


def _near_one_vec(sub, A, B, C, om, rel_tol, max_terms):
    kind = int(sub[0].real)
    m0 = sub[1].real
    coef0, coefC, psiA0, psiB0 = sub[2], sub[3], sub[4], sub[5]
    if kind == 4:
        zz = 1.0 - om.astype(np.complex128)
        term = np.ones_like(zz)
        acc = term.copy()
        for n in range(int(m0)):
            term = term * ((A + n) * (B + n) / ((C + n) * (n + 1.0))) * zz
            acc += term
        return acc
    lom = np.log(om.astype(np.complex128))
    if kind == 0:
        s = C - A - B
        s1 = _series_vec(A, B, 1.0 - s, om.astype(np.complex128), rel_tol, max_terms)
        s2 = _series_vec(C - A, C - B, 1.0 + s, om.astype(np.complex128),
                         rel_tol, max_terms)
        return coef0 * s1 + coefC * np.exp(s * lom) * s2
    if kind == 3:
        pa, pb = psiA0, psiB0
        h1 = -EULER_GAMMA
        term = np.ones_like(om, dtype=np.complex128)
        acc = np.zeros_like(om, dtype=np.complex128)
        for n in range(max_terms):
            contrib = term * (2.0 * h1 - pa - pb - lom)
            acc += contrib
            if n > 0 and np.all(np.abs(contrib) <= rel_tol * (np.abs(acc) + 1e-300)):
                break
            pa += 1.0 / (A + n)
            pb += 1.0 / (B + n)
            h1 += 1.0 / (n + 1.0)
            term = term * ((A + n) * (B + n) / ((n + 1.0) * (n + 1.0))) * om
        return coef0 * acc
    m = int(m0)
    if kind == 1:
        fin = _finite_sum_vec(A, B, m, om)
        logsum = _log_series_vec(A, B, m, om, lom, psiA0, psiB0, rel_tol, max_terms)
        return coef0 * fin + coefC * np.exp(m0 * lom) * logsum
    # kind 2
    fin = _finite_sum_vec(A - m, B - m, m, om) * np.exp(-m0 * lom)
    if coefC == 0:
        return coef0 * fin
    logsum = _log_series_vec(A - m, B - m, m, om, lom, psiA0, psiB0,
                             rel_tol, max_terms)
    return coef0 * fin + coefC * logsum


def hyp2f1_real_many(z, out, pack, rel_tol, max_terms):
    """Vectorized 2F1 over an array of real z < 1; writes into out."""
    a, b, c = pack[0], pack[1], pack[2]
    z = np.asarray(z, dtype=np.float64)
    if pack[3].real == 1.0:
        nterms = int(pack[3].imag)
        term = np.ones_like(z, dtype=np.complex128)
        acc = term.copy()
        for n in range(nterms):
            term = term * ((a + n) * (b + n) / ((c + n) * (n + 1.0))) * z
            acc += term
        out[:] = acc
        return
    zmax1 = pack[16].real
    zmax2 = pack[17].real
    z_neg = zmax2 / (zmax2 - 1.0)  # w = z/(z-1) hits zmax2 here
    direct = (z >= -0.5) & (z <= zmax1)
    high = z > zmax1
    mid_neg = (z < -0.5) & (z >= z_neg)
    low_neg = z < z_neg
    if np.any(direct):
        out[direct] = _series_vec(a, b, c, z[direct].astype(np.complex128),
                                  rel_tol, max_terms)
    if np.any(high):
        om = (1.0 - z[high]).astype(np.complex128)
        out[high] = _near_one_vec(pack[4:10], a, b, c, om, rel_tol, max_terms)
    if np.any(mid_neg):
        zz = z[mid_neg]
        w = (zz / (zz - 1.0)).astype(np.complex128)
        pf = np.exp(-a * np.log(1.0 - zz).astype(np.complex128))
        out[mid_neg] = pf * _series_vec(a, c - b, c, w, rel_tol, max_terms)
    if np.any(low_neg):
        zz = z[low_neg]
        om = (1.0 / (1.0 - zz)).astype(np.complex128)
        pf = np.exp(-a * np.log(1.0 - zz).astype(np.complex128))
        out[low_neg] = pf * _near_one_vec(pack[10:16], a, c - b, c, om,
                                          rel_tol, max_terms)
