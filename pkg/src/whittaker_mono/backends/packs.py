"""Per-parameter precomputation for the 2F1 kernels.

Connection coefficients and digamma seeds depend only on (a, b, c), so
they are computed once here (in plain Python, full complex gamma) and
handed to the kernels as a flat complex array.
"""
from __future__ import annotations

import numpy as np

from ..core import (
    complex_gamma,
    digamma,
    is_nonpositive_integer,
    reciprocal_gamma,
)
from ..errors import DomainError

#: parameters closer than this to a degenerate integer case are snapped
#: onto the logarithmic connection series.
DEGENERATE_SNAP = 1e-6

#: parameters within this distance of an integer (but outside the snap)
#: make the generic z -> 1 connection cancel badly; the kernels then keep
#: the direct/Pfaff series out to SERIES_ZMAX_DEGENERATE instead.
NEAR_DEGENERATE = 0.05
SERIES_ZMAX = 0.75
SERIES_ZMAX_DEGENERATE = 0.99

PACK_LEN = 18


def _near_one_pack(A: complex, B: complex, C: complex) -> list[complex]:
    """[kind, m0, coef0, coefC, psiA0, psiB0] for the z -> 1 connection."""
    terms = []
    if is_nonpositive_integer(A):
        terms.append(int(-round(A.real)))
    if is_nonpositive_integer(B):
        terms.append(int(-round(B.real)))
    if terms:
        # polynomial case: the kernel sums the terminating series in
        # the original argument 1 - om instead of a connection series
        return [4, min(terms), 0j, 0j, 0j, 0j]
    s = C - A - B
    n0 = round(s.real)
    if abs(s - n0) < DEGENERATE_SNAP:
        gc = complex_gamma(C)
        if n0 == 0:
            coef0 = gc * reciprocal_gamma(A) * reciprocal_gamma(B)
            return [3, 0, coef0, 0j, digamma(A), digamma(B)]
        if n0 > 0:
            m0 = n0
            coef0 = (complex_gamma(m0) * gc
                     * reciprocal_gamma(A + m0) * reciprocal_gamma(B + m0))
            coefC = -((-1.0) ** m0) * gc * reciprocal_gamma(A) * reciprocal_gamma(B)
            return [1, m0, coef0, coefC, digamma(A + m0), digamma(B + m0)]
        m0 = -n0
        coef0 = complex_gamma(m0) * gc * reciprocal_gamma(A) * reciprocal_gamma(B)
        coefC = (-((-1.0) ** m0) * gc
                 * reciprocal_gamma(A - m0) * reciprocal_gamma(B - m0))
        if coefC == 0:
            return [2, m0, coef0, 0j, 0j, 0j]
        return [2, m0, coef0, coefC, digamma(A), digamma(B)]
    gc = complex_gamma(C)
    coef0 = (gc * complex_gamma(s)
             * reciprocal_gamma(C - A) * reciprocal_gamma(C - B))
    coefC = gc * complex_gamma(-s) * reciprocal_gamma(A) * reciprocal_gamma(B)
    return [0, 0, coef0, coefC, 0j, 0j]


def _series_zmax(sub, s: complex) -> float:
    """Series-region boundary for one connection subpack: pushed out when
    the generic connection is near-degenerate (Gamma(+-s) nearly polar)."""
    if int(sub[0].real) != 0:
        return SERIES_ZMAX  # exact degenerate kinds are log-series, stable
    d = abs(s - round(s.real))
    return SERIES_ZMAX_DEGENERATE if d < NEAR_DEGENERATE else SERIES_ZMAX


def build_param_pack(a: complex, b: complex, c: complex) -> np.ndarray:
    """Flat complex128[18] pack consumed by the 2F1 kernels."""
    a, b, c = complex(a), complex(b), complex(c)
    if is_nonpositive_integer(c):
        raise DomainError(f"2F1 undefined for c = {c!r} (nonpositive integer)")
    pack = np.zeros(PACK_LEN, dtype=np.complex128)
    pack[0], pack[1], pack[2] = a, b, c
    pack[16] = pack[17] = SERIES_ZMAX
    terms = []
    if is_nonpositive_integer(a):
        terms.append(int(-round(a.real)))
    if is_nonpositive_integer(b):
        terms.append(int(-round(b.real)))
    if terms:
        pack[3] = complex(1.0, min(terms))
        return pack
    pack[4:10] = _near_one_pack(a, b, c)
    pack[10:16] = _near_one_pack(a, c - b, c)
    pack[16] = _series_zmax(pack[4:10], c - a - b)
    pack[17] = _series_zmax(pack[10:16], b - a)
    return pack
