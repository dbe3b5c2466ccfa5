"""Gauss hypergeometric function 2F1 for the parameter shapes used by
the product-representation machinery, plus the largest-negative-zero
search and the Legendre-function cross-check identity.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .backends import build_param_pack, get_backend
from .core import TolerancePolicy, as_complex, is_nonpositive_integer
from .errors import BranchError, DomainError, NonConvergence

__all__ = [
    "Hyp2F1Params",
    "NegZeroResult",
    "hyp2f1_eval",
    "hyp2f1_eval_many",
    "hyp2f1_general_arg",
    "find_largest_negative_zero",
    "legendre_identity_check",
]

_DEFAULT_TOL = TolerancePolicy()

#: bisection width for the zero search
ZERO_XTOL = 1e-12
#: geometric scan parameters: z_j = -SCAN_START * SCAN_RATIO**j
SCAN_START = 1e-3
SCAN_RATIO = 1.25
DEFAULT_SEARCH_FLOOR = -1e6


@dataclass(frozen=True)
class Hyp2F1Params:
    """Parameters (a, b; c) with an optional conjugate-pair marker.

    conjugate_pair asserts b = conj(a) and c real, which makes the
    function real-valued on the real axis.
    """

    a: complex
    b: complex
    c: complex
    conjugate_pair: bool = False

    def __post_init__(self):
        a = as_complex(self.a, "a")
        b = as_complex(self.b, "b")
        c = as_complex(self.c, "c")
        if is_nonpositive_integer(c):
            raise DomainError(f"c = {c!r} is a nonpositive integer")
        if self.conjugate_pair:
            if abs(b - a.conjugate()) != 0.0:
                raise DomainError("conjugate_pair requires b = conj(a)")
            if c.imag != 0.0:
                raise DomainError("conjugate_pair requires real c")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @classmethod
    def from_whittaker(cls, k: complex, m: float) -> "Hyp2F1Params":
        """The triple (1/2+m-k, 1/2+m-conj(k); 1-2 Re k)."""
        k = as_complex(k, "k")
        a = 0.5 + m - k
        return cls(a, a.conjugate(), complex(1.0 - 2.0 * k.real), True)

    @classmethod
    def from_bessel(cls, nu: float) -> "Hyp2F1Params":
        """The triple (nu+1/2, nu+1/2; 1)."""
        return cls(complex(nu + 0.5), complex(nu + 0.5), 1.0 + 0j, True)

    def pack(self) -> np.ndarray:
        return build_param_pack(self.a, self.b, self.c)


@dataclass(frozen=True)
class NegZeroResult:
    """Outcome of the largest-negative-zero search."""

    kind: str  # "Found" | "NoneInSearchRange" | "AnalyticNegInfinity"
    p: Optional[float] = None
    bracket: Optional[Tuple[float, float]] = None
    search_floor: Optional[float] = None

    def __post_init__(self):
        if self.kind not in ("Found", "NoneInSearchRange", "AnalyticNegInfinity"):
            raise DomainError(f"unknown NegZeroResult kind {self.kind!r}")
        if self.kind == "Found" and (self.p is None or self.p >= 0):
            raise DomainError("Found requires p < 0")


def _check_finite(value: complex, where: str) -> complex:
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NonConvergence(f"2F1 evaluation failed: {where}")
    return value


def hyp2f1_eval(params: Hyp2F1Params, z: float,
                tol: TolerancePolicy = _DEFAULT_TOL) -> complex:
    """2F1 at real argument z < 1; real-valued under conjugate_pair."""
    if not z < 1.0:
        raise DomainError(f"hyp2f1_eval requires z < 1, got {z}")
    backend = get_backend()
    val = backend.hyp2f1_scalar(complex(z), params.pack(),
                                min(tol.rel_tol, 1e-14), tol.max_series_terms)
    _check_finite(val, f"z = {z}")
    if params.conjugate_pair:
        if abs(val.imag) > tol.abs_tol + tol.rel_tol * abs(val):
            raise NonConvergence(
                f"conjugate-pair value not real: {val!r} at z = {z}")
        return complex(val.real)
    return val


def hyp2f1_eval_many(params: Hyp2F1Params, z: np.ndarray,
                     tol: TolerancePolicy = _DEFAULT_TOL) -> np.ndarray:
    """Vectorized real-axis evaluation (the quadrature hot path)."""
    z = np.asarray(z, dtype=np.float64)
    if np.any(z >= 1.0):
        raise DomainError("hyp2f1_eval_many requires z < 1 everywhere")
    out = np.empty(z.shape, dtype=np.complex128)
    get_backend().hyp2f1_real_many(z, out, params.pack(),
                                   min(tol.rel_tol, 1e-14),
                                   tol.max_series_terms)
    if not np.all(np.isfinite(out)):
        raise NonConvergence("2F1 evaluation failed on node array")
    return out


def hyp2f1_general_arg(params: Hyp2F1Params, z,
                       tol: TolerancePolicy = _DEFAULT_TOL) -> complex:
    """Principal-branch 2F1 on the cut plane C \\ [1, inf)."""
    z = as_complex(z, "z")
    terminating = (is_nonpositive_integer(params.a)
                   or is_nonpositive_integer(params.b))
    if not terminating and z.imag == 0.0 and z.real >= 1.0:
        raise BranchError(f"z = {z!r} lies on the branch cut [1, inf)")
    val = get_backend().hyp2f1_scalar(z, params.pack(),
                                      min(tol.rel_tol, 1e-14),
                                      tol.max_series_terms)
    return _check_finite(val, f"z = {z!r} (no convergent transformation)")


def _real_f(params: Hyp2F1Params, tol: TolerancePolicy):
    pack = params.pack()
    backend = get_backend()
    rel = min(tol.rel_tol, 1e-14)

    def f(z: float) -> float:
        v = backend.hyp2f1_scalar(complex(z), pack, rel, tol.max_series_terms)
        return _check_finite(v, f"z = {z}").real

    return f


def find_largest_negative_zero(params: Hyp2F1Params,
                               search_floor: float = DEFAULT_SEARCH_FLOOR,
                               tol: TolerancePolicy = _DEFAULT_TOL,
                               analytic_neg_infinity: bool = False) -> NegZeroResult:
    """Locate the negative zero of F nearest 0, by geometric sign scan
    plus bisection.

    "NoneInSearchRange" states only that F > 0 on the scanned grid above
    search_floor; it is never promoted to p = -inf. The analytic p = -inf
    case must be asserted by the caller (see monotone.sector_certificate).
    """
    if analytic_neg_infinity:
        return NegZeroResult("AnalyticNegInfinity")
    if search_floor >= 0:
        raise DomainError("search_floor must be < 0")
    if not params.conjugate_pair:
        raise DomainError("zero search requires conjugate_pair parameters")
    f = _real_f(params, tol)
    z_prev = 0.0
    f_prev = 1.0  # F(0) = 1
    z = -SCAN_START
    while z >= search_floor:
        fz = f(z)
        if fz <= 0.0:
            lo, hi = z, z_prev
            flo, fhi = fz, f_prev
            while hi - lo > ZERO_XTOL:
                mid = 0.5 * (lo + hi)
                fm = f(mid)
                if fm <= 0.0:
                    lo, flo = mid, fm
                else:
                    hi, fhi = mid, fm
            p = 0.5 * (lo + hi)
            return NegZeroResult("Found", p=p, bracket=(lo, hi))
        z_prev, f_prev = z, fz
        z *= SCAN_RATIO
    return NegZeroResult("NoneInSearchRange", search_floor=search_floor)


def legendre_identity_check(a, z: float,
                            tol: TolerancePolicy = _DEFAULT_TOL) -> float:
    """|2F1(a,a;1;1-z) - z^(-a) P_{-a}(2/z - 1)| for z in (0, 1].

    The Legendre function is evaluated through the independent triple
    2F1(a, 1-a; 1; 1 - 1/z), so the two sides share no parameters.
    """
    if not 0.0 < z <= 1.0:
        raise DomainError(f"legendre identity check requires z in (0, 1], got {z}")
    a = as_complex(a, "a")
    lhs_params = Hyp2F1Params(a, a, 1.0 + 0j)
    rhs_params = Hyp2F1Params(a, 1.0 - a, 1.0 + 0j)
    lhs = hyp2f1_eval(lhs_params, 1.0 - z, tol)
    legendre = hyp2f1_eval(rhs_params, 1.0 - 1.0 / z, tol)
    rhs = cmath.exp(-a * math.log(z)) * legendre
    return abs(lhs - rhs)
