"""Evaluation of W_{k,m}(z) and K_nu(z) for complex argument.

This is the oracle side of every identity test: values here are computed
by mpmath's multiprecision confluent-hypergeometric machinery, a route
entirely independent of the product-representation integrals in
`erdelyi` (which never feed back into this module).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath

from .core import SectorPoint, TolerancePolicy, as_complex
from .errors import DomainError, NonConvergence

__all__ = [
    "WhittakerParams",
    "BesselParams",
    "whittaker_w",
    "bessel_k",
    "whittaker_modulus_sq",
]

_DEFAULT_TOL = TolerancePolicy()


@dataclass(frozen=True)
class WhittakerParams:
    """Indices (k, m) of W_{k,m}; m real.

    Re k < 1/2 is required by the bound/monotonicity theorems and is
    checked at those call sites, not here.
    """

    k: complex
    m: float

    def __post_init__(self):
        object.__setattr__(self, "k", as_complex(self.k, "k"))
        m = float(self.m)
        if not math.isfinite(m):
            raise DomainError("m must be finite")
        object.__setattr__(self, "m", m)


@dataclass(frozen=True)
class BesselParams:
    """Order nu of the modified Bessel function K_nu."""

    nu: float

    def __post_init__(self):
        nu = float(self.nu)
        if not math.isfinite(nu):
            raise DomainError("nu must be finite")
        object.__setattr__(self, "nu", nu)


#: |Im k| beyond this is outside the supported accuracy envelope
IM_K_ENVELOPE = 20.0


def _dps_for(tol: TolerancePolicy) -> int:
    return max(20, int(-math.log10(tol.rel_tol)) + 10)


def _effective_m(params: WhittakerParams) -> float:
    """Reflect m -> -m (W is even in m) so that 1/2 + m - Re k > 0."""
    k, m = params.k, params.m
    if 0.5 + m - k.real > 0:
        return m
    if 0.5 - m - k.real > 0:
        return -m
    raise DomainError(
        f"1/2 +/- m - Re k <= 0 for k={k!r}, m={m!r}: outside supported regime")


def whittaker_w(params: WhittakerParams, z: SectorPoint,
                tol: TolerancePolicy = _DEFAULT_TOL) -> complex:
    """W_{k,m}(z) on |arg z| < pi."""
    m = _effective_m(params)
    k = params.k
    if abs(k.imag) > IM_K_ENVELOPE:
        raise DomainError(
            f"|Im k| = {abs(k.imag)} exceeds supported envelope {IM_K_ENVELOPE}")
    with mpmath.workdps(_dps_for(tol)):
        try:
            val = mpmath.whitw(k, m, z.value)
        except (mpmath.libmp.NoConvergence, ValueError) as exc:
            raise NonConvergence(f"whitw failed for k={k!r} m={m!r} z={z.value!r}") from exc
        return complex(val)


def bessel_k(params: BesselParams, z: SectorPoint,
             tol: TolerancePolicy = _DEFAULT_TOL) -> complex:
    """K_nu(z) through K_nu(z) = sqrt(pi/(2z)) W_{0,nu}(2z)."""
    nu = abs(params.nu)  # even in nu
    w = whittaker_w(WhittakerParams(0j, nu), SectorPoint(2.0 * z.value), tol)
    pref = cmath.exp(0.5 * cmath.log(math.pi / (2.0 * z.value)))
    return pref * w


def whittaker_modulus_sq(params: WhittakerParams, z: SectorPoint,
                         tol: TolerancePolicy = _DEFAULT_TOL,
                         consistency_check: bool = False) -> float:
    """|W_{k,m}(z)|^2; optional conjugation-symmetry cross-check."""
    w = whittaker_w(params, z, tol)
    if consistency_check:
        wc = whittaker_w(WhittakerParams(params.k.conjugate(), params.m),
                         SectorPoint(z.value.conjugate()), tol)
        if abs(wc.conjugate() - w) > tol.abs_tol + 10 * tol.rel_tol * abs(w):
            raise NonConvergence(
                f"conjugation symmetry violated for k={params.k!r} z={z.value!r}")
    return abs(w) ** 2
