"""Complex-arithmetic foundation: principal powers, complex gamma and
digamma, Pochhammer symbols, tolerance policy, and the sector-point type.

All functions are pure; principal branches (arg in (-pi, pi]) are used
throughout.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import DomainError, PoleError

__all__ = [
    "TolerancePolicy",
    "SectorPoint",
    "as_complex",
    "principal_pow",
    "complex_gamma",
    "reciprocal_gamma",
    "digamma",
    "pochhammer",
    "is_nonpositive_integer",
]


@dataclass(frozen=True)
class TolerancePolicy:
    """Centralized tolerance and budget policy, threaded explicitly."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_series_terms: int = 10000
    max_quad_refinements: int = 30

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise DomainError("tolerances must be positive")
        if self.max_series_terms < 1 or self.max_quad_refinements < 1:
            raise DomainError("iteration budgets must be >= 1")


def as_complex(value, name: str = "value") -> complex:
    """Coerce to a finite python complex; reject NaN/Inf components."""
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{name} must have finite components, got {z!r}")
    return z


@dataclass(frozen=True)
class SectorPoint:
    """A nonzero complex point with cached modulus, real part and
    principal argument.

    Points on the cut (-inf, 0] are rejected: every operation in this
    package that consumes a SectorPoint requires |arg x| < pi.
    """

    value: complex
    modulus: float = field(init=False)
    realpart: float = field(init=False)
    argument: float = field(init=False)

    def __post_init__(self):
        z = as_complex(self.value, "SectorPoint.value")
        if z == 0 or (z.imag == 0 and z.real < 0):
            raise DomainError(
                f"SectorPoint requires |arg x| < pi; got {z!r} on the cut (-inf, 0]"
            )
        object.__setattr__(self, "value", z)
        object.__setattr__(self, "modulus", abs(z))
        object.__setattr__(self, "realpart", z.real)
        object.__setattr__(self, "argument", cmath.phase(z))

    @classmethod
    def from_polar(cls, modulus: float, argument: float) -> "SectorPoint":
        if modulus <= 0:
            raise DomainError("modulus must be > 0")
        return cls(cmath.rect(modulus, argument))


def principal_pow(base, exponent) -> complex:
    """base**exponent through exp(exponent * Log base), principal Log.

    Repeated multiplication is never used, so branch behavior is uniform
    on the cut plane.
    """
    b = as_complex(base, "base")
    w = as_complex(exponent, "exponent")
    if b == 0:
        if w == 0 or w.real <= 0:
            raise DomainError("0**w undefined for Re(exponent) <= 0")
        return 0j
    if b.imag == 0 and b.real < 0:
        raise DomainError(f"principal_pow base {b!r} lies on the cut (-inf, 0]")
    return cmath.exp(w * cmath.log(b))


# Lanczos approximation, g = 7, 9 terms; relative error ~ 1e-13 on the
# half-plane Re z >= 0.5, extended by reflection.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


def is_nonpositive_integer(z, tol: float = 1e-12) -> bool:
    z = complex(z)
    if abs(z.imag) > tol:
        return False
    r = round(z.real)
    return r <= 0 and abs(z.real - r) <= tol


def _lanczos_gamma(z: complex) -> complex:
    # requires Re z >= 0.5
    z = z - 1.0
    s = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        s += _LANCZOS_COEFFS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_TWO_PI * cmath.exp((z + 0.5) * cmath.log(t) - t) * s


def complex_gamma(z) -> complex:
    """Gamma(z) on the cut plane; reflection formula for Re z < 1/2."""
    z = as_complex(z, "z")
    if is_nonpositive_integer(z):
        raise PoleError(f"gamma pole at {z!r}")
    if z.real < 0.5:
        # Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return math.pi / (cmath.sin(math.pi * z) * _lanczos_gamma(1.0 - z))
    return _lanczos_gamma(z)


def reciprocal_gamma(z) -> complex:
    """1/Gamma(z), entire; returns exactly 0 at nonpositive integers."""
    z = as_complex(z, "z")
    if is_nonpositive_integer(z):
        return 0j
    return 1.0 / complex_gamma(z)


# Bernoulli numbers B_2 .. B_14 for the digamma asymptotic tail.
_DIGAMMA_BERNOULLI = (
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,
)


def digamma(z) -> complex:
    """psi(z) = Gamma'(z)/Gamma(z) on the cut plane."""
    z = as_complex(z, "z")
    if is_nonpositive_integer(z):
        raise PoleError(f"digamma pole at {z!r}")
    if z.real < 0.5:
        # reflection: psi(z) = psi(1-z) - pi cot(pi z)
        return digamma(1.0 - z) - math.pi / cmath.tan(math.pi * z)
    acc = 0j
    while z.real < 9.0:
        acc -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    tail = 0j
    p = inv2
    for n, b in enumerate(_DIGAMMA_BERNOULLI, start=1):
        tail += b / (2 * n) * p
        p *= inv2
    return acc + cmath.log(z) - 0.5 / z - tail


def pochhammer(a, n: int) -> complex:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise DomainError("pochhammer order must be >= 0")
    a = as_complex(a, "a")
    out = 1.0 + 0j
    for i in range(n):
        out *= a + i
    return out
