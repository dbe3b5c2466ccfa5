"""Complete-monotonicity machinery: sector angles from the largest
negative zero, alternating-derivative moments via the Laplace
representation, and positivity certificates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple, Union

from .core import SectorPoint, TolerancePolicy
from .erdelyi import (
    ModulusProductParams,
    bessel_rhs,
    erdelyi_rhs_modulus,
    hyp_argument,
)
from .errors import DomainError
from .hyp2f1 import (
    DEFAULT_SEARCH_FLOOR,
    Hyp2F1Params,
    NegZeroResult,
    find_largest_negative_zero,
    hyp2f1_eval,
)
from .whittaker import BesselParams, WhittakerParams

__all__ = [
    "SectorCertificate",
    "CMCertificate",
    "theta_from_p",
    "sector_certificate",
    "in_certified_sector",
    "cm_moment",
    "certify_cm",
    "kmod_cm_check",
    "DEFAULT_T_GRID",
    "DEFAULT_N_MAX",
]

_DEFAULT_TOL = TolerancePolicy()

DEFAULT_T_GRID: Tuple[float, ...] = (0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0)
DEFAULT_N_MAX = 12

AnyParams = Union[WhittakerParams, BesselParams]


def theta_from_p(p: float) -> float:
    """Sector half-angle in (pi/2, pi) with tan(theta) = -1/sqrt(-p)."""
    if not p < 0:
        raise DomainError(f"theta_from_p requires p < 0, got {p}")
    return math.pi - math.atan(1.0 / math.sqrt(-p))


@dataclass(frozen=True)
class SectorCertificate:
    """Certified sector |arg x| <= theta for complete monotonicity."""

    params: WhittakerParams
    p: NegZeroResult
    theta: float
    theta_is_exact_pi: bool = False

    def __post_init__(self):
        if self.theta_is_exact_pi:
            if self.theta != math.pi:
                raise DomainError("exact-pi certificate must carry theta = pi")
        elif not 0.5 * math.pi < self.theta < math.pi:
            raise DomainError("theta must lie in (pi/2, pi)")


def _analytic_neg_infinity(k: complex, m: float) -> bool:
    """Hypotheses under which no negative zero exists: k real, k < 1/2,
    and k - 1/2 <= m <= 1/2 - k (nonnegative-coefficient regime)."""
    if k.imag != 0.0:
        return False
    kr = k.real
    return kr < 0.5 and kr - 0.5 <= m <= 0.5 - kr


def sector_certificate(params: WhittakerParams,
                       search_floor: float = DEFAULT_SEARCH_FLOOR,
                       tol: TolerancePolicy = _DEFAULT_TOL) -> SectorCertificate:
    """Compute the certified sector for (k, m): analytic fast path when
    the no-negative-zero criterion holds, numeric zero search otherwise.

    A NoneInSearchRange outcome yields the conservative angle
    theta(search_floor): any zero below the floor could only enlarge the
    sector.
    """
    k, m = params.k, params.m
    if k.real >= 0.5:
        raise DomainError(f"sector certificate requires Re k < 1/2, got {k!r}")
    if _analytic_neg_infinity(k, m):
        return SectorCertificate(params, NegZeroResult("AnalyticNegInfinity"),
                                 math.pi, theta_is_exact_pi=True)
    hyp = Hyp2F1Params.from_whittaker(k, m)
    result = find_largest_negative_zero(hyp, search_floor, tol)
    if result.kind == "Found":
        return SectorCertificate(params, result, theta_from_p(result.p))
    return SectorCertificate(params, result, theta_from_p(search_floor))


def in_certified_sector(cert: SectorCertificate, x: SectorPoint) -> bool:
    """|arg x| <= theta (closed), or |arg x| < pi for the exact-pi case."""
    if cert.theta_is_exact_pi:
        return abs(x.argument) < math.pi
    return abs(x.argument) <= cert.theta


def _moment_result(params: AnyParams, x: SectorPoint, n: int, t: float,
                   tol: TolerancePolicy):
    if isinstance(params, WhittakerParams):
        res = erdelyi_rhs_modulus(
            ModulusProductParams(params.k, params.m, x, t), tol, weight_power=n)
        # f(t) = |x| * (t|x|)^{-1} e^{t Re x} |W|^2
        return x.modulus * res.value.real, x.modulus * res.abs_err_estimate, res
    res = bessel_rhs(params.nu, x, t, tol, weight_power=n)
    return res.value.real, res.abs_err_estimate, res


def cm_moment(params: AnyParams, x: SectorPoint, n: int, t: float,
              tol: TolerancePolicy = _DEFAULT_TOL,
              n_max: int = DEFAULT_N_MAX) -> float:
    """(-1)^n f^(n)(t) for f(t) = t^{-1} e^{t Re x} |W_{k,m}(tx)|^2
    (Whittaker params) or f(t) = e^{2t Re x} |K_nu(tx)|^2 (Bessel params),
    computed by inserting the weight u^n under the Laplace integral."""
    if n < 0 or n > n_max:
        raise DomainError(f"derivative order n = {n} outside [0, {n_max}]")
    if t <= 0:
        raise DomainError("t must be > 0")
    value, _, _ = _moment_result(params, x, n, t, tol)
    return value


@dataclass(frozen=True)
class CMCertificate:
    """Moment-sign table over an (n, t) grid plus the integrand sign audit."""

    params: AnyParams
    x: SectorPoint
    n_max: int
    t_grid: Tuple[float, ...]
    moments: Dict[Tuple[int, float], float]
    verdict: str  # "CertifiedPositive" | "ViolationFound" | "Inconclusive"
    violation: Optional[Tuple[int, float, float]] = None
    #: min of the 2F1 factor over all quadrature nodes and the analytic
    #: minimizer of the hypergeometric argument
    sign_audit_min: float = field(default=math.nan)


def _sign_audit_floor(params: AnyParams, x: SectorPoint,
                      tol: TolerancePolicy) -> float:
    """2F1 factor at the absolute minimizer u = -Re X of the argument
    (X = x for the Whittaker form, 2x for the Bessel form)."""
    if isinstance(params, WhittakerParams):
        hyp = Hyp2F1Params.from_whittaker(params.k, params.m)
        big_x = x
    else:
        hyp = Hyp2F1Params.from_bessel(abs(params.nu))
        big_x = SectorPoint(2.0 * x.value)
    if big_x.realpart >= 0:
        # argument stays in [0, 1) where the series has nonnegative
        # coefficients, so the factor is >= F(0) = 1
        return 1.0
    zmin = hyp_argument(big_x, -big_x.realpart)
    return hyp2f1_eval(hyp, zmin, tol).real


def certify_cm(params: AnyParams, x: SectorPoint,
               n_max: int = DEFAULT_N_MAX,
               t_grid: Tuple[float, ...] = DEFAULT_T_GRID,
               tol: TolerancePolicy = _DEFAULT_TOL) -> CMCertificate:
    """Tabulate (-1)^n f^(n)(t) over the grid and audit the integrand sign.

    CertifiedPositive needs every moment to clear 10x its quadrature
    error estimate and a nonnegative sign audit; a negative audit with
    positive tabulated moments is Inconclusive (failure of complete
    monotonicity outside the sector is not decidable from a finite
    moment table).
    """
    moments: Dict[Tuple[int, float], float] = {}
    violation = None
    audit_min = _sign_audit_floor(params, x, tol)
    all_clear = True
    for n in range(n_max + 1):
        for t in t_grid:
            value, err, res = _moment_result(params, x, n, t, tol)
            moments[(n, float(t))] = value
            if res.min_hyp_factor is not None:
                audit_min = min(audit_min, res.min_hyp_factor)
            if value <= 10.0 * err:
                all_clear = False
                if value < -10.0 * err and violation is None:
                    violation = (n, float(t), value)
    if violation is not None:
        verdict = "ViolationFound"
    elif all_clear and audit_min >= -1e-10:
        verdict = "CertifiedPositive"
    else:
        verdict = "Inconclusive"
    return CMCertificate(params, x, n_max, tuple(float(t) for t in t_grid),
                         moments, verdict, violation, audit_min)


def kmod_cm_check(nu: float, x: SectorPoint,
                  n_max: int = DEFAULT_N_MAX,
                  t_grid: Tuple[float, ...] = DEFAULT_T_GRID,
                  tol: TolerancePolicy = _DEFAULT_TOL) -> CMCertificate:
    """Certificate for t -> |K_nu(tx)|^2 on |arg x| <= pi/2.

    |K_nu(tx)|^2 = e^{-2t Re x} * (Bessel-form Laplace integral), so the
    n-th alternating derivative is the integral against the shifted
    weight (u + 2 Re x)^n, expanded into the plain u^j moments.
    """
    if abs(x.argument) > 0.5 * math.pi:
        raise DomainError("kmod_cm_check requires |arg x| <= pi/2")
    params = BesselParams(nu)
    two_rex = 2.0 * x.realpart
    moments: Dict[Tuple[int, float], float] = {}
    violation = None
    audit_min = 1.0
    all_clear = True
    for t in t_grid:
        base = []
        errs = []
        for j in range(n_max + 1):
            res = bessel_rhs(nu, x, float(t), tol, weight_power=j)
            base.append(res.value.real)
            errs.append(res.abs_err_estimate)
            if res.min_hyp_factor is not None:
                audit_min = min(audit_min, res.min_hyp_factor)
        damp = math.exp(-two_rex * float(t))
        for n in range(n_max + 1):
            value = damp * sum(math.comb(n, j) * two_rex ** (n - j) * base[j]
                               for j in range(n + 1))
            err = damp * sum(math.comb(n, j) * two_rex ** (n - j) * errs[j]
                             for j in range(n + 1))
            moments[(n, float(t))] = value
            if value <= 10.0 * err:
                all_clear = False
                if value < -10.0 * err and violation is None:
                    violation = (n, float(t), value)
    if violation is not None:
        verdict = "ViolationFound"
    elif all_clear and audit_min >= -1e-10:
        verdict = "CertifiedPositive"
    else:
        verdict = "Inconclusive"
    return CMCertificate(params, x, n_max, tuple(float(t) for t in t_grid),
                         moments, verdict, violation, audit_min)
