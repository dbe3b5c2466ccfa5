"""Quotient bounds |W_{k,m}(tau x) / W_{k,m}(x)|^2 <= tau e^{(1-tau) Re x}
and the Bessel specialization, with seeded verification sweeps.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Union

import numpy as np

from .core import SectorPoint, TolerancePolicy
from .erdelyi import ModulusProductParams, erdelyi_rhs_modulus
from .errors import DomainError, UnverifiableError
from .whittaker import (
    BesselParams,
    WhittakerParams,
    bessel_k,
    whittaker_modulus_sq,
)

__all__ = [
    "BoundQuery",
    "BoundReport",
    "SweepSample",
    "whittaker_bound",
    "bessel_bound",
    "proof_inequality_check",
    "bound_sweep",
]

_DEFAULT_TOL = TolerancePolicy()

#: verification slack covering quadrature/evaluation error only
HOLDS_SLACK = 1e-9
#: |W(x)|^2 below this is too deep in the exponential tail to divide by
UNDERFLOW_FLOOR = 1e-280


@dataclass(frozen=True)
class BoundQuery:
    params: Union[WhittakerParams, BesselParams]
    x: SectorPoint
    tau: float

    def __post_init__(self):
        if not self.tau >= 1.0:
            raise DomainError(f"tau must be >= 1, got {self.tau}")
        if abs(self.x.argument) > 0.5 * math.pi:
            raise DomainError("bound hypotheses require |arg x| <= pi/2")
        if isinstance(self.params, WhittakerParams) and self.params.k.real >= 0.5:
            raise DomainError("bound hypotheses require Re k < 1/2")


@dataclass(frozen=True)
class BoundReport:
    quotient_sq: float
    bound: float
    slack: float
    holds: bool


def whittaker_bound(query: BoundQuery,
                    tol: TolerancePolicy = _DEFAULT_TOL) -> BoundReport:
    """Check |W(tau x)/W(x)|^2 against tau e^{(1-tau) Re x}.

    The bound side depends only on (x, tau), never on (k, m); the
    quotient side is computed from two independent modulus evaluations,
    not from the product-integral representation.
    """
    if not isinstance(query.params, WhittakerParams):
        raise DomainError("whittaker_bound needs WhittakerParams")
    x = query.x
    tau = query.tau
    denom = whittaker_modulus_sq(query.params, x, tol)
    if denom < UNDERFLOW_FLOOR:
        raise UnverifiableError(
            f"|W(x)|^2 = {denom:g} underflowed; quotient not meaningful")
    numer = whittaker_modulus_sq(query.params, SectorPoint(tau * x.value), tol)
    quotient_sq = numer / denom
    bound = tau * math.exp((1.0 - tau) * x.realpart)
    return BoundReport(quotient_sq, bound, bound - quotient_sq,
                       quotient_sq <= bound * (1.0 + HOLDS_SLACK))


def bessel_bound(nu: float, x: SectorPoint, tau: float,
                 tol: TolerancePolicy = _DEFAULT_TOL) -> BoundReport:
    """Check |K_nu(tau x)/K_nu(x)|^2 against e^{2(1-tau) Re x}
    (no tau prefactor in the Bessel case)."""
    if not tau >= 1.0:
        raise DomainError(f"tau must be >= 1, got {tau}")
    if abs(x.argument) > 0.5 * math.pi:
        raise DomainError("bound hypotheses require |arg x| <= pi/2")
    denom = abs(bessel_k(BesselParams(nu), x, tol)) ** 2
    if denom < UNDERFLOW_FLOOR:
        raise UnverifiableError(
            f"|K(x)|^2 = {denom:g} underflowed; quotient not meaningful")
    numer = abs(bessel_k(BesselParams(nu), SectorPoint(tau * x.value), tol)) ** 2
    quotient_sq = numer / denom
    bound = math.exp(2.0 * (1.0 - tau) * x.realpart)
    return BoundReport(quotient_sq, bound, bound - quotient_sq,
                       quotient_sq <= bound * (1.0 + HOLDS_SLACK))


def proof_inequality_check(params: WhittakerParams, x: SectorPoint, tau: float,
                           tol: TolerancePolicy = _DEFAULT_TOL):
    """The inequality the bound proof actually derives: the Laplace-form
    right-hand side is decreasing in t, so RHS(tau) <= RHS(1) for
    tau >= 1. Returns (rhs_tau, rhs_1, ok)."""
    rhs_tau = erdelyi_rhs_modulus(
        ModulusProductParams(params.k, params.m, x, tau), tol).value.real
    rhs_one = erdelyi_rhs_modulus(
        ModulusProductParams(params.k, params.m, x, 1.0), tol).value.real
    return rhs_tau, rhs_one, rhs_tau <= rhs_one * (1.0 + HOLDS_SLACK)


@dataclass(frozen=True)
class SweepSample:
    index: int
    kind: str  # "whittaker" | "bessel"
    k: Optional[complex]
    m: Optional[float]
    nu: Optional[float]
    x: complex
    tau: float
    report: Optional[BoundReport]
    error: Optional[str] = None


def _thread_count() -> int:
    raw = os.environ.get("WHITTAKER_MONO_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"WHITTAKER_MONO_THREADS={raw!r} is not an integer")
    if n < 0:
        raise DomainError("WHITTAKER_MONO_THREADS must be >= 0")
    return n if n > 0 else (os.cpu_count() or 1)


def _ordered_parallel_map(fn, n: int):
    workers = _thread_count()
    if workers <= 1 or n <= 1:
        return [fn(i) for i in range(n)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(n)))


def _sample_rng(seed: int, index: int) -> np.random.Generator:
    # each sample gets its own stream so ordering and parallelism are moot
    return np.random.default_rng((int(seed) ^ index) & 0xFFFFFFFFFFFFFFFF)


def bound_sweep(n_samples: int, seed: int,
                tol: TolerancePolicy = _DEFAULT_TOL,
                kind: str = "whittaker",
                re_k_range=(-2.0, 0.49), im_k_max=5.0, m_range=(-3.0, 3.0),
                nu_range=(-3.0, 3.0),
                mod_x_range=(0.1, 5.0), tau_range=(1.0, 20.0)) -> List[SweepSample]:
    """Seeded verification sweep over the bound hypotheses; sample i is a
    pure function of seed XOR i."""
    if kind not in ("whittaker", "bessel"):
        raise DomainError(f"unknown sweep kind {kind!r}")

    def one(i: int) -> SweepSample:
        rng = _sample_rng(seed, i)
        mod = rng.uniform(*mod_x_range)
        arg = rng.uniform(-0.5 * math.pi, 0.5 * math.pi)
        x = SectorPoint.from_polar(mod, arg)
        tau = rng.uniform(*tau_range)
        if kind == "whittaker":
            k = complex(rng.uniform(*re_k_range), rng.uniform(-im_k_max, im_k_max))
            m = rng.uniform(*m_range)
            params = WhittakerParams(k, m)
            try:
                rep = whittaker_bound(BoundQuery(params, x, tau), tol)
                return SweepSample(i, kind, k, m, None, x.value, tau, rep)
            except UnverifiableError as exc:
                return SweepSample(i, kind, k, m, None, x.value, tau, None,
                                   str(exc))
        nu = rng.uniform(*nu_range)
        try:
            rep = bessel_bound(nu, x, tau, tol)
            return SweepSample(i, kind, None, None, nu, x.value, tau, rep)
        except UnverifiableError as exc:
            return SweepSample(i, kind, None, None, nu, x.value, tau, None,
                               str(exc))

    return _ordered_parallel_map(one, n_samples)
