"""Seeded dual-route identity sweeps: left-hand sides from the direct
Whittaker evaluation, right-hand sides from the product-integral
quadrature. Residuals of these sweeps are the package's main evidence.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .core import SectorPoint, TolerancePolicy
from .erdelyi import (
    GeneralProductParams,
    ModulusProductParams,
    erdelyi_rhs_general,
    erdelyi_rhs_modulus,
)
from .errors import BranchError, NonConvergence
from .whittaker import WhittakerParams, whittaker_modulus_sq, whittaker_w

__all__ = [
    "IdentitySample",
    "identity_sweep_modulus",
    "identity_sweep_general",
]

_DEFAULT_TOL = TolerancePolicy()


@dataclass(frozen=True)
class IdentitySample:
    index: int
    k: complex
    m: complex
    x: complex
    y: Optional[complex]
    l: Optional[complex]
    t: float
    lhs: complex
    rhs: complex
    residual: float
    error: Optional[str] = None


def _rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng((int(seed) ^ index) & 0xFFFFFFFFFFFFFFFF)


def identity_sweep_modulus(count: int, seed: int,
                           tol: TolerancePolicy = _DEFAULT_TOL) -> List[IdentitySample]:
    """Modulus-form identity over the full hypothesis region:
    Re k in (-2, 0.49), |Im k| <= 5, m in (-3, 3), |x| in (0.1, 5),
    |arg x| <= pi - 0.2, t in (0.1, 5)."""
    out = []
    for i in range(count):
        rng = _rng(seed, i)
        k = complex(rng.uniform(-2.0, 0.49), rng.uniform(-5.0, 5.0))
        m = float(rng.uniform(-3.0, 3.0))
        x = SectorPoint.from_polar(rng.uniform(0.1, 5.0),
                                   rng.uniform(-(math.pi - 0.2), math.pi - 0.2))
        t = float(rng.uniform(0.1, 5.0))
        params = WhittakerParams(k, m)
        try:
            mod_sq = whittaker_modulus_sq(params, SectorPoint(t * x.value), tol)
            lhs = mod_sq * math.exp(t * x.realpart) / (t * x.modulus)
            rhs = erdelyi_rhs_modulus(ModulusProductParams(k, m, x, t), tol)
            resid = abs(lhs - rhs.value.real) / abs(lhs)
            out.append(IdentitySample(i, k, m, x.value, None, None, t,
                                      lhs, rhs.value, resid))
        except NonConvergence as exc:
            out.append(IdentitySample(i, k, m, x.value, None, None, t,
                                      math.nan, math.nan, math.nan, str(exc)))
    return out


def identity_sweep_general(count: int, seed: int,
                           tol: TolerancePolicy = _DEFAULT_TOL) -> List[IdentitySample]:
    """General two-index identity on a branch-monitor-safe sample region:
    Re(1-k-l) > 0.05, mild imaginary parts and arguments."""
    out = []
    for i in range(count):
        rng = _rng(seed, i)
        while True:
            k = complex(rng.uniform(-1.5, 0.45), rng.uniform(-1.5, 1.5))
            l = complex(rng.uniform(-1.5, 0.45), rng.uniform(-1.5, 1.5))
            if (1.0 - k - l).real > 0.05:
                break
        m = complex(rng.uniform(-1.5, 1.5))
        x = SectorPoint.from_polar(rng.uniform(0.3, 3.0), rng.uniform(-1.0, 1.0))
        y = SectorPoint.from_polar(rng.uniform(0.3, 3.0), rng.uniform(-1.0, 1.0))
        t = float(rng.uniform(0.2, 3.0))
        try:
            wx = whittaker_w(WhittakerParams(k, m.real), SectorPoint(t * x.value), tol)
            wy = whittaker_w(WhittakerParams(l, m.real), SectorPoint(t * y.value), tol)
            lhs = (cmath.exp(-0.5 * cmath.log(t * t * x.value * y.value))
                   * cmath.exp(0.5 * t * (x.value + y.value)) * wx * wy)
            rhs = erdelyi_rhs_general(
                GeneralProductParams(k, l, m, x, y, t), tol)
            resid = abs(lhs - rhs.value) / abs(lhs)
            out.append(IdentitySample(i, k, m, x.value, y.value, l, t,
                                      lhs, rhs.value, resid))
        except (NonConvergence, BranchError) as exc:
            out.append(IdentitySample(i, k, m, x.value, y.value, l, t,
                                      math.nan, math.nan, math.nan, str(exc)))
    return out
