"""Right-hand sides of the product integral representations: the general
two-index form, the modulus (conjugate) specialization, and the Bessel
form, evaluated as semi-infinite Laplace-type quadratures.

The modulus-form integrand is nonnegative for |arg x| <= pi/2 and, more
generally, whenever the hypergeometric factor stays nonnegative along
the nodes; the minimum observed factor is recorded for sign audits.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import SectorPoint, TolerancePolicy, as_complex, complex_gamma
from .errors import BranchError, DomainError, NonConvergence
from .hyp2f1 import Hyp2F1Params, hyp2f1_eval_many, hyp2f1_general_arg

__all__ = [
    "GeneralProductParams",
    "ModulusProductParams",
    "QuadratureResult",
    "hyp_argument",
    "erdelyi_rhs_modulus",
    "erdelyi_rhs_general",
    "bessel_rhs",
]

_DEFAULT_TOL = TolerancePolicy()

_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss_legendre(n: int):
    if n not in _GL_CACHE:
        _GL_CACHE[n] = np.polynomial.legendre.leggauss(n)
    return _GL_CACHE[n]


@dataclass(frozen=True)
class ModulusProductParams:
    """Inputs of the modulus-form representation."""

    k: complex
    m: float
    x: SectorPoint
    t: float

    def __post_init__(self):
        k = as_complex(self.k, "k")
        if k.real >= 0.5:
            raise DomainError(f"modulus form requires Re k < 1/2, got {k!r}")
        if not (self.t > 0 and math.isfinite(self.t)):
            raise DomainError("t must be positive and finite")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "m", float(self.m))
        object.__setattr__(self, "t", float(self.t))


@dataclass(frozen=True)
class GeneralProductParams:
    """Inputs of the general two-index representation."""

    k: complex
    l: complex
    m: complex
    x: SectorPoint
    y: SectorPoint
    t: float

    def __post_init__(self):
        k = as_complex(self.k, "k")
        l = as_complex(self.l, "l")
        m = as_complex(self.m, "m")
        if (1.0 - k - l).real <= 0:
            raise DomainError("general form requires Re(1 - k - l) > 0")
        if not (self.t > 0 and math.isfinite(self.t)):
            raise DomainError("t must be positive and finite")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "t", float(self.t))


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    abs_err_estimate: float
    nodes_used: int
    converged: bool
    #: smallest hypergeometric-factor value seen at any node (real
    #: integrands only); the sign audit for monotonicity certificates
    min_hyp_factor: Optional[float] = None

    @property
    def real_value(self) -> float:
        return self.value.real


def hyp_argument(x: SectorPoint, u: float) -> float:
    """u (2 Re x + u) / |x + u|^2, always < 1."""
    if u < 0:
        raise DomainError("u must be >= 0")
    return u * (2.0 * x.realpart + u) / ((x.realpart + u) ** 2 + x.value.imag ** 2)


def _hyp_argument_vec(x: SectorPoint, u: np.ndarray) -> np.ndarray:
    return u * (2.0 * x.realpart + u) / ((x.realpart + u) ** 2 + x.value.imag ** 2)


#: hard cap on evaluation nodes per integral; refinement past this point
#: means the error estimate is dominated by evaluation noise, not by the
#: panel subdivision, so further splitting cannot help
NODE_BUDGET = 200_000


class _QuadState:
    __slots__ = ("nodes", "min_factor", "overflow")

    def __init__(self):
        self.nodes = 0
        self.min_factor = math.inf
        self.overflow = False


def _adaptive_panel(f: Callable[[np.ndarray], np.ndarray], a: float, b: float,
                    rel_tol: float, abs_floor: float, max_depth: int,
                    state: _QuadState):
    """Adaptive GL16/GL32 on [a, b]; returns (value, err_estimate, ok)."""
    x16, w16 = _gauss_legendre(16)
    x32, w32 = _gauss_legendre(32)
    total = 0.0 + 0j
    err = 0.0
    ok = True
    stack = [(a, b, 0)]
    while stack:
        a0, b0, depth = stack.pop()
        mid = 0.5 * (a0 + b0)
        half = 0.5 * (b0 - a0)
        pts = np.concatenate((mid + half * x16, mid + half * x32))
        vals = f(pts)
        state.nodes += pts.size
        i16 = half * np.dot(w16, vals[:16])
        i32 = half * np.dot(w32, vals[16:])
        e = abs(i32 - i16)
        exhausted = depth >= max_depth or state.nodes > NODE_BUDGET
        if e <= rel_tol * abs(i32) + abs_floor * (b0 - a0) / (b - a) or exhausted:
            if exhausted and e > rel_tol * abs(i32) + abs_floor:
                ok = False
            total += i32
            err += e
        else:
            stack.append((a0, mid, depth + 1))
            stack.append((mid, b0, depth + 1))
    return total, err, ok


def _laplace_quadrature(outer: Callable[[np.ndarray], np.ndarray],
                        sing_exponent: float, u_split: float, t: float,
                        tol: TolerancePolicy, track_min: bool = False):
    """integral_0^inf u^sing_exponent * outer(u) du with outer containing
    the e^{-tu} decay; the endpoint power u^sing_exponent (> -1) is
    absorbed by the substitution u = s^q on [0, u_split].
    """
    state = _QuadState()
    # absorb a genuinely singular endpoint power only; a nonnegative
    # exponent is smooth as-is and the substitution would create a
    # derivative singularity instead of removing one
    q = 1.0 / (1.0 + sing_exponent) if sing_exponent < 0 else 1.0

    def f_a(s: np.ndarray) -> np.ndarray:
        if q == 1.0:
            return s ** sing_exponent * outer(s) if sing_exponent != 0 else outer(s)
        u = s ** q
        return q * outer(u)

    def f_b(u: np.ndarray) -> np.ndarray:
        return u ** sing_exponent * outer(u) if sing_exponent != 0 else outer(u)

    rel = 0.1 * tol.rel_tol
    depth = min(tol.max_quad_refinements, 30)
    s_split = u_split ** (1.0 / q)
    panel_len = max(1.0, 2.0 / t)

    # coarse pass to fix the absolute-error floor for the adaptive pass
    scale, _, _ = _adaptive_panel(f_a, 0.0, s_split, rel, math.inf, 0, state)
    scale = abs(scale)
    for j in range(3):
        v, _, _ = _adaptive_panel(f_b, u_split + j * panel_len,
                                  u_split + (j + 1) * panel_len, rel,
                                  math.inf, 0, state)
        scale += abs(v)
    abs_floor = max(tol.abs_tol, 0.05 * tol.rel_tol * scale)

    val_a, err_a, ok_a = _adaptive_panel(f_a, 0.0, s_split, rel, abs_floor,
                                         depth, state)
    total = val_a
    err = err_a
    ok = ok_a
    u_lo = u_split
    quiet = 0
    n_panels = 0
    while quiet < 3:
        v, e, p_ok = _adaptive_panel(f_b, u_lo, u_lo + panel_len, rel,
                                     abs_floor, depth, state)
        total += v
        err += e
        ok = ok and p_ok
        if abs(v) <= 0.25 * max(abs_floor, tol.rel_tol * abs(total)):
            quiet += 1
        else:
            quiet = 0
        u_lo += panel_len
        n_panels += 1
        if n_panels > 10000:
            raise NonConvergence("tail integral did not decay")
    converged = ok and err <= max(10.0 * abs_floor, tol.rel_tol * abs(total))
    return total, err, state, converged


def _modulus_outer(k: complex, m: float, x: SectorPoint, t: float,
                   weight_power: int, hyp: Hyp2F1Params,
                   tol: TolerancePolicy, state_holder: list):
    """outer(u) for the modulus form, excluding the u^{-2 Re k} power."""
    w_exp = k - 0.5 - m  # (x+u)^w, |.|^2 taken

    def outer(u: np.ndarray) -> np.ndarray:
        xu = x.value + u
        log_abs2 = 2.0 * (w_exp.real * np.log(np.abs(xu))
                          - w_exp.imag * np.angle(xu))
        factor = hyp2f1_eval_many(hyp, _hyp_argument_vec(x, u), tol).real
        mn = float(np.min(factor))
        if mn < state_holder[0]:
            state_holder[0] = mn
        vals = np.exp(-t * u + log_abs2) * factor
        if weight_power:
            vals = vals * u ** weight_power
        return vals

    return outer


def erdelyi_rhs_modulus(params: ModulusProductParams,
                        tol: TolerancePolicy = _DEFAULT_TOL,
                        weight_power: int = 0) -> QuadratureResult:
    """(t|x|)^{-1} e^{t Re x} |W_{k,m}(tx)|^2 as the Laplace integral,
    prefactor |x|^{2m} / Gamma(1 - 2 Re k) included.

    weight_power n inserts u^n, yielding the n-th alternating derivative
    of the left-hand side with respect to t (up to the |x| factor used
    by the monotonicity module).
    """
    k, m, x, t = params.k, params.m, params.x, params.t
    hyp = Hyp2F1Params.from_whittaker(k, m)
    min_holder = [math.inf]
    outer = _modulus_outer(k, m, x, t, weight_power, hyp, tol, min_holder)
    log_pref = 2.0 * m * math.log(x.modulus) - math.lgamma(1.0 - 2.0 * k.real)
    pref = math.exp(log_pref)
    total, err, state, converged = _laplace_quadrature(
        outer, -2.0 * k.real, max(1.0, x.modulus), t, tol)
    return QuadratureResult(
        value=complex(pref * total.real),
        abs_err_estimate=pref * err,
        nodes_used=state.nodes,
        converged=converged,
        min_hyp_factor=min_holder[0],
    )


def bessel_rhs(nu: float, x: SectorPoint, t: float,
               tol: TolerancePolicy = _DEFAULT_TOL,
               weight_power: int = 0) -> QuadratureResult:
    """e^{2t Re x} |K_nu(tx)|^2 as the Laplace integral of the Bessel
    specialization: pi (2|x|)^{2nu} int e^{-tu} |2x+u|^{-2nu-1} 2F1(...) du."""
    nu = float(nu)
    hyp = Hyp2F1Params.from_bessel(abs(nu))
    x2 = SectorPoint(2.0 * x.value)
    min_holder = [math.inf]
    anu = abs(nu)

    def outer(u: np.ndarray) -> np.ndarray:
        xu = x2.value + u
        factor = hyp2f1_eval_many(hyp, _hyp_argument_vec(x2, u), tol).real
        mn = float(np.min(factor))
        if mn < min_holder[0]:
            min_holder[0] = mn
        vals = np.exp(-t * u - (2.0 * anu + 1.0) * np.log(np.abs(xu))) * factor
        if weight_power:
            vals = vals * u ** weight_power
        return vals

    pref = math.pi * math.exp(2.0 * anu * math.log(2.0 * x.modulus))
    total, err, state, converged = _laplace_quadrature(
        outer, 0.0, max(1.0, x2.modulus), t, tol)
    return QuadratureResult(
        value=complex(pref * total.real),
        abs_err_estimate=pref * err,
        nodes_used=state.nodes,
        converged=converged,
        min_hyp_factor=min_holder[0],
    )


def _general_hyp_argument(x: complex, y: complex, u: float) -> complex:
    return u * (x + y + u) / ((x + u) * (y + u))


def erdelyi_rhs_general(params: GeneralProductParams,
                        tol: TolerancePolicy = _DEFAULT_TOL) -> QuadratureResult:
    """(t^2 xy)^{-1/2} e^{t(x+y)/2} W_{k,m}(tx) W_{l,m}(ty) as the general
    product integral; BranchError if the 2F1 argument meets [1, inf)."""
    k, l, m = params.k, params.l, params.m
    x, y, t = params.x.value, params.y.value, params.t
    hyp = Hyp2F1Params(0.5 + m - k, 0.5 + m - l, 1.0 - k - l)
    w_x = k - 0.5 - m
    w_y = l - 0.5 - m
    kl = k + l

    def outer(u: np.ndarray) -> np.ndarray:
        out = np.empty(u.shape, dtype=np.complex128)
        for i, ui in enumerate(u):
            zeta = _general_hyp_argument(x, y, ui)
            if abs(zeta.imag) <= 1e-13 * (1.0 + abs(zeta)) and zeta.real >= 1.0 - 1e-13:
                raise BranchError(
                    f"2F1 argument {zeta!r} meets the cut [1, inf) at u={ui}; "
                    "analytic continuation across the cut is out of scope")
            f = hyp2f1_general_arg(hyp, zeta, tol)
            # u^{-i Im(k+l)}: bounded oscillatory part of the u^{-k-l} power
            osc = cmath.exp(complex(0.0, -kl.imag) * math.log(ui)) if ui > 0 else 1.0
            out[i] = (cmath.exp(-t * ui + w_x * cmath.log(x + ui)
                                + w_y * cmath.log(y + ui)) * osc * f)
        return out

    total, err, state, converged = _laplace_quadrature(
        outer, -kl.real, max(1.0, abs(x), abs(y)), t, tol)
    pref = cmath.exp(m * cmath.log(x * y)) / complex_gamma(1.0 - k - l)
    return QuadratureResult(
        value=pref * total,
        abs_err_estimate=abs(pref) * err,
        nodes_used=state.nodes,
        converged=converged,
    )
