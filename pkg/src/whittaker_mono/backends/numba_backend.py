"""Numba-jitted kernel backend (hot path for quadrature node sweeps)."""
from __future__ import annotations

from numba import njit

from . import scalar as _s

NAME = "numba"

_series_j = njit(cache=True)(_s._series)
# closures capture the jitted series, so they cannot use the on-disk cache
_near_one_j = njit(_s._make_near_one(_series_j))
hyp2f1_scalar = njit(_s._make_hyp2f1_scalar(_series_j, _near_one_j))
_real_many_j = njit(_s._make_real_many(hyp2f1_scalar))


def hyp2f1_real_many(z, out, pack, rel_tol, max_terms):
    _real_many_j(z, out, pack, rel_tol, max_terms)


def warmup():
    """Trigger JIT compilation outside any timed section."""
    import numpy as np

    from .packs import build_param_pack

    pack = build_param_pack(2.5, 2.5, 1.0)
    out = np.empty(4, dtype=np.complex128)
    hyp2f1_real_many(np.array([-5.0, -1.0, 0.3, 0.9]), out, pack, 1e-15, 1000)
