"""Kernel backend selection.

The hot 2F1 kernels exist twice: a numba-jitted scalar loop and a
vectorized pure-numpy path. WHITTAKER_MONO_BACKEND picks one:

    numba  - require numba (raise if unavailable)
    numpy  - pure numpy, no compilation
    auto   - numba when importable, else numpy (default)

bench/bench_backends.py compares the two.
"""
from __future__ import annotations

import os

from .packs import build_param_pack  # noqa: F401

_BACKEND = None


def get_backend():
    global _BACKEND
    if _BACKEND is None:
        choice = os.environ.get("WHITTAKER_MONO_BACKEND", "auto").lower()
        if choice not in ("auto", "numba", "numpy"):
            raise ValueError(f"WHITTAKER_MONO_BACKEND={choice!r} not recognized")
        if choice in ("auto", "numba"):
            try:
                from . import numba_backend as mod
            except ImportError:
                if choice == "numba":
                    raise
                from . import numpy_backend as mod
        else:
            from . import numpy_backend as mod
        _BACKEND = mod
    return _BACKEND
