"""Modulus of Whittaker functions: product integral representations,
quotient bounds, and complete-monotonicity certificates."""

__version__ = "0.1.0"

from .core import SectorPoint, TolerancePolicy
from .whittaker import BesselParams, WhittakerParams

__all__ = [
    "SectorPoint",
    "TolerancePolicy",
    "WhittakerParams",
    "BesselParams",
    "__version__",
]
