"""Ostrowski-type bounds through Pompeiu's mean value theorem.

Submodules:

- ``means``: special means (A, G, H, L, I, L_p)
- ``funcmodel``: test functions, intervals, the deviation ``f - t f'`` and its sup-norm
- ``pompeiu``: locating Pompeiu mean-value points
- ``bounds``: every inequality as a (lhs, rhs, slack) report
- ``quadrature``: the composite rule ``S_n`` and its remainder certificates
- ``oracle``: adaptive Simpson reference integrator
- ``verify``: randomised sweeps over all of the above
"""

__version__ = "0.1.0"

from .funcmodel import (
    DomainError,
    FunctionModel,
    Interval,
    affine,
    custom,
    deviation,
    deviation_norm,
    logarithm,
    parse_function,
    power,
    reciprocal,
)
from .means import PositivePair
from .pompeiu import NoRootLocated, PompeiuPoint, find_pompeiu_point
from .bounds import BoundReport, WeightModel, ZeroWeight
from .quadrature import Partition, QuadratureResult
from .oracle import DepthExceeded, OracleResult

__all__ = [
    "BoundReport",
    "DepthExceeded",
    "DomainError",
    "FunctionModel",
    "Interval",
    "NoRootLocated",
    "OracleResult",
    "Partition",
    "PompeiuPoint",
    "PositivePair",
    "QuadratureResult",
    "WeightModel",
    "ZeroWeight",
    "affine",
    "custom",
    "deviation",
    "deviation_norm",
    "find_pompeiu_point",
    "logarithm",
    "parse_function",
    "power",
    "reciprocal",
]
