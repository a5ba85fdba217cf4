"""Numerics for starlike classes defined by subordination ``z f'/f - 1 < psi``."""

from .errors import ConvergenceError, HypothesisError, NoSignChangeError, ParameterError
from .generators import Family, GeneratorSpec
from .schwarz import SchwarzSpec
from .series import PowerSeries

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "Family",
    "GeneratorSpec",
    "HypothesisError",
    "NoSignChangeError",
    "ParameterError",
    "PowerSeries",
    "SchwarzSpec",
    "__version__",
]
