"""Mod-2 Steenrod algebra, cohomology of K(Z/2, n) and quadratic forms over F2."""

from .errors import (
    AmbientMismatchError,
    ContractError,
    DegreeError,
    GrammarError,
    ResourceError,
    Steenrod2Error,
    UnsupportedAlgebraError,
)
from .poly import Poly, PolyRing, Variable, vector_space_ring
from .qforms import QuadraticForm
from .operations import OperationClass, parse_class

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatchError", "ContractError", "DegreeError", "GrammarError", "ResourceError",
    "Steenrod2Error", "UnsupportedAlgebraError", "Poly", "PolyRing", "Variable",
    "vector_space_ring", "QuadraticForm", "OperationClass", "parse_class",
]
