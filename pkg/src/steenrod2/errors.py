"""Exception hierarchy shared by every module."""


class Steenrod2Error(Exception):
    """Base class for all errors raised by this package."""


class AmbientMismatchError(Steenrod2Error):
    """Two polynomials from different ambient algebras were combined."""


class DegreeError(Steenrod2Error):
    """A substitution image has the wrong degree or is not homogeneous."""


class UnsupportedAlgebraError(Steenrod2Error):
    """An operation was requested on an algebra it is not defined for."""


class ContractError(Steenrod2Error):
    """A documented precondition does not hold."""


class ResourceError(Steenrod2Error):
    """A requested computation exceeds a configured size cap."""


class GrammarError(Steenrod2Error, ValueError):
    """Text could not be parsed by one of the input grammars."""
