"""Exception types raised across the package."""


class GinDepthError(Exception):
    """Base class for all errors raised by gindepth."""


class DimensionError(GinDepthError, ValueError):
    """Objects living in polynomial rings of different sizes were combined."""


class ExponentOverflow(GinDepthError, OverflowError):
    """A monomial exponent left the machine-width range."""


class SingularChange(GinDepthError, ValueError):
    """A linear change of coordinates with zero determinant."""


class DegenerateSampler(GinDepthError, RuntimeError):
    """Random sampling failed to produce a usable (invertible / well-defined) object."""


class ProjectionUndefined(GinDepthError, ValueError):
    """The projection pi_l needs a nonzero coefficient on the last variable.

    ``stage`` is the 1-based position in a projection chain where it failed,
    or ``None`` for a single projection.
    """

    def __init__(self, message, stage=None):
        super().__init__(message)
        self.stage = stage


class ContractError(GinDepthError, ValueError):
    """An operation was called outside its documented preconditions."""


class GinUnstable(GinDepthError, RuntimeError):
    """Every random trial of a generic initial ideal disagreed with every other."""


class ParseError(GinDepthError, ValueError):
    """Syntax error in an ideal file, with 1-based line and column."""

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
