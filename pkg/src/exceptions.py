"""
Error types
All domain errors are ValueErrors so callers can keep catching ValueError.
"""

from typing import Optional


class InsepError(ValueError):
    """Base class for every error raised by the toolkit."""


class DimensionMismatchError(InsepError):
    """Sizes of partitions, digraphs or degrees do not line up."""


class BoundExceededError(InsepError):
    """A brute-force computation was asked to go past its configured bound."""


class InsufficientPrecisionError(InsepError):
    """A valuation that the computation needs is not known at the working precision."""

    def __init__(self, message: str, bound: Optional[int] = None):
        super().__init__(message)
        self.bound = bound


class InseparableInputError(InsepError):
    """The defining polynomial does not give a separable extension."""


class NotUniformizerError(InsepError):
    """An element with v_L != 1 was used where a uniformizer is required."""


class ResidueFieldTooSmallError(InsepError):
    """The residue field has too few elements for the requested witness search."""


class PolynomialParseError(InsepError):
    """Malformed polynomial, field or element text."""

    def __init__(self, message: str, token: str = "", position: int = 0):
        super().__init__(f"{message} (token {token!r} at position {position})")
        self.token = token
        self.position = position


class UnknownSuiteError(InsepError):
    """verify was called with a suite name that does not exist."""
