"""
Exception types for the Newton-Maclaurin lab.

Everything derives from ValueError so callers that only care about "bad
input or bad math" can keep catching that.
"""

from typing import Optional


class InputError(ValueError):
    """Malformed input: bad rational token, bad JSON, missing field."""


class RangeError(InputError):
    """An index or size lies outside the range an operation accepts."""


class HypothesisError(ValueError):
    """A hypothesis required by a theorem does not hold for the instance."""

    def __init__(self, hypothesis: str, message: Optional[str] = None):
        self.hypothesis = hypothesis
        super().__init__(message or f"hypothesis violated: {hypothesis}")


class FutileSearchError(HypothesisError):
    """A counterexample search was requested where none can exist."""


class PolynomialError(ValueError):
    """Base class for polynomial algebra failures."""


class UndefinedGcdError(PolynomialError):
    """gcd(0, 0) was requested."""


class NotSquarefreeError(PolynomialError):
    """A squarefree polynomial was required."""


class NotARootError(PolynomialError):
    """A value expected to be a root of a polynomial is not one."""
