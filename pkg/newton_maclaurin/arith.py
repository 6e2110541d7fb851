"""
Exact scalar arithmetic for the Newton-Maclaurin lab.

Rationals are ``fractions.Fraction`` values: arbitrary precision, always
stored in lowest terms with a positive denominator, hashable and totally
ordered. This module adds the text grammar used on the CLI and in JSON
documents, plus the binomial coefficients the symmetric means need.
"""

import math
import re
from fractions import Fraction
from typing import Iterable, Tuple, Union

from .errors import InputError

Rational = Fraction
RationalLike = Union[Fraction, int, str]

# optional "-", digits, optional "/" and digits; no whitespace anywhere
_RATIONAL_RE = re.compile(r"^-?[0-9]+(?:/[0-9]+)?$")


def rat_normalize(p: int, q: int) -> Fraction:
    """Return the canonical rational p/q.

    Raises:
        ZeroDivisionError: If q is zero
    """
    if q == 0:
        raise ZeroDivisionError(f"rational with zero denominator: {p}/0")
    return Fraction(p, q)


def parse_rational(token: str) -> Fraction:
    """Parse the rational text form, e.g. ``"-10/9"`` or ``"3"``.

    Raises:
        InputError: If the token does not follow the grammar or has a zero
            denominator
    """
    if not isinstance(token, str) or not _RATIONAL_RE.match(token):
        raise InputError(f"malformed rational: {token!r}")
    numerator, _, denominator = token.partition("/")
    if denominator and int(denominator) == 0:
        raise InputError(f"malformed rational: {token!r} (zero denominator)")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: RationalLike) -> str:
    """Render a rational in the canonical text form."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or rational token to a Fraction.

    Floats are refused: they would smuggle rounding into exact verdicts.
    """
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InputError(f"not a rational: {value!r}")


def as_vector(values: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
    """Coerce a sequence of rational-like values to a tuple of Fractions."""
    return tuple(as_rational(v) for v in values)


def binom(n: int, k: int) -> int:
    """Binomial coefficient C_n^k, zero when k < 0 or k > n."""
    if n < 0:
        raise InputError(f"binomial coefficient needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def sign(value: Fraction) -> int:
    """Return -1, 0 or 1."""
    return (value > 0) - (value < 0)
