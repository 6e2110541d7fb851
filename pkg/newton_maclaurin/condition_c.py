"""
Condition C and the alpha/beta algebra.

An alpha vector satisfies Condition C when

    f(t) = t^s + alpha_1 t^(s-1) + ... + alpha_s

has only real roots, counted with multiplicity. Those roots are written
-beta_1, ..., -beta_s, so f = prod(t + beta_j) and alpha_i = sigma_i(beta).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .arith import RationalLike, as_rational, as_vector, format_rational
from .errors import NotARootError, RangeError
from .rng import SplitMix64
from .symmfn import AlphaVector, as_alpha, sigma_all
from .upoly import (
    FactorCount,
    Polynomial,
    RootIsolation,
    isolate_real_roots,
    real_rootedness,
)

logger = logging.getLogger(__name__)

DEFAULT_WIDTH = Fraction(1, 1000)


@dataclass(frozen=True)
class ConditionCReport:
    """Verdict of Condition C for one alpha vector."""

    holds: bool
    f: Polynomial
    roots: RootIsolation
    degree: int
    factors: Tuple[FactorCount, ...]

    @property
    def failing_factors(self) -> Tuple[FactorCount, ...]:
        """Squarefree factors of f whose Sturm count falls short of their degree."""
        return tuple(fc for fc in self.factors if not fc.totally_real)

    def to_json(self) -> Dict[str, object]:
        return {
            "holds": self.holds,
            "f": self.f.to_json(),
            "roots": self.roots.to_json(),
            "degree": self.degree,
            "failing_factors": [
                {"factor": fc.factor.to_json(), "real_roots": fc.real_roots}
                for fc in self.failing_factors
            ],
        }

    def __str__(self) -> str:
        verdict = "holds" if self.holds else "fails"
        roots = ", ".join(str(r) for r in self.roots) or "none"
        return f"Condition C {verdict} for f = {self.f}; real roots: {roots}"


def build_f(alpha: Sequence[RationalLike]) -> Polynomial:
    """f(t) = t^s + alpha_1 t^(s-1) + ... + alpha_s."""
    coefficients = as_alpha(alpha)
    return Polynomial(list(reversed(coefficients)) + [1])


def check_condition_c(alpha: Sequence[RationalLike], width: RationalLike = DEFAULT_WIDTH) -> ConditionCReport:
    """Decide Condition C exactly: every squarefree factor of f must be totally real."""
    return _check_cached(as_alpha(alpha), as_rational(width))


@lru_cache(maxsize=4096)
def _check_cached(alpha: AlphaVector, width: Fraction) -> ConditionCReport:
    f = build_f(alpha)
    verdict = real_rootedness(f)
    roots = isolate_real_roots(f, width)
    if not verdict.holds:
        logger.debug(f"Condition C fails for f = {f}: {len(verdict.deficient)} deficient factor(s)")
    return ConditionCReport(
        holds=verdict.holds,
        f=f,
        roots=roots,
        degree=len(alpha),
        factors=verdict.factors,
    )


def satisfies_condition_c(alpha: Sequence[RationalLike]) -> bool:
    return check_condition_c(alpha).holds


def alpha_from_beta(beta: Sequence[RationalLike]) -> AlphaVector:
    """alpha_i = sigma_i(beta), so f = prod(t + beta_j)."""
    values = as_vector(beta)
    if not values:
        raise RangeError("beta needs at least one entry")
    return tuple(sigma_all(values)[1:])


def alpha_compose(alpha_prime: Sequence[RationalLike], b: RationalLike) -> AlphaVector:
    """Coefficients of (t + b) * f_{alpha'}(t).

    alpha_1 = b + alpha'_1, alpha_i = b alpha'_{i-1} + alpha'_i, alpha_{s'+1} = b alpha'_{s'}.
    An empty alpha' gives (b,).
    """
    previous = as_vector(alpha_prime)
    b = as_rational(b)
    padded = (Fraction(1),) + previous + (Fraction(0),)
    return tuple(b * padded[i - 1] + padded[i] for i in range(1, len(padded)))


def alpha_decompose(alpha: Sequence[RationalLike], minus_b: RationalLike) -> AlphaVector:
    """Deflate f by its root ``minus_b``: the inverse of alpha_compose(., -minus_b).

    For s = 1 the result is the empty tuple.

    Raises:
        NotARootError: If minus_b is not a root of f
    """
    coefficients = as_alpha(alpha)
    root = as_rational(minus_b)
    # synthetic division of f by (t - root), highest degree first
    acc = Fraction(1)
    quotient: List[Fraction] = []
    for a in coefficients:
        quotient.append(acc)
        acc = acc * root + a
    if acc != 0:
        raise NotARootError(f"{format_rational(root)} is not a root of f = {build_f(coefficients)}")
    return tuple(quotient[1:])


def random_condition_c_alpha(s: int, bound: int, seed: int) -> AlphaVector:
    """alpha_from_beta of a seeded random beta; satisfies Condition C by construction.

    Each beta_j has numerator uniform in [-bound, bound] and denominator
    uniform in [1, bound], drawn from SplitMix64(seed).
    """
    beta, _ = random_beta(SplitMix64.seeded(seed), s, bound)
    return alpha_from_beta(beta)


def random_beta(gen: SplitMix64, s: int, bound: int) -> Tuple[Tuple[Fraction, ...], SplitMix64]:
    if s < 1:
        raise RangeError(f"s must be at least 1, got {s}")
    if bound < 1:
        raise RangeError(f"bound must be at least 1, got {bound}")
    beta = []
    for _ in range(s):
        value, gen = gen.next_rational(bound, bound)
        beta.append(value)
    return tuple(beta), gen
