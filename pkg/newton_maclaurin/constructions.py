"""
Derived polynomials and the other constructions behind the inequalities.

For x with P(t) = prod(t - x_i):

    P1(t) = sum_k (-1)^k C(n-1, k) E_k(x) t^(n-1-k)      (P'(t) / n)
    P2(t) = sum_k (-1)^k C(n-1, k) E_{k+1}(x) t^(n-1-k)
    P3(t) = P2(t) + b P1(t)

and P(t) = t P1(t) - P2(t). P3 is real-rooted for every real x and b, which
is what lets Newton's inequality climb from s - 1 to s alpha-terms.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import mpmath

from .arith import RationalLike, as_rational, as_vector, binom, format_rational
from .condition_c import DEFAULT_WIDTH, alpha_compose
from .errors import HypothesisError, RangeError
from .symmfn import VariableVector, as_variables, combine, means_all, sigma_all
from .upoly import (
    FactorCount,
    Polynomial,
    RootIsolation,
    T,
    isolate_real_roots,
    poly_from_roots,
    real_rootedness,
    separate,
    squarefree_decomposition,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DerivedTriple:
    P: Polynomial
    P1: Polynomial
    P2: Polynomial

    def to_json(self) -> Dict[str, object]:
        return {"P": self.P.to_json(), "P1": self.P1.to_json(), "P2": self.P2.to_json()}


@dataclass(frozen=True)
class RealRootedReport:
    """Total-reality verdict for one polynomial, with its isolated real roots."""

    holds: bool
    polynomial: Polynomial
    roots: RootIsolation
    factors: Tuple[FactorCount, ...]

    def to_json(self) -> Dict[str, object]:
        return {
            "holds": self.holds,
            "polynomial": self.polynomial.to_json(),
            "roots": self.roots.to_json(),
        }

    def __str__(self) -> str:
        verdict = "real-rooted" if self.holds else "NOT real-rooted"
        return f"{self.polynomial} is {verdict}; real roots: {', '.join(str(r) for r in self.roots) or 'none'}"


@dataclass(frozen=True)
class InterlacingReport:
    """Merged root order of P1 (``y``) and P2 (``z``), left to right."""

    holds: bool
    p1_roots: RootIsolation
    p2_roots: RootIsolation
    order: str

    def to_json(self) -> Dict[str, object]:
        return {
            "holds": self.holds,
            "order": self.order,
            "p1_roots": self.p1_roots.to_json(),
            "p2_roots": self.p2_roots.to_json(),
        }

    def __str__(self) -> str:
        return f"root order {self.order or '(none)'}: {'interlaced' if self.holds else 'NOT interlaced'}"


@dataclass(frozen=True)
class SpecialLagrangianForm:
    """F(x) = sign * scale * S_{k;s}(x) for the special Lagrangian operator."""

    k: int
    s: int
    alpha: Tuple[Fraction, ...]
    sign: int
    scale: int

    def to_json(self) -> Dict[str, object]:
        return {
            "k": self.k,
            "s": self.s,
            "alpha": [format_rational(a) for a in self.alpha],
            "sign": self.sign,
        }

    def __str__(self) -> str:
        alpha = ", ".join(format_rational(a) for a in self.alpha)
        return f"F = {self.sign * self.scale} * S_{{{self.k};{self.s}}} with alpha = ({alpha})"


def _require_two(x: Sequence[RationalLike]) -> VariableVector:
    values = as_variables(x)
    if len(values) < 2:
        raise RangeError(f"the derived polynomials need n >= 2, got n = {len(values)}")
    return values


def _alternating(values: Sequence[Fraction], n: int) -> Polynomial:
    """sum_k (-1)^k C(n-1, k) values[k] t^(n-1-k)."""
    top = n - 1
    coeffs = [Fraction(0)] * n
    for k in range(n):
        coeffs[top - k] = (-1) ** k * binom(top, k) * values[k]
    return Polynomial(coeffs)


def build_P1(x: Sequence[RationalLike]) -> Polynomial:
    values = _require_two(x)
    return _alternating(means_all(values), len(values))


def build_P2(x: Sequence[RationalLike]) -> Polynomial:
    values = _require_two(x)
    return _alternating(means_all(values)[1:], len(values))


def build_P3(x: Sequence[RationalLike], b: RationalLike) -> Polynomial:
    """P2 + b P1, built from the bracket E_{k+1}(x) + b E_k(x)."""
    values = _require_two(x)
    b = as_rational(b)
    means = means_all(values)
    return _alternating([means[k + 1] + b * means[k] for k in range(len(values))], len(values))


def derived_triple(x: Sequence[RationalLike]) -> DerivedTriple:
    values = _require_two(x)
    return DerivedTriple(poly_from_roots(values), build_P1(values), build_P2(values))


def verify_P_decomposition(x: Sequence[RationalLike]) -> bool:
    """True iff P(t) = t P1(t) - P2(t) coefficient by coefficient."""
    triple = derived_triple(x)
    return triple.P == T * triple.P1 - triple.P2


def _real_rooted_report(p: Polynomial, width: RationalLike) -> RealRootedReport:
    verdict = real_rootedness(p)
    roots = RootIsolation() if p.is_constant else isolate_real_roots(p, width)
    return RealRootedReport(verdict.holds, p, roots, verdict.factors)


def verify_P3_real_rooted(
    x: Sequence[RationalLike], b: RationalLike, width: RationalLike = DEFAULT_WIDTH
) -> RealRootedReport:
    """Squarefree decomposition plus Sturm counts applied to P3; roots isolated to ``width``."""
    p3 = build_P3(x, b)
    report = _real_rooted_report(p3, width)
    if not report.holds:
        logger.warning(f"P3 = {p3} failed the total-reality test")
    return report


def verify_interlacing(x: Sequence[RationalLike], width: RationalLike = DEFAULT_WIDTH) -> InterlacingReport:
    """Check that the roots of P2 separate adjacent roots of P1.

    Both root sets are isolated, refined until no interval of one overlaps
    an interval of the other, then read left to right. The roots interlace
    when no two neighbours in that order belong to the same polynomial.

    Raises:
        HypothesisError: If x has repeated entries
    """
    values = _require_two(x)
    if len(set(values)) != len(values):
        raise HypothesisError("distinct-entries", "interlacing needs pairwise distinct entries of x")
    p1, p2 = build_P1(values), build_P2(values)
    p1_roots = isolate_real_roots(p1, width)
    p2_roots = RootIsolation() if p2.is_constant else isolate_real_roots(p2, width)

    p1_factors = {g for g, _ in squarefree_decomposition(p1)}
    merged = separate(list(p1_roots) + list(p2_roots))
    order = "".join("y" if entry.factor in p1_factors else "z" for entry in merged)
    holds = len(p1_roots) == len(values) - 1 and all(a != b for a, b in zip(order, order[1:]))
    logger.debug(f"Interlacing of P1 = {p1} and P2 = {p2}: {order}")
    return InterlacingReport(
        holds,
        RootIsolation(tuple(e for e in merged if e.factor in p1_factors)),
        RootIsolation(tuple(e for e in merged if e.factor not in p1_factors)),
        order,
    )


def augment(x: Sequence[RationalLike], beta: Sequence[RationalLike]) -> VariableVector:
    """Y_s = (beta_1, ..., beta_s, x_1, ..., x_n).

    sigma_k(Y_s) = Q_{k;s}(x) for alpha = alpha_from_beta(beta).
    """
    return as_vector(beta) + as_vector(x)


def implied_means(x: Sequence[RationalLike], b: RationalLike) -> List[Fraction]:
    """Symmetric means [E_0(y), ..., E_{n-1}(y)] of the roots y of P3.

    Read off the coefficients of P3 as E_k(y) = (E_{k+1}(x) + b E_k(x)) / (E_1(x) + b).

    Raises:
        HypothesisError: If E_1(x) + b = 0, where P3 loses its top degree
    """
    values = _require_two(x)
    b = as_rational(b)
    means = means_all(values)
    lead = means[1] + b
    if lead == 0:
        raise HypothesisError("E_1 + b != 0", "P3 drops degree when E_1(x) + b = 0")
    return [(means[k + 1] + b * means[k]) / lead for k in range(len(values))]


def verify_composition_identity(
    x: Sequence[RationalLike], alpha_prime: Sequence[RationalLike], b: RationalLike, k: int
) -> bool:
    """(E_1(x) + b) S'_{k;s'}(y) = S_{k+1;s}(x) with alpha = alpha_compose(alpha', b).

    S' is taken over the roots y of P3, through implied_means, so the check
    stays exact even though y is irrational in general.
    """
    values = _require_two(x)
    previous = as_vector(alpha_prime)
    b = as_rational(b)
    n, s_prev = len(values), len(previous)
    if not s_prev <= k <= n - 1:
        raise RangeError(f"need s' <= k <= n - 1, got k = {k} with n = {n}, s' = {s_prev}")
    means = means_all(values)
    lhs = (means[1] + b) * combine(implied_means(values, b), previous, k)
    rhs = combine(means, alpha_compose(previous, b), k + 1)
    return lhs == rhs


def special_lagrangian_alpha(n: int) -> SpecialLagrangianForm:
    """Normalize F(x) = sum_k (-1)^k sigma_{2k+1}(x) into S_{K;s} form.

    F = sum_k (-1)^k C(n, 2k+1) E_{2k+1}(x). K is the largest odd index
    <= n, s = K - 1, and dividing by the coefficient of E_K gives the alpha
    vector; sign and scale restore F exactly.
    """
    if n < 3:
        raise RangeError(f"the special Lagrangian form needs n >= 3, got n = {n}")
    half = (n - 1) // 2
    top_index = 2 * half + 1
    coefficients = [0] * (top_index + 1)
    for k in range(half + 1):
        coefficients[2 * k + 1] = (-1) ** k * binom(n, 2 * k + 1)
    top = coefficients[top_index]
    alpha = tuple(Fraction(coefficients[top_index - i], top) for i in range(1, top_index))
    return SpecialLagrangianForm(top_index, top_index - 1, alpha, 1 if top > 0 else -1, abs(top))


def special_lagrangian_value(x: Sequence[RationalLike]) -> Fraction:
    """F(x) = sigma_1 - sigma_3 + sigma_5 - ..."""
    sigmas = sigma_all(as_variables(x))
    return sum(((-1) ** k * sigmas[2 * k + 1] for k in range((len(sigmas) - 2) // 2 + 1)), Fraction(0))


def special_lagrangian_roots(n: int, dps: int = 30) -> List[mpmath.mpf]:
    """tan(m pi / n) for 0 < |m| < n/2, ascending: the roots of f for special_lagrangian_alpha(n)."""
    if n < 3:
        raise RangeError(f"the special Lagrangian form needs n >= 3, got n = {n}")
    half = (n - 1) // 2
    with mpmath.workdps(dps):
        return [mpmath.tan(m * mpmath.pi / n) for m in range(-half, half + 1) if m != 0]
