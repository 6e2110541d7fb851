"""
Exact evaluation of Newton-Maclaurin type inequalities.

Every check returns a GapReport with the two sides of the inequality as
exact rationals. Plain forms (``lhs >= rhs``) have bound 0; the theta forms
``lhs - rhs >= theta * lhs`` keep ``gap = lhs - rhs`` and move the theta term
into ``bound``, so the reported gap is the quantity the literature quotes.

Checks whose theorem needs Condition C still evaluate when it fails and
flag ``condition_c_verified = False``; the Maclaurin chain and the general
Newton forms turn their nonnegativity hypotheses into HypothesisError.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .arith import RationalLike, as_vector, binom, format_rational
from .condition_c import build_f, check_condition_c, satisfies_condition_c
from .errors import HypothesisError, RangeError
from .symmfn import (
    as_alpha,
    as_variables,
    combine,
    means_all,
    q_values,
    s_values,
    sigma_all,
)
from .upoly import POS_INF, Polynomial, count_real_roots, root_multiplicity

logger = logging.getLogger(__name__)


class EqualityCause(str, Enum):
    """Why an inequality is tight on an instance."""
    N_EQUAL_ELEMENTS = "n-equal-elements"
    BOTH_SIDES_ZERO = "both-sides-zero"
    NONE = "none"


@dataclass(frozen=True)
class GapReport:
    """Exact outcome of one inequality ``lhs >= rhs + bound``."""

    lhs: Fraction
    rhs: Fraction
    bound: Fraction = Fraction(0)
    equality_cause: EqualityCause = EqualityCause.NONE
    condition_c_verified: Optional[bool] = None
    theta: Optional[Fraction] = None
    in_theorem_range: bool = True
    label: str = ""

    @property
    def gap(self) -> Fraction:
        return self.lhs - self.rhs

    @property
    def margin(self) -> Fraction:
        return self.gap - self.bound

    @property
    def holds(self) -> bool:
        return self.margin >= 0

    @property
    def equality(self) -> bool:
        return self.margin == 0

    def to_json(self) -> Dict[str, object]:
        payload: Dict[str, object] = {
            "gap": format_rational(self.gap),
            "holds": self.holds,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "bound": format_rational(self.bound),
            "margin": format_rational(self.margin),
            "equality": self.equality,
            "equality_cause": self.equality_cause.value,
            "condition_c_verified": self.condition_c_verified,
            "in_theorem_range": self.in_theorem_range,
        }
        if self.theta is not None:
            payload["theta"] = format_rational(self.theta)
        if self.label:
            payload["label"] = self.label
        return payload

    def __str__(self) -> str:
        verdict = "holds" if self.holds else "violated"
        text = f"gap = {format_rational(self.gap)} ({verdict})"
        if self.bound:
            text += f", bound = {format_rational(self.bound)}, margin = {format_rational(self.margin)}"
        return text


@dataclass(frozen=True)
class MaclaurinChainReport:
    """Per-link verdicts of S_1 >= S_2^(1/2) >= ... >= S_k^(1/k)."""

    k: int
    links: Tuple[GapReport, ...]

    @property
    def holds(self) -> bool:
        return all(link.holds for link in self.links)

    def to_json(self) -> Dict[str, object]:
        return {"k": self.k, "holds": self.holds, "links": [link.to_json() for link in self.links]}

    def __str__(self) -> str:
        lines = [f"{link.label}: {link}" for link in self.links]
        lines.append(f"chain {'holds' if self.holds else 'violated'}")
        return "\n".join(lines)


@dataclass(frozen=True)
class ComplexRootCertificate:
    """Evidence that g(t) = sum_j C(n,j) E_j t^(n-j) has non-real roots."""

    polynomial: Polynomial
    k: int
    alpha: Tuple[Fraction, ...]
    report: GapReport

    def to_json(self) -> Dict[str, object]:
        return {
            "has_complex_roots": True,
            "g": self.polynomial.to_json(),
            "k": self.k,
            "alpha": [format_rational(a) for a in self.alpha],
            "gap": format_rational(self.report.gap),
        }

    def __str__(self) -> str:
        return f"g(t) = {self.polynomial} has complex roots (gap = {format_rational(self.report.gap)} < 0)"


def _require_theorem_range(n: int, s: int) -> None:
    if not 1 <= s < n - 1:
        raise RangeError(f"the combined inequalities need 1 <= s < n - 1, got n = {n}, s = {s}")


def _equal_elements_cause(values: Sequence[Fraction], f: Optional[Polynomial]) -> bool:
    """Some value fills n slots among the entries of x and the roots of f."""
    n = len(values)
    for v in set(values):
        extra = root_multiplicity(f, v) if f is not None else 0
        if values.count(v) + extra >= n:
            return True
    return False


def _augmented_equal_cause(values: Sequence[Fraction], f: Polynomial) -> bool:
    """Every entry of Y = (beta, x) is the same value: x constant and f = (t + v)^s."""
    v = values[0]
    return all(e == v for e in values) and root_multiplicity(f, -v) == f.degree


def _equality_cause(
    values: Sequence[Fraction], f: Optional[Polynomial], lhs: Fraction, rhs: Fraction
) -> EqualityCause:
    if _equal_elements_cause(values, f):
        return EqualityCause.N_EQUAL_ELEMENTS
    if lhs == 0 and rhs == 0:
        return EqualityCause.BOTH_SIDES_ZERO
    return EqualityCause.NONE


def theta(n: int, s: int, k: int) -> Fraction:
    """((C_{n+s}^k)^2 - C_{n+s}^{k-1} C_{n+s}^{k+1}) / (C_{n+s}^k)^2.

    With s = 0 this is the constant of the sigma form of Newton's inequality.
    """
    if n < 1 or s < 0:
        raise RangeError(f"theta needs n >= 1 and s >= 0, got n = {n}, s = {s}")
    m = n + s
    if not 1 <= k <= m - 1:
        raise RangeError(f"theta needs 1 <= k <= n + s - 1 = {m - 1}, got k = {k}")
    middle = binom(m, k)
    return Fraction(middle * middle - binom(m, k - 1) * binom(m, k + 1), middle * middle)


def chain_theta(n: int, s: int, l: int, k: int) -> Fraction:
    """Theta for Q_l Q_{k-1} >= (1 + Theta) Q_{l-1} Q_k.

    The ratios Q_q / Q_{q-1} decrease by at least a factor (1 + theta_q) at
    each q = l..k-1, so 1 + Theta is the product of those factors. Each
    factor lies in (1, 2), so Theta > 0 but Theta is not confined to (0, 1):
    chain_theta(4, 1, 2, 4) = 5/4.
    """
    factor = Fraction(1)
    for q in range(l, k):
        factor *= 1 + theta(n, s, q)
    return factor - 1


def newton_gap_E(x: Sequence[RationalLike], k: int) -> GapReport:
    """Classical Newton inequality E_k^2 >= E_{k-1} E_{k+1}."""
    values = as_variables(x)
    n = len(values)
    if not 1 <= k <= n - 1:
        raise RangeError(f"Newton's inequality needs 1 <= k <= n - 1 = {n - 1}, got k = {k}")
    means = means_all(values)
    lhs, rhs = means[k] ** 2, means[k - 1] * means[k + 1]
    cause = _equality_cause(values, None, lhs, rhs) if lhs == rhs else EqualityCause.NONE
    return GapReport(lhs, rhs, equality_cause=cause, label=f"E_{k}^2 >= E_{k - 1} E_{k + 1}")


def sigma_gap(x: Sequence[RationalLike], k: int) -> GapReport:
    """sigma_k^2 - sigma_{k-1} sigma_{k+1} >= theta sigma_k^2 with theta = theta(n, 0, k)."""
    values = as_variables(x)
    n = len(values)
    if not 1 <= k <= n - 1:
        raise RangeError(f"the sigma form needs 1 <= k <= n - 1 = {n - 1}, got k = {k}")
    sigmas = sigma_all(values)
    th = theta(n, 0, k)
    lhs, rhs = sigmas[k] ** 2, sigmas[k - 1] * sigmas[k + 1]
    bound = th * lhs
    cause = _equality_cause(values, None, lhs, rhs) if lhs - rhs == bound else EqualityCause.NONE
    return GapReport(
        lhs, rhs, bound=bound, equality_cause=cause, theta=th,
        label=f"sigma_{k}^2 - sigma_{k - 1} sigma_{k + 1} >= theta sigma_{k}^2",
    )


def equality_witness(x: Sequence[RationalLike], alpha: Sequence[RationalLike], k: int) -> EqualityCause:
    """Classify why S_k^2 = S_{k-1} S_{k+1} could be tight on this instance."""
    values = as_variables(x)
    coefficients = as_alpha(alpha)
    n, s = len(values), len(coefficients)
    _require_theorem_range(n, s)
    if not s + 1 <= k <= n - 1:
        raise RangeError(f"need s + 1 <= k <= n - 1, got k = {k} with n = {n}, s = {s}")
    if _equal_elements_cause(values, build_f(coefficients)):
        return EqualityCause.N_EQUAL_ELEMENTS
    s_vals = s_values(values, coefficients)
    if s_vals[k] == 0 and s_vals[k - 1] * s_vals[k + 1] == 0:
        return EqualityCause.BOTH_SIDES_ZERO
    return EqualityCause.NONE


def newton_gap_S(x: Sequence[RationalLike], alpha: Sequence[RationalLike], k: int) -> GapReport:
    """S_{k;s}^2 >= S_{k-1;s} S_{k+1;s} for s + 1 <= k <= n - 1."""
    values = as_variables(x)
    coefficients = as_alpha(alpha)
    n, s = len(values), len(coefficients)
    _require_theorem_range(n, s)
    if not s + 1 <= k <= n - 1:
        raise RangeError(f"need s + 1 <= k <= n - 1, got k = {k} with n = {n}, s = {s}")
    s_vals = s_values(values, coefficients)
    lhs, rhs = s_vals[k] ** 2, s_vals[k - 1] * s_vals[k + 1]
    cause = equality_witness(values, coefficients, k) if lhs == rhs else EqualityCause.NONE
    return GapReport(
        lhs, rhs,
        equality_cause=cause,
        condition_c_verified=satisfies_condition_c(coefficients),
        label=f"S_{k}^2 >= S_{k - 1} S_{k + 1}",
    )


def q_gap(x: Sequence[RationalLike], alpha: Sequence[RationalLike], k: int) -> GapReport:
    """Q_k^2 - Q_{k-1} Q_{k+1} >= theta(n, s, k) Q_k^2.

    Accepts 1 <= k <= n + s - 1; ``in_theorem_range`` marks k <= n. The
    bound is attained when every entry of Y = (beta, x) is equal, or when
    both sides vanish.
    """
    values = as_variables(x)
    coefficients = as_alpha(alpha)
    n, s = len(values), len(coefficients)
    _require_theorem_range(n, s)
    if not 1 <= k <= n + s - 1:
        raise RangeError(f"need 1 <= k <= n + s - 1 = {n + s - 1}, got k = {k}")
    q_vals = q_values(values, coefficients)
    th = theta(n, s, k)
    lhs, rhs = q_vals[k] ** 2, q_vals[k - 1] * q_vals[k + 1]
    bound = th * lhs
    cause = EqualityCause.NONE
    if lhs - rhs == bound:
        if _augmented_equal_cause(values, build_f(coefficients)):
            cause = EqualityCause.N_EQUAL_ELEMENTS
        elif lhs == 0 and rhs == 0:
            cause = EqualityCause.BOTH_SIDES_ZERO
    return GapReport(
        lhs, rhs,
        bound=bound,
        equality_cause=cause,
        condition_c_verified=satisfies_condition_c(coefficients),
        theta=th,
        in_theorem_range=k <= n,
        label=f"Q_{k}^2 - Q_{k - 1} Q_{k + 1} >= theta Q_{k}^2",
    )


def maclaurin_chain_S(x: Sequence[RationalLike], alpha: Sequence[RationalLike], k: int) -> MaclaurinChainReport:
    """Certify S_1 >= S_2^(1/2) >= ... >= S_k^(1/k) link by link.

    Each link S_m^(1/m) >= S_{m+1}^(1/(m+1)) is compared as
    S_m^(m+1) >= S_{m+1}^m, valid because both sides are nonnegative under
    the hypotheses.

    Raises:
        HypothesisError: Naming the first hypothesis that fails
    """
    values = as_variables(x)
    coefficients = as_alpha(alpha)
    n, s = len(values), len(coefficients)
    _require_theorem_range(n, s)
    if not 2 <= k <= n:
        raise RangeError(f"the Maclaurin chain needs 2 <= k <= n = {n}, got k = {k}")

    report = check_condition_c(coefficients)
    if not report.holds:
        raise HypothesisError("condition-c", f"alpha fails Condition C: {report.f} has non-real roots")
    # roots of f are -beta: beta >= 0 means no root of f in (0, +inf)
    for fc in report.factors:
        if count_real_roots(fc.factor, Fraction(0), POS_INF):
            raise HypothesisError("beta-nonnegative", f"f = {report.f} has a positive root, so some beta_j < 0")
    means = means_all(values)
    for i in range(1, s + 1):
        if means[i] < 0:
            raise HypothesisError(f"E_{i} >= 0", f"E_{i}(x) = {format_rational(means[i])} is negative")
    s_vals = s_values(values, coefficients)
    for m in range(s, k + 1):
        if s_vals[m] < 0:
            raise HypothesisError(f"S_{m} >= 0", f"S_{m}(x) = {format_rational(s_vals[m])} is negative")

    links = tuple(
        GapReport(
            s_vals[m] ** (m + 1),
            s_vals[m + 1] ** m,
            condition_c_verified=True,
            label=f"S_{m}^(1/{m}) >= S_{m + 1}^(1/{m + 1})",
        )
        for m in range(1, k)
    )
    return MaclaurinChainReport(k, links)


def _require_general_range(n: int, s: int, l: int, k: int) -> None:
    _require_theorem_range(n, s)
    if not s < l < k <= n:
        raise RangeError(f"need s < l < k <= n, got s = {s}, l = {l}, k = {k}, n = {n}")


def general_newton_S(x: Sequence[RationalLike], alpha: Sequence[RationalLike], l: int, k: int) -> GapReport:
    """S_l S_{k-1} >= S_{l-1} S_k, given S_q >= 0 for q = l..k-1."""
    values = as_variables(x)
    coefficients = as_alpha(alpha)
    n, s = len(values), len(coefficients)
    _require_general_range(n, s, l, k)
    s_vals = s_values(values, coefficients)
    for q in range(l, k):
        if s_vals[q] < 0:
            raise HypothesisError(f"S_{q} >= 0", f"S_{q}(x) = {format_rational(s_vals[q])} is negative")
    lhs, rhs = s_vals[l] * s_vals[k - 1], s_vals[l - 1] * s_vals[k]
    cause = _equality_cause(values, build_f(coefficients), lhs, rhs) if lhs == rhs else EqualityCause.NONE
    return GapReport(
        lhs, rhs,
        equality_cause=cause,
        condition_c_verified=satisfies_condition_c(coefficients),
        label=f"S_{l} S_{k - 1} >= S_{l - 1} S_{k}",
    )


def general_newton_Q(x: Sequence[RationalLike], alpha: Sequence[RationalLike], l: int, k: int) -> GapReport:
    """Q_l Q_{k-1} >= (1 + Theta) Q_{l-1} Q_k, given Q_q >= 0 for q = l..k-1."""
    values = as_variables(x)
    coefficients = as_alpha(alpha)
    n, s = len(values), len(coefficients)
    _require_general_range(n, s, l, k)
    q_vals = q_values(values, coefficients)
    for q in range(l, k):
        if q_vals[q] < 0:
            raise HypothesisError(f"Q_{q} >= 0", f"Q_{q}(x) = {format_rational(q_vals[q])} is negative")
    big_theta = chain_theta(n, s, l, k)
    lhs, rhs = q_vals[l] * q_vals[k - 1], q_vals[l - 1] * q_vals[k]
    return GapReport(
        lhs, rhs,
        bound=big_theta * rhs,
        condition_c_verified=satisfies_condition_c(coefficients),
        theta=big_theta,
        label=f"Q_{l} Q_{k - 1} >= (1 + Theta) Q_{l - 1} Q_{k}",
    )


def certify_complex(
    e_values: Sequence[RationalLike], alpha: Sequence[RationalLike], k: int
) -> Optional[ComplexRootCertificate]:
    """Certify non-real roots of g(t) = t^n + C(n,1) E_1 t^(n-1) + ... + C(n,n) E_n.

    If the means came from a real vector, Newton's inequality for S would
    hold under Condition C; a negative gap therefore proves g is not
    real-rooted. Returns None when the gap is nonnegative (no conclusion).
    """
    means = (Fraction(1),) + as_vector(e_values)
    coefficients = as_alpha(alpha)
    n, s = len(means) - 1, len(coefficients)
    if not check_condition_c(coefficients).holds:
        raise HypothesisError("condition-c", "the certificate needs alpha to satisfy Condition C")
    if not s < k < n:
        raise RangeError(f"need s < k < n, got s = {s}, k = {k}, n = {n}")
    lhs = combine(means, coefficients, k) ** 2
    rhs = combine(means, coefficients, k - 1) * combine(means, coefficients, k + 1)
    report = GapReport(lhs, rhs, condition_c_verified=True, label=f"S_{k}^2 >= S_{k - 1} S_{k + 1}")
    if report.holds:
        return None
    g = Polynomial(binom(n, n - i) * means[n - i] for i in range(n + 1))
    logger.info(f"Non-real roots certified for g(t) = {g} (gap {format_rational(report.gap)})")
    return ComplexRootCertificate(g, k, coefficients, report)
