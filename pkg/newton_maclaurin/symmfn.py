"""
Elementary symmetric functions and their combinations.

sigma_k(x) is the sum of all k-fold products of distinct entries of x,
E_k(x) = sigma_k(x) / C(n, k) is the k-th symmetric mean, and the combined
operators are

    S_{k;s}(x) = E_k(x) + sum_i alpha_i E_{k-i}(x)
    Q_{k;s}(x) = sigma_k(x) + sum_i alpha_i sigma_{k-i}(x)

Inside S and Q, sigma and E with an index outside 0..n are zero.
"""

from fractions import Fraction
from itertools import combinations
from math import prod
from typing import List, Sequence, Tuple

from .arith import RationalLike, as_vector, binom
from .errors import RangeError

# the guard on literal subset enumeration
BRUTEFORCE_MAX_N = 20

VariableVector = Tuple[Fraction, ...]
AlphaVector = Tuple[Fraction, ...]


def as_variables(x: Sequence[RationalLike]) -> VariableVector:
    values = as_vector(x)
    if not values:
        raise RangeError("a variable vector needs at least one entry")
    return values


def as_alpha(alpha: Sequence[RationalLike]) -> AlphaVector:
    values = as_vector(alpha)
    if not values:
        raise RangeError("an alpha vector needs at least one entry")
    return values


def sigma_all(x: Sequence[RationalLike]) -> List[Fraction]:
    """[sigma_0, ..., sigma_n] by the one-pass product recurrence."""
    sigmas = [Fraction(1)]
    for xi in as_vector(x):
        sigmas.append(Fraction(0))
        for k in range(len(sigmas) - 1, 0, -1):
            sigmas[k] += xi * sigmas[k - 1]
    return sigmas


def sigma(x: Sequence[RationalLike], k: int) -> Fraction:
    """sigma_k(x), zero outside 0..n."""
    sigmas = sigma_all(x)
    if 0 <= k < len(sigmas):
        return sigmas[k]
    return Fraction(0)


def sigma_bruteforce(x: Sequence[RationalLike], k: int) -> Fraction:
    """sigma_k(x) by literal enumeration of k-subsets; an independent oracle."""
    values = as_vector(x)
    if len(values) > BRUTEFORCE_MAX_N:
        raise RangeError(f"subset enumeration is limited to n <= {BRUTEFORCE_MAX_N}, got n = {len(values)}")
    if k < 0 or k > len(values):
        return Fraction(0)
    return sum((prod(subset, start=Fraction(1)) for subset in combinations(values, k)), Fraction(0))


def means_all(x: Sequence[RationalLike]) -> List[Fraction]:
    """[E_0, ..., E_n]."""
    sigmas = sigma_all(x)
    n = len(sigmas) - 1
    return [s / binom(n, k) for k, s in enumerate(sigmas)]


def e_mean(x: Sequence[RationalLike], k: int) -> Fraction:
    """E_k(x) = sigma_k(x) / C(n, k).

    Raises:
        RangeError: If k is outside 0..n
    """
    values = as_variables(x)
    n = len(values)
    if k < 0 or k > n:
        raise RangeError(f"E_k needs 0 <= k <= n = {n}, got k = {k}")
    return sigma_all(values)[k] / binom(n, k)


def combine(values: Sequence[Fraction], alpha: Sequence[Fraction], k: int) -> Fraction:
    """values[k] + sum_i alpha_i values[k-i], out-of-range entries taken as zero."""

    def at(j: int) -> Fraction:
        return values[j] if 0 <= j < len(values) else Fraction(0)

    return at(k) + sum((a * at(k - i) for i, a in enumerate(alpha, start=1)), Fraction(0))


def s_eval(x: Sequence[RationalLike], alpha: Sequence[RationalLike], k: int) -> Fraction:
    """S_{k;s}(x).

    Raises:
        RangeError: If k is outside 0..n
    """
    values = as_variables(x)
    n = len(values)
    if k < 0 or k > n:
        raise RangeError(f"S_k needs 0 <= k <= n = {n}, got k = {k}")
    return combine(means_all(values), as_alpha(alpha), k)


def q_eval(x: Sequence[RationalLike], alpha: Sequence[RationalLike], k: int) -> Fraction:
    """Q_{k;s}(x).

    Raises:
        RangeError: If k is outside 0..n+s
    """
    values = as_variables(x)
    coefficients = as_alpha(alpha)
    top = len(values) + len(coefficients)
    if k < 0 or k > top:
        raise RangeError(f"Q_k needs 0 <= k <= n + s = {top}, got k = {k}")
    return combine(sigma_all(values), coefficients, k)


def s_values(x: Sequence[RationalLike], alpha: Sequence[RationalLike]) -> List[Fraction]:
    """[S_0, ..., S_n] in one pass over the means."""
    means = means_all(as_variables(x))
    coefficients = as_alpha(alpha)
    return [combine(means, coefficients, k) for k in range(len(means))]


def q_values(x: Sequence[RationalLike], alpha: Sequence[RationalLike]) -> List[Fraction]:
    """[Q_0, ..., Q_{n+s}]."""
    sigmas = sigma_all(as_variables(x))
    coefficients = as_alpha(alpha)
    return [combine(sigmas, coefficients, k) for k in range(len(sigmas) + len(coefficients))]
