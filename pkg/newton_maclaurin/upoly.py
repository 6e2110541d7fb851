"""
Univariate polynomials over the rationals.

This module holds the exact polynomial machinery the rest of the lab is
built on: arithmetic and calculus, gcd via primitive pseudo-remainder
sequences over the integers, Yun's squarefree decomposition, Sturm chains,
real root counting and bisection-based root isolation.

Coefficients are stored low degree first: ``coeffs[i]`` multiplies ``t**i``.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .arith import RationalLike, as_rational, format_rational, sign
from .errors import (
    NotSquarefreeError,
    PolynomialError,
    RangeError,
    UndefinedGcdError,
)

logger = logging.getLogger(__name__)

# Degree of the zero polynomial. Compares below every valid degree and is
# never a usable index.
DEGREE_OF_ZERO = -math.inf

NEG_INF = -math.inf
POS_INF = math.inf

Endpoint = Union[Fraction, float]
Scalar = Union[Fraction, int]


class Polynomial:
    """Immutable dense polynomial in ``t`` with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        values = [as_rational(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def constant(cls, value: RationalLike) -> "Polynomial":
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> "Polynomial":
        return cls([0] * degree + [coefficient])

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> Union[int, float]:
        """Degree, or DEGREE_OF_ZERO for the zero polynomial."""
        if not self._coeffs:
            return DEGREE_OF_ZERO
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise PolynomialError("the zero polynomial has no monic associate")
        lead = self.leading_coefficient
        return Polynomial(c / lead for c in self._coeffs)

    def derivative(self) -> "Polynomial":
        return poly_derivative(self)

    def __call__(self, t: RationalLike) -> Fraction:
        return poly_eval(self, as_rational(t))

    @staticmethod
    def _lift(other: Union["Polynomial", Scalar]) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (Fraction, int)) and not isinstance(other, bool):
            return Polynomial([other])
        return None

    def __add__(self, other):
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        size = max(len(self._coeffs), len(rhs._coeffs))
        return Polynomial(self.coefficient(i) + rhs.coefficient(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        lhs = self._lift(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other):
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        if self.is_zero or rhs.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(rhs._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(rhs._coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return poly_divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: List[str] = []
        for power in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = format_rational(magnitude)
            else:
                var = "t" if power == 1 else f"t^{power}"
                body = var if magnitude == 1 else f"{format_rational(magnitude)}*{var}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def to_json(self) -> Dict[str, List[str]]:
        return {"coeffs": [format_rational(c) for c in self._coeffs]}


T = Polynomial([0, 1])


def poly_from_roots(roots: Sequence[RationalLike]) -> Polynomial:
    """Monic polynomial prod(t - r) over the given roots."""
    coeffs = [Fraction(1)]
    for r in roots:
        r = as_rational(r)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= r * c
        coeffs = nxt
    return Polynomial(coeffs)


def poly_derivative(p: Polynomial) -> Polynomial:
    return Polynomial(i * c for i, c in enumerate(p.coeffs) if i > 0)


def poly_eval(p: Polynomial, t: Fraction) -> Fraction:
    """Exact Horner evaluation."""
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def poly_divmod(a: Polynomial, b: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """Euclidean division a = q*b + r with deg r < deg b."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b.coeffs) - 1
    if a.degree < db:
        return Polynomial(), a
    rem = list(a.coeffs)
    lead = b.leading_coefficient
    quot = [Fraction(0)] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] / lead
        if not c:
            continue
        quot[i - db] = c
        for j, bj in enumerate(b.coeffs):
            rem[i - db + j] -= c * bj
    return Polynomial(quot), Polynomial(rem[:db])


def poly_exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    q, r = poly_divmod(a, b)
    if not r.is_zero:
        raise PolynomialError(f"{b} does not divide {a}")
    return q


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _primitive(ints: List[int]) -> List[int]:
    """Divide out the content and make the leading coefficient positive."""
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if g == 0:
        return []
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _integer_primitive(p: Polynomial) -> List[int]:
    """Clear denominators, then take the primitive part."""
    den = 1
    for c in p.coeffs:
        den = _lcm(den, c.denominator)
    return _primitive([c.numerator * (den // c.denominator) for c in p.coeffs])


def _pseudo_remainder(a: List[int], b: List[int]) -> List[int]:
    """prem(a, b) up to a positive power of lc(b), over the integers."""
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    while r and len(r) - 1 >= db:
        coef = r[-1]
        shift = len(r) - 1 - db
        r = [lead * c for c in r]
        for j, bj in enumerate(b):
            r[shift + j] -= coef * bj
        while r and r[-1] == 0:
            r.pop()
    return r


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor.

    Runs the primitive pseudo-remainder sequence over the integers so the
    intermediate coefficients stay small.

    Raises:
        UndefinedGcdError: If both inputs are zero
    """
    if p.is_zero and q.is_zero:
        raise UndefinedGcdError("gcd(0, 0) is undefined")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    a = _integer_primitive(p)
    b = _integer_primitive(q)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_remainder(a, b)
        a, b = b, _primitive(r)
    return Polynomial(a).monic()


def is_squarefree(p: Polynomial) -> bool:
    if p.is_zero:
        return False
    if p.degree < 2:
        return True
    return poly_gcd(p, p.derivative()).degree == 0


def squarefree_decomposition(p: Polynomial) -> List[Tuple[Polynomial, int]]:
    """Yun's algorithm.

    Returns monic, pairwise coprime squarefree factors ``g`` with
    multiplicities ``m`` (increasing) so that
    ``p == p.leading_coefficient * prod(g**m)``. Constants give ``[]``.
    """
    if p.is_zero:
        raise PolynomialError("squarefree decomposition of the zero polynomial")
    f = p.monic()
    if f.degree == 0:
        return []
    fp = f.derivative()
    a0 = poly_gcd(f, fp)
    b = poly_exact_div(f, a0)
    c = poly_exact_div(fp, a0)
    d = c - b.derivative()
    factors: List[Tuple[Polynomial, int]] = []
    multiplicity = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            factors.append((a, multiplicity))
        b = poly_exact_div(b, a)
        c = poly_exact_div(d, a)
        d = c - b.derivative()
        multiplicity += 1
    return factors


def sturm_sequence(p: Polynomial) -> List[Polynomial]:
    """Canonical Sturm chain p, p', -rem(p_{i-1}, p_i), ..."""
    if p.is_zero:
        raise PolynomialError("Sturm sequence of the zero polynomial")
    chain = [p]
    if p.degree == 0:
        return chain
    chain.append(p.derivative())
    while True:
        _, r = poly_divmod(chain[-2], chain[-1])
        if r.is_zero:
            break
        chain.append(-r)
    return chain


def _sign_at(p: Polynomial, t: Endpoint) -> int:
    if t == POS_INF:
        return sign(p.leading_coefficient)
    if t == NEG_INF:
        s = sign(p.leading_coefficient)
        return -s if p.degree % 2 else s
    return sign(poly_eval(p, t))


def sign_variations(chain: Sequence[Polynomial], t: Endpoint) -> int:
    """Sign changes of the chain at t, zeros dropped."""
    signs = [s for s in (_sign_at(q, t) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count(chain: Sequence[Polynomial], lo: Endpoint, hi: Endpoint) -> int:
    return sign_variations(chain, lo) - sign_variations(chain, hi)


@lru_cache(maxsize=512)
def _cached_chain(p: Polynomial) -> Tuple[Polynomial, ...]:
    return tuple(sturm_sequence(p))


def count_real_roots(p: Polynomial, lo: Endpoint = NEG_INF, hi: Endpoint = POS_INF) -> int:
    """Distinct real roots of a squarefree p in the half-open interval (lo, hi].

    Zero chain values are dropped, which evaluates the chain at the right
    limit of each endpoint: a root at ``hi`` is counted, a root at ``lo`` is
    not.

    Raises:
        NotSquarefreeError: If p has a repeated factor
        RangeError: If lo >= hi
    """
    if p.is_zero:
        raise PolynomialError("root count of the zero polynomial")
    if not lo < hi:
        raise RangeError(f"empty interval ({lo}, {hi}]")
    if not is_squarefree(p):
        raise NotSquarefreeError(f"{p} is not squarefree; decompose it first")
    return _count(sturm_sequence(p), lo, hi)


def root_bound(p: Polynomial) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    if p.is_zero or p.degree < 1:
        raise PolynomialError(f"root bound of a constant polynomial: {p}")
    lead = abs(p.leading_coefficient)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead


def root_multiplicity(p: Polynomial, value: RationalLike) -> int:
    """Multiplicity of ``value`` as a root, by repeated synthetic division."""
    if p.is_zero:
        raise PolynomialError("root multiplicity in the zero polynomial")
    value = as_rational(value)
    coeffs = list(p.coeffs)
    multiplicity = 0
    while len(coeffs) > 1:
        # synthetic division by (t - value), highest degree first
        acc = Fraction(0)
        quotient = []
        for c in reversed(coeffs):
            acc = acc * value + c
            quotient.append(acc)
        if quotient.pop() != 0:
            break
        coeffs = list(reversed(quotient))
        multiplicity += 1
    return multiplicity


@dataclass(frozen=True)
class RootInterval:
    """One distinct real root: the exact point ``lo == hi`` or inside ``(lo, hi)``.

    ``factor`` is the squarefree factor the root belongs to. An open interval
    holds exactly one root of it strictly inside.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int
    factor: Polynomial = field(compare=False, repr=False)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def approximate(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def precedes(self, other: "RootInterval") -> bool:
        """True when every point of self lies left of every point of other."""
        if self.is_point and other.is_point:
            return self.lo < other.lo
        return self.hi <= other.lo

    def bisect(self) -> "RootInterval":
        """Halve the interval, keeping the half that holds the root."""
        if self.is_point:
            return self
        mid = (self.lo + self.hi) / 2
        if poly_eval(self.factor, mid) == 0:
            return replace(self, lo=mid, hi=mid)
        if _count(_cached_chain(self.factor), self.lo, mid):
            return replace(self, hi=mid)
        return replace(self, lo=mid)

    def refine(self, width: Fraction) -> "RootInterval":
        entry = self
        while not entry.is_point and entry.width > width:
            entry = entry.bisect()
        return entry

    def to_json(self) -> Dict[str, Union[str, int]]:
        return {"lo": format_rational(self.lo), "hi": format_rational(self.hi), "mult": self.multiplicity}

    def __str__(self) -> str:
        where = format_rational(self.lo) if self.is_point else f"({format_rational(self.lo)}, {format_rational(self.hi)})"
        return f"{where} x{self.multiplicity}"


@dataclass(frozen=True)
class RootIsolation:
    """Disjoint isolating intervals, sorted left to right."""

    entries: Tuple[RootInterval, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[RootInterval]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> RootInterval:
        return self.entries[index]

    @property
    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def refine(self, width: RationalLike) -> "RootIsolation":
        width = as_rational(width)
        if width <= 0:
            raise RangeError(f"isolation width must be positive, got {width}")
        return RootIsolation(tuple(e.refine(width) for e in self.entries))

    def to_json(self) -> List[Dict[str, Union[str, int]]]:
        return [e.to_json() for e in self.entries]


def _isolate_squarefree(g: Polynomial, multiplicity: int, width: Fraction) -> List[RootInterval]:
    if g.degree == 1:
        root = -g.coeffs[0] / g.coeffs[1]
        return [RootInterval(root, root, multiplicity, g)]
    chain = _cached_chain(g)
    bound = root_bound(g)
    found: List[RootInterval] = []
    stack = [(-bound, bound, _count(chain, -bound, bound))]
    while stack:
        lo, hi, count = stack.pop()
        if count == 0:
            continue
        if count == 1 and hi - lo <= width:
            found.append(RootInterval(lo, hi, multiplicity, g))
            continue
        mid = (lo + hi) / 2
        upto_mid = _count(chain, lo, mid)
        at_mid = poly_eval(g, mid) == 0
        if at_mid:
            found.append(RootInterval(mid, mid, multiplicity, g))
        stack.append((mid, hi, count - upto_mid))
        stack.append((lo, mid, upto_mid - at_mid))
    return found


def separate(entries: Iterable[RootInterval]) -> List[RootInterval]:
    """Sort root intervals of distinct roots and bisect until pairwise disjoint."""
    ordered = sorted(entries, key=lambda e: (e.lo, e.hi))
    rounds = 0
    while True:
        clash = next(
            (i for i in range(len(ordered) - 1) if not ordered[i].precedes(ordered[i + 1])),
            None,
        )
        if clash is None:
            break
        a, b = ordered[clash], ordered[clash + 1]
        if b.is_point or (not a.is_point and a.width >= b.width):
            ordered[clash] = a.bisect()
        else:
            ordered[clash + 1] = b.bisect()
        ordered.sort(key=lambda e: (e.lo, e.hi))
        rounds += 1
    if rounds:
        logger.debug(f"Separated {len(ordered)} root intervals in {rounds} bisections")
    return ordered


def isolate_real_roots(p: Polynomial, width: RationalLike = Fraction(1, 1000)) -> RootIsolation:
    """Isolate every distinct real root of p, with multiplicity.

    Intervals are at most ``width`` long; roots of linear squarefree factors
    and roots hit by a bisection midpoint are reported as exact points.
    """
    if p.is_zero:
        raise PolynomialError("root isolation of the zero polynomial")
    width = as_rational(width)
    if width <= 0:
        raise RangeError(f"isolation width must be positive, got {width}")
    entries: List[RootInterval] = []
    for g, m in squarefree_decomposition(p):
        entries.extend(_isolate_squarefree(g, m, width))
    return RootIsolation(tuple(separate(entries)))


@dataclass(frozen=True)
class FactorCount:
    factor: Polynomial
    multiplicity: int
    real_roots: int

    @property
    def totally_real(self) -> bool:
        return self.real_roots == self.factor.degree


@dataclass(frozen=True)
class RealRootedness:
    """Whether every root of a polynomial is real, counted with multiplicity."""

    holds: bool
    factors: Tuple[FactorCount, ...]

    @property
    def deficient(self) -> Tuple[FactorCount, ...]:
        """Squarefree factors with fewer real roots than their degree."""
        return tuple(fc for fc in self.factors if not fc.totally_real)

    def to_json(self) -> Dict[str, object]:
        return {
            "holds": self.holds,
            "factors": [
                {"factor": fc.factor.to_json(), "mult": fc.multiplicity, "real_roots": fc.real_roots}
                for fc in self.factors
            ],
        }


def real_rootedness(p: Polynomial) -> RealRootedness:
    """Total-reality test: each squarefree factor has as many real roots as its degree.

    The zero polynomial and nonzero constants count as real-rooted.
    """
    if p.is_zero:
        return RealRootedness(True, ())
    counts = tuple(
        FactorCount(g, m, _count(_cached_chain(g), NEG_INF, POS_INF))
        for g, m in squarefree_decomposition(p)
    )
    return RealRootedness(all(fc.totally_real for fc in counts), counts)
