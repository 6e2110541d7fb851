"""
Shared fixtures: seeded random generators for the property checks.
"""

import random
from fractions import Fraction

import pytest

from newton_maclaurin.condition_c import alpha_from_beta


@pytest.fixture
def rng():
    """A seeded generator so every property run sees the same instances."""
    return random.Random(20240517)


@pytest.fixture
def random_rational(rng):
    """Rational p/q with p uniform in [lo, num_bound] and q uniform in [1, den_bound]."""

    def make(num_bound=12, den_bound=12, nonnegative=False):
        lo = 0 if nonnegative else -num_bound
        return Fraction(rng.randint(lo, num_bound), rng.randint(1, den_bound))

    return make


@pytest.fixture
def random_vector(random_rational):
    def make(n, num_bound=12, den_bound=12, nonnegative=False):
        return tuple(random_rational(num_bound, den_bound, nonnegative) for _ in range(n))

    return make


@pytest.fixture
def random_instance(rng, random_vector):
    """(x, beta, alpha) with alpha built from a real beta, so Condition C holds, and 1 <= s < n - 1."""

    def make(max_n=8, max_s=4, num_bound=12, den_bound=12, nonnegative=False):
        s = rng.randint(1, max_s)
        n = rng.randint(s + 2, max(s + 2, max_n))
        x = random_vector(n, num_bound, den_bound, nonnegative)
        beta = random_vector(s, num_bound, den_bound, nonnegative)
        return x, beta, alpha_from_beta(beta)

    return make
