"""
Unit tests for the schema module.
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from newton_maclaurin.rng import MASK64
from newton_maclaurin.schema import (
    AugmentQuery,
    CombinationQuery,
    ConstructQuery,
    GapForm,
    SearchConfig,
    SweepQuery,
    ThetaQuery,
    VectorQuery,
)


def test_rational_field_validation():
    """Test that rationals arrive as tokens or integers and nothing else."""
    query = CombinationQuery(x=["1/3", 2, "-10/9"], alpha=["0", "1"], k=3)
    assert query.x == [Fraction(1, 3), Fraction(2), Fraction(-10, 9)]
    assert query.alpha == [Fraction(0), Fraction(1)]

    # Floats are refused
    with pytest.raises(ValidationError):
        VectorQuery(x=[1.5])

    # Decimal tokens are refused
    with pytest.raises(ValidationError):
        VectorQuery(x=["1.5"])

    # Zero denominators are refused
    with pytest.raises(ValidationError):
        VectorQuery(x=["1/0"])

    # Booleans are not integers here
    with pytest.raises(ValidationError):
        VectorQuery(x=[True])


def test_rational_field_serialization():
    """Test that rationals serialize back to their text form."""
    query = CombinationQuery(x=["2/4", 3], alpha=["-6/9"], k=1)
    dumped = query.model_dump()
    assert dumped["x"] == ["1/2", "3"]
    assert dumped["alpha"] == ["-2/3"]
    assert dumped["k"] == 1


def test_query_validation():
    """Test required fields, defaults and ignored keys."""
    assert VectorQuery(x=[1, 2]).k is None

    # Missing k
    with pytest.raises(ValidationError):
        CombinationQuery(x=[1, 2, 3], alpha=[1])

    # Empty x
    with pytest.raises(ValidationError):
        VectorQuery(x=[])

    # Empty alpha
    with pytest.raises(ValidationError):
        CombinationQuery(x=[1, 2, 3], alpha=[], k=2)

    construct = ConstructQuery(x=[1, 2, 3], comment="unused")
    assert construct.b == 0
    assert not hasattr(construct, "comment")

    augment = AugmentQuery()
    assert augment.x == [] and augment.beta == []

    assert ThetaQuery(n=4, k=2).s == 0


def test_sweep_query():
    """Test the sweep document and its form selector."""
    sweep = SweepQuery(alpha=["0", "1"], k=3, grid=[["1/3", "1/3", "2", "3"]])
    assert sweep.form == GapForm.Q
    assert sweep.grid[0][0] == Fraction(1, 3)

    assert SweepQuery(alpha=[1], k=1, form="S").form == GapForm.S

    with pytest.raises(ValidationError):
        SweepQuery(alpha=[1], k=1, form="R")


def test_search_config_validation():
    """Test search configuration validation."""
    cfg = SearchConfig(alpha=["0", "1"], k=3, n=4, seed=20240101)
    assert cfg.samples == 10000
    assert cfg.numerator_bound == 12
    assert cfg.denominator_bound == 12
    assert cfg.target == GapForm.Q

    # Seed is required
    with pytest.raises(ValidationError):
        SearchConfig(alpha=["0", "1"], k=3, n=4)

    # Seed must fit in 64 bits
    SearchConfig(alpha=["0", "1"], k=3, n=4, seed=MASK64)
    with pytest.raises(ValidationError):
        SearchConfig(alpha=["0", "1"], k=3, n=4, seed=MASK64 + 1)

    # Budget and bounds must be positive
    with pytest.raises(ValidationError):
        SearchConfig(alpha=["0", "1"], k=3, n=4, seed=1, samples=0)
    with pytest.raises(ValidationError):
        SearchConfig(alpha=["0", "1"], k=3, n=4, seed=1, numerator_bound=0)

    # The S-form needs n >= k + 1
    with pytest.raises(ValidationError):
        SearchConfig(alpha=["0", "1"], k=3, n=3, seed=1, target="S")

    # The Q-form accepts k up to n + s - 1
    SearchConfig(alpha=["0", "1"], k=4, n=3, seed=1, target="Q")
    with pytest.raises(ValidationError):
        SearchConfig(alpha=["0", "1"], k=5, n=3, seed=1, target="Q")


def test_search_config_negative_seed():
    """Test that negative seeds are read as signed 64-bit values."""
    assert SearchConfig(alpha=["0", "1"], k=3, n=4, seed=-1).seed == MASK64
    assert SearchConfig(alpha=["0", "1"], k=3, n=4, seed=-(1 << 63)).seed == 1 << 63
    with pytest.raises(ValidationError):
        SearchConfig(alpha=["0", "1"], k=3, n=4, seed=-(1 << 63) - 1)
