"""
Unit tests for the inequalities module.
"""

from fractions import Fraction
from math import comb

import pytest

from newton_maclaurin.condition_c import alpha_from_beta
from newton_maclaurin.errors import HypothesisError, RangeError
from newton_maclaurin.inequalities import (
    EqualityCause,
    GapReport,
    certify_complex,
    chain_theta,
    equality_witness,
    general_newton_Q,
    general_newton_S,
    maclaurin_chain_S,
    newton_gap_E,
    newton_gap_S,
    q_gap,
    sigma_gap,
    theta,
)
from newton_maclaurin.symmfn import means_all
from newton_maclaurin.upoly import count_real_roots, squarefree_decomposition

COUNTEREXAMPLE_X = ("1/3", "1/3", "2", "3")


def test_gap_report_fields():
    """Test gap, margin and verdicts of a report."""
    report = GapReport(Fraction(5), Fraction(2), bound=Fraction(3))
    assert report.gap == 3
    assert report.margin == 0
    assert report.holds
    assert report.equality
    assert report.to_json()["margin"] == "0"
    assert str(GapReport(Fraction(1), Fraction(2))) == "gap = -1 (violated)"


def test_newton_gap_E():
    """Test the classical Newton inequality."""
    report = newton_gap_E([1, 2, 3], 1)
    assert report.gap == Fraction(1, 3)
    assert report.holds and not report.equality

    report = newton_gap_E([Fraction(7, 2)] * 4, 2)
    assert report.gap == 0
    assert report.equality
    assert report.equality_cause == EqualityCause.N_EQUAL_ELEMENTS

    assert newton_gap_E([1, -1], 1).gap == 1

    with pytest.raises(RangeError):
        newton_gap_E([1, 2, 3], 3)


def test_newton_gap_E_holds_for_random_vectors(rng, random_vector):
    """Test Newton's inequality on random real vectors."""
    for _ in range(200):
        x = random_vector(rng.randint(2, 7))
        for k in range(1, len(x)):
            assert newton_gap_E(x, k).holds


def test_sigma_gap():
    """Test the sigma form with its theta constant."""
    report = sigma_gap([1, 2, 3], 2)
    assert report.theta == Fraction(2, 3)
    assert report.gap == 85
    assert report.bound == Fraction(242, 3)
    assert report.margin == Fraction(13, 3)
    assert report.holds

    report = sigma_gap([2, 2, 2], 1)
    assert report.margin == 0
    assert report.equality
    assert report.equality_cause == EqualityCause.N_EQUAL_ELEMENTS

    report = sigma_gap([0, 0, 0], 1)
    assert report.holds and report.equality


def test_theta():
    """Test theta against direct binomial evaluation."""
    assert theta(4, 2, 3) == Fraction(7, 16)
    assert theta(3, 0, 1) == Fraction(2, 3)
    assert theta(3, 0, 2) == Fraction(2, 3)
    for n, s, k in [(4, 2, 3), (5, 1, 2), (6, 3, 4)]:
        m = n + s
        expected = Fraction(comb(m, k) ** 2 - comb(m, k - 1) * comb(m, k + 1), comb(m, k) ** 2)
        assert theta(n, s, k) == expected
        assert 0 < theta(n, s, k) < 1

    with pytest.raises(RangeError):
        theta(3, 0, 3)
    with pytest.raises(RangeError):
        theta(3, 0, 0)


def test_chain_theta():
    """Test the product constant of the Q chain."""
    assert chain_theta(4, 1, 2, 3) == theta(4, 1, 2)
    assert chain_theta(4, 1, 2, 4) == (1 + theta(4, 1, 2)) * (1 + theta(4, 1, 3)) - 1


def test_q_gap_counterexample():
    """Test Q_3^2 - Q_2 Q_4 = -10/9 for alpha = (0, 1), which fails Condition C."""
    report = q_gap(COUNTEREXAMPLE_X, ["0", "1"], 3)
    assert report.gap == Fraction(-10, 9)
    assert not report.holds
    assert report.condition_c_verified is False
    assert report.theta == Fraction(7, 16)
    assert report.in_theorem_range
    assert report.to_json()["gap"] == "-10/9"


def test_q_gap_range():
    """Test the accepted k range and the theorem range flag."""
    x, alpha = [1, 2, 5], [3]
    assert q_gap(x, alpha, 3).in_theorem_range
    assert q_gap(x, alpha, 1).holds

    with pytest.raises(RangeError):
        q_gap(x, alpha, 4)
    with pytest.raises(RangeError):
        q_gap([1, 2], [3], 1)


def test_newton_gap_S_without_condition_c():
    """Test the S form on alpha = (0, 1): positive at the Q witness, negative elsewhere."""
    report = newton_gap_S(COUNTEREXAMPLE_X, ["0", "1"], 3)
    assert report.gap == Fraction(2225, 2916)
    assert report.holds
    assert report.condition_c_verified is False

    report = newton_gap_S([1, -1, 1, -1], ["0", "1"], 3)
    assert report.gap == Fraction(-4, 9)
    assert not report.holds


def test_newton_gap_S_with_condition_c():
    """Test S_2^2 - S_1 S_3 for x = (1, 2, 3, 4), alpha = (1)."""
    report = newton_gap_S([1, 2, 3, 4], [1], 2)
    assert report.gap == Fraction(95, 18)
    assert report.condition_c_verified is True
    assert report.equality_cause == EqualityCause.NONE

    with pytest.raises(RangeError):
        newton_gap_S([1, 2, 3, 4], [1], 1)
    with pytest.raises(RangeError):
        newton_gap_S([1, 2, 3], [1, 1], 2)


@pytest.mark.parametrize(
    "x, alpha, k",
    [
        ([2, 2, 2, 5], [-2], 2),
        ([2, 2, 2, 5], [-2], 3),
        ([1, 1, 0], [-1], 2),
        ([1, 1, 1, 0], [-1], 3),
        ([1, 1, 0, 0], [-2, 1], 3),
    ],
)
def test_equality_with_n_equal_elements(x, alpha, k):
    """Test equality when n of the entries of x and the roots of f coincide."""
    report = newton_gap_S(x, alpha, k)
    assert report.gap == 0
    assert report.equality_cause == EqualityCause.N_EQUAL_ELEMENTS
    assert equality_witness(x, alpha, k) == EqualityCause.N_EQUAL_ELEMENTS


def test_equality_witness_both_sides_zero():
    """Test the both-sides-zero cause."""
    # alpha = (0) gives S_k = E_k, and E_3 = E_4 = 0 for x = (0, 0, 1, 2)
    report = newton_gap_S([0, 0, 1, 2], [0], 3)
    assert report.gap == 0
    assert report.equality_cause == EqualityCause.BOTH_SIDES_ZERO
    assert equality_witness([1, 2, 3, 4], [1], 2) == EqualityCause.NONE


def test_equality_crafted_families(rng, random_rational, random_vector):
    """Test 100 crafted equality instances."""
    for i in range(100):
        if i % 2:
            # all entries equal, any real-rooted alpha
            s = rng.randint(1, 3)
            n = rng.randint(s + 2, s + 4)
            x = [random_rational()] * n
            alpha = alpha_from_beta(random_vector(s))
        else:
            # n - 1 copies of v plus the root v of f = t - v
            n = rng.randint(3, 7)
            v = random_rational()
            x = [v] * (n - 1) + [random_rational()]
            rng.shuffle(x)
            alpha = alpha_from_beta([-v])
        for k in range(len(alpha) + 1, n):
            report = newton_gap_S(x, alpha, k)
            assert report.gap == 0
            assert report.equality_cause == EqualityCause.N_EQUAL_ELEMENTS


def test_strict_for_generic_instances(rng, random_vector):
    """Test 100 random instances with distinct entries: the gap is strictly positive."""
    checked = 0
    while checked < 100:
        s = rng.randint(1, 3)
        n = rng.randint(s + 2, s + 4)
        x = random_vector(n, 60, 97)
        if len(set(x)) != n:
            continue
        alpha = alpha_from_beta(random_vector(s, 60, 97))
        k = rng.randint(s + 1, n - 1)
        report = newton_gap_S(x, alpha, k)
        assert report.gap > 0
        assert report.equality_cause == EqualityCause.NONE
        checked += 1


def test_newton_S_holds_under_condition_c(random_instance):
    """Test S_k^2 >= S_{k-1} S_{k+1} on 2000 random instances under Condition C."""
    for _ in range(2000):
        x, _, alpha = random_instance()
        for k in range(len(alpha) + 1, len(x)):
            report = newton_gap_S(x, alpha, k)
            assert report.gap >= 0, (x, alpha, k)
            assert report.condition_c_verified


def test_q_gap_holds_under_condition_c(random_instance):
    """Test Q_k^2 - Q_{k-1} Q_{k+1} >= theta Q_k^2 on 2000 random instances."""
    for _ in range(2000):
        x, _, alpha = random_instance()
        n, s = len(x), len(alpha)
        for k in range(1, n + 1):
            report = q_gap(x, alpha, k)
            assert report.margin >= 0, (x, alpha, k)
            assert report.theta == theta(n, s, k)


def test_maclaurin_chain():
    """Test the chain on x = (1, 2, 3, 4), alpha = (1)."""
    report = maclaurin_chain_S([1, 2, 3, 4], [1], 4)
    assert report.holds
    assert len(report.links) == 3
    # S_1^2 >= S_2 and S_2^3 >= S_3^2
    assert report.links[0].gap == Fraction(49, 4) - Fraction(25, 3)
    assert report.links[1].gap == Fraction(6550, 27)


def test_maclaurin_chain_hypotheses():
    """Test that each hypothesis is named when it fails."""
    with pytest.raises(HypothesisError) as excinfo:
        maclaurin_chain_S([1, 2, 3, 4], [0, 1], 3)
    assert excinfo.value.hypothesis == "condition-c"

    # f = t - 1 has the positive root 1, so beta = -1
    with pytest.raises(HypothesisError) as excinfo:
        maclaurin_chain_S([1, 2, 3, 4], [-1], 3)
    assert excinfo.value.hypothesis == "beta-nonnegative"

    with pytest.raises(HypothesisError) as excinfo:
        maclaurin_chain_S([-1, -2, -3, -4], [1], 3)
    assert excinfo.value.hypothesis == "E_1 >= 0"

    with pytest.raises(RangeError):
        maclaurin_chain_S([1, 2, 3, 4], [1], 5)


def test_maclaurin_chain_random_nonnegative(rng, random_vector):
    """Test 200 random nonnegative instances, then the same instances scaled."""
    for _ in range(200):
        s = rng.randint(1, 3)
        n = rng.randint(s + 2, 7)
        x = random_vector(n, nonnegative=True)
        beta = random_vector(s, nonnegative=True)
        alpha = alpha_from_beta(beta)
        k = rng.randint(2, n)
        report = maclaurin_chain_S(x, alpha, k)
        assert report.holds, (x, alpha, k)
        c = Fraction(rng.randint(1, 20), rng.randint(1, 20))
        scaled = maclaurin_chain_S([c * v for v in x], alpha, k)
        assert [link.holds for link in scaled.links] == [link.holds for link in report.links]


def test_general_newton_S(rng, random_vector):
    """Test S_l S_{k-1} >= S_{l-1} S_k on nonnegative instances."""
    report = general_newton_S([1, 2, 3, 4], [1], 2, 4)
    assert report.holds
    for _ in range(200):
        s = rng.randint(1, 3)
        n = rng.randint(s + 3, 8)
        x = random_vector(n, nonnegative=True)
        alpha = alpha_from_beta(random_vector(s, nonnegative=True))
        l = rng.randint(s + 1, n - 1)
        k = rng.randint(l + 1, n)
        assert general_newton_S(x, alpha, l, k).holds


def test_general_newton_S_single_step_is_newton():
    """Test that l = k - 1 reduces to Newton's inequality."""
    assert general_newton_S([1, 2, 3, 4], [1], 2, 3).gap == newton_gap_S([1, 2, 3, 4], [1], 2).gap == Fraction(95, 18)


def test_general_newton_hypotheses():
    """Test the nonnegativity hypotheses and the index range."""
    # S_3 = E_3 + E_2 < 0 for this x
    with pytest.raises(HypothesisError) as excinfo:
        general_newton_S([-1, -2, -3, -4], [1], 2, 4)
    assert excinfo.value.hypothesis.startswith("S_")
    with pytest.raises(HypothesisError):
        general_newton_Q([-1, -2, -3, -4], [1], 2, 4)
    with pytest.raises(RangeError):
        general_newton_S([1, 2, 3, 4], [1], 1, 3)
    with pytest.raises(RangeError):
        general_newton_Q([1, 2, 3, 4], [1], 3, 3)


def test_general_newton_Q(rng, random_vector):
    """Test Q_l Q_{k-1} >= (1 + Theta) Q_{l-1} Q_k on positive instances."""
    for _ in range(200):
        s = rng.randint(1, 3)
        n = rng.randint(s + 3, 8)
        x = tuple(v + 1 for v in random_vector(n, nonnegative=True))
        alpha = alpha_from_beta(random_vector(s, nonnegative=True))
        l = rng.randint(s + 1, n - 1)
        k = rng.randint(l + 1, n)
        report = general_newton_Q(x, alpha, l, k)
        assert report.theta == chain_theta(n, s, l, k)
        assert report.holds, (x, alpha, l, k)


def test_certify_complex():
    """Test the non-real root certificate."""
    certificate = certify_complex([0, 1, 0], [2], 2)
    assert certificate is not None
    assert certificate.report.gap == -3
    assert str(certificate.polynomial) == "t^3 + 3*t"
    g = certificate.polynomial
    real = sum(count_real_roots(factor) * m for factor, m in squarefree_decomposition(g))
    assert real < g.degree

    certificate = certify_complex([1, 0, 1], [0], 2)
    assert certificate.report.gap == -1
    assert str(certificate.polynomial) == "t^3 + 3*t^2 + 1"


def test_certify_complex_no_conclusion_for_real_vectors():
    """Test that means of a real vector never yield a certificate."""
    assert certify_complex(means_all([1, 2, 3, 4])[1:], [1], 2) is None


def test_certify_complex_requirements():
    """Test the Condition C and range requirements."""
    with pytest.raises(HypothesisError):
        certify_complex([0, 1, 0], [0, 1], 2)
    with pytest.raises(RangeError):
        certify_complex([0, 1, 0], [2], 3)


def test_theta_range_exhaustive():
    """Test 0 < theta(n, s, k) < 1 for every n <= 30, s <= 6 and legal k."""
    for n in range(1, 31):
        for s in range(0, 7):
            for k in range(1, n + s):
                assert 0 < theta(n, s, k) < 1, (n, s, k)


def test_chain_theta_can_exceed_one():
    """Test that the product constant is positive but not bounded by 1."""
    assert chain_theta(4, 1, 2, 4) == Fraction(5, 4)
    for n, s, l, k in [(5, 1, 2, 5), (6, 2, 3, 6), (4, 1, 2, 3)]:
        assert chain_theta(n, s, l, k) > 0


def test_sigma_gap_bound_uses_theta(rng, random_vector):
    """Test that the sigma form carries theta(n, 0, k) and bound = theta * lhs."""
    for _ in range(200):
        x = random_vector(rng.randint(2, 8))
        k = rng.randint(1, len(x) - 1)
        report = sigma_gap(x, k)
        assert report.theta == theta(len(x), 0, k)
        assert report.bound == theta(len(x), 0, k) * report.lhs
        assert report.holds


def test_zero_beta_reduces_to_newton(rng, random_vector):
    """Test that beta = 0 turns the S form into the classical Newton inequality."""
    for _ in range(200):
        s = rng.randint(1, 4)
        x = random_vector(rng.randint(s + 2, 8))
        alpha = alpha_from_beta([0] * s)
        assert alpha == (0,) * s
        k = rng.randint(s + 1, len(x) - 1)
        combined, classical = newton_gap_S(x, alpha, k), newton_gap_E(x, k)
        assert (combined.lhs, combined.rhs, combined.gap) == (classical.lhs, classical.rhs, classical.gap)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_q_gap_equality_when_augmented_vector_is_constant(k):
    """Test the equality cause when x and beta share one value."""
    report = q_gap([2, 2, 2], alpha_from_beta([2]), k)
    assert report.equality
    assert report.equality_cause == EqualityCause.N_EQUAL_ELEMENTS


def test_q_gap_equality_causes():
    """Test the both-sides-zero cause and the strict case."""
    report = q_gap([0, 0, 0, 1], [0], 3)
    assert report.lhs == 0 and report.rhs == 0
    assert report.equality_cause == EqualityCause.BOTH_SIDES_ZERO

    # beta = -2 puts the root of f at 2, which does not make Y constant
    report = q_gap([2, 2, 2], alpha_from_beta([-2]), 2)
    assert report.equality_cause == EqualityCause.NONE

    report = q_gap([1, 2, 3, 4], [1], 2)
    assert not report.equality
    assert report.equality_cause == EqualityCause.NONE
    assert report.to_json()["equality_cause"] == "none"
