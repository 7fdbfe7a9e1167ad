"""Graded nilpotent rings, series, push-forwards, blow-up coefficients."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gwgr.charclass import (
    GradedRingSpec,
    RewriteRule,
    RingElement,
    RingSeries,
    diagonal_blowup_correction,
    diagonal_blowup_ring,
    even_degree_identity,
    expected_wall_correction,
    pushforward_power,
    series_inverse,
    theta_integral,
    theta_ring,
    wall_crossing_correction,
    wall_crossing_ring,
)
from gwgr.errors import NonUnitConstantTerm, TruncationTooLow
from gwgr.numerics import binomial


def test_theta_integral_pinned():
    assert theta_integral(2, 4, 3) == 16


def test_theta_integral_grid():
    for g in range(0, 5):
        for k in range(2, 7):
            for d in range(g, 5):
                assert theta_integral(g, k, d) == k**g, (g, k, d)


def test_theta_ring_truncates():
    spec = theta_ring(3)
    theta = RingElement.generator(spec, "theta")
    assert (theta * theta * theta * theta).is_zero()
    assert not (theta * theta * theta).is_zero()


@pytest.mark.parametrize("d", [2, 4, 6])
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_diagonal_blowup_coefficient(d, k):
    if k * d > 30:
        pytest.skip("outside floating budget for the attended grid")
    for n in range(0, k * d // 2 + 1):
        m = k * d - 2 * n
        assert diagonal_blowup_correction(d, k, n) == -k * 2**m, (d, k, n)
        assert even_degree_identity(d, k, n)


@pytest.mark.parametrize("k", [3, 4])
@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_wall_crossing_coefficient(d, k):
    for l in range(d // 2 + 1, d + 1):
        for n in range(0, k * d // 2 + 1):
            got = wall_crossing_correction(d, k, l, n)
            assert got == expected_wall_correction(d, k, l, n), (d, k, l, n)


def test_wall_correction_formula_shape():
    d, k, l, n = 3, 4, 2, 1
    m = k * d - 2 * n
    assert expected_wall_correction(d, k, l, n) == (-1) ** d * k**2 * binomial(m, k * l - n)


def test_even_degree_identity_zero_exponent_edge():
    # d=4 k=3 n=6 has m = 0: both sides reduce to constants
    assert even_degree_identity(4, 3, 6)


coeff = st.integers(-4, 4).map(Fraction)


@settings(max_examples=50, deadline=None)
@given(st.lists(coeff, min_size=0, max_size=4))
def test_series_inverse_is_involutive(tail):
    spec = theta_ring(6)
    theta = RingElement.generator(spec, "theta")
    coeffs = [RingElement.one(spec)]
    power = RingElement.one(spec)
    for c in tail:
        power = power * theta
        coeffs.append(power.scaled(c))
    series = RingSeries(tuple(coeffs))
    inv = series_inverse(series)
    assert series_inverse(inv).coeffs == series.coeffs
    prod = series * inv
    assert prod[0] == RingElement.one(spec)
    for i in range(1, prod.order + 1):
        assert prod[i].is_zero()


def test_series_inverse_rejects_non_unit():
    spec = theta_ring(2)
    series = RingSeries((RingElement.zero(spec), RingElement.one(spec)))
    with pytest.raises(NonUnitConstantTerm):
        series_inverse(series)


def test_series_truncation_guard():
    spec = theta_ring(2)
    series = RingSeries.one(spec, order=2)
    with pytest.raises(TruncationTooLow):
        series[3]


def test_pushforward_index_rules():
    spec = theta_ring(4)
    theta = RingElement.generator(spec, "theta")
    coeffs = tuple(theta.scaled(Fraction(i)) for i in range(6))
    series = RingSeries(coeffs)
    fiber = 3
    # levels below fiber rank - 1 vanish
    assert pushforward_power(0, fiber, series).is_zero()
    assert pushforward_power(1, fiber, series).is_zero()
    # level fiber-1+j picks out coefficient j of the inverse-series tail
    assert pushforward_power(fiber - 1, fiber, series) == series[0]
    assert pushforward_power(fiber - 1 + 2, fiber, series) == series[2]
    with pytest.raises(TruncationTooLow):
        pushforward_power(fiber - 1 + 6, fiber, series)


def test_rewrite_rules_and_confluence():
    # toy ring: a^2 -> 2b, with b nilpotent square-zero
    spec = GradedRingSpec(
        generators=("a", "b"),
        degrees=(1, 2),
        nilpotent=(0, 2),
        top_degree=4,
        evaluation={(0, 2): Fraction(1)},
        rewrites=(RewriteRule((2, 0), Fraction(2), (0, 1)),),
    )
    assert spec.check_confluence()
    a = RingElement.generator(spec, "a")
    b = RingElement.generator(spec, "b")
    assert a * a == b.scaled(Fraction(2))
    # a^4 -> 4 b^2 -> 0
    assert (a * a * a * a).is_zero()
    assert (b * b).is_zero()
    assert ((a * a) * (a * a)).evaluate() == 0
    assert (b.scaled(Fraction(3, 2)) * b).evaluate() == 0


def test_ring_evaluation_reads_top_degree_only():
    spec = theta_ring(2)
    theta = RingElement.generator(spec, "theta")
    assert (theta * theta).evaluate() == Fraction(2)  # functional theta^g -> g!
    assert theta.evaluate() == 0
    assert RingElement.one(spec).evaluate() == 0


def test_bridge_rings_are_confluent():
    assert diagonal_blowup_ring(2, 3).check_confluence()
    assert wall_crossing_ring(3, 3, 2).check_confluence()


def test_segre_chern_product_is_one():
    # the normal-series inverse used by the diagonal ring: s(t) * c(t) = 1
    spec = diagonal_blowup_ring(2, 4)
    w = RingElement.generator(spec, "w")
    order = 6
    c = RingSeries.linear(RingElement.one(spec), w, order)
    s = series_inverse(c)
    prod = c * s
    assert prod[0] == RingElement.one(spec)
    assert all(prod[i].is_zero() for i in range(1, order + 1))
