"""Symmetric-polynomial layer: potential, relations, Hessian class."""

from fractions import Fraction

import pytest
import sympy

from gwgr.errors import InvalidGrassmannian
from gwgr.numerics import GuardedComplex, UnityAngle
from gwgr.sympoly import (
    MultiPoly,
    elementary_symmetric,
    hessian_class,
    lg_potential,
    lg_potential_via_log,
    power_sums,
    relation_polys,
)


def _to_sympy(p, xs):
    expr = sympy.Integer(0)
    for expo, coeff in p.terms.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for x, e in zip(xs, expo):
            term *= x**e
        expr += term
    return sympy.expand(expr)


def _sympy_power_sum(n, r, xs):
    # Newton recurrence in sympy symbols, truncated to e_i = 0 for i > r
    ps = {}
    for m in range(1, n + 1):
        acc = sympy.Integer(0)
        for i in range(1, m):
            xi = xs[i - 1] if i <= r else sympy.Integer(0)
            acc += (-1) ** (i - 1) * xi * ps[m - i]
        xm = xs[m - 1] if m <= r else sympy.Integer(0)
        acc += (-1) ** (m - 1) * m * xm
        ps[m] = sympy.expand(acc)
    return ps[n]


def test_pinned_potential_strings():
    assert str(lg_potential(1, 4)) == "1/5 X1^5"
    assert str(lg_potential(2, 3)) == "1/4 X1^4 - X1^2 X2 + 1/2 X2^2"
    assert str(lg_potential_via_log(1, 2)) == "1/3 X1^3"


def test_pinned_relation_strings():
    assert [str(y) for y in relation_polys(1, 2)] == ["-X1", "X1^2"]
    assert [str(y) for y in relation_polys(2, 3)] == [
        "-X1",
        "X1^2 - X2",
        "-X1^3 + 2 X1 X2",
    ]


def test_pinned_hessian_strings():
    assert str(hessian_class(2, 3)) == "X1^2 + 2 X2"
    assert str(hessian_class(1, 3)) == "3 X1^2"


@pytest.mark.parametrize("r,k", [(1, 3), (2, 4), (3, 5), (2, 7)])
def test_power_sums_match_sympy_newton(r, k):
    xs = sympy.symbols(f"x1:{r + 1}")
    for n, p in enumerate(power_sums(r, k + 1), start=1):
        assert sympy.expand(_to_sympy(p, xs) - _sympy_power_sum(n, r, xs)) == 0


@pytest.mark.parametrize("r,k", [(1, 2), (2, 3), (2, 5), (3, 6), (4, 7)])
def test_relations_are_inverse_series_coefficients(r, k):
    xs = sympy.symbols(f"x1:{r + 1}")
    t = sympy.Symbol("t")
    denom = 1 + sum(x * t**i for i, x in enumerate(xs, start=1))
    series = sympy.series(1 / denom, t, 0, k + 1).removeO()
    ys = relation_polys(r, k)
    for i in range(1, k + 1):
        expected = sympy.expand(series.coeff(t, i))
        assert sympy.expand(_to_sympy(ys[i - 1], xs) - expected) == 0


@pytest.mark.parametrize("r,k", [(1, 2), (2, 3), (2, 4), (3, 5), (4, 6)])
def test_hessian_matches_sympy_determinant(r, k):
    xs = sympy.symbols(f"x1:{r + 1}")
    w = _to_sympy(lg_potential(r, k), xs)
    mat = sympy.Matrix(r, r, lambda i, j: sympy.diff(w, xs[i], xs[j]))
    expected = sympy.expand((-1) ** (r * (r - 1) // 2) * mat.det())
    assert sympy.expand(_to_sympy(hessian_class(r, k), xs) - expected) == 0


def test_dual_potential_constructions_agree():
    for k in range(2, 11):
        for r in range(1, k):
            assert lg_potential(r, k) == lg_potential_via_log(r, k)


def test_gradient_recovers_relations():
    # d/dX_i of the degree-(k+1) potential equals (-1)^k * Y_{k+1-i}
    for k in range(2, 9):
        for r in range(1, k):
            w = lg_potential(r, k)
            ys = relation_polys(r, k)
            for i in range(r):
                assert w.diff(i) == ys[k - 1 - i].scaled(Fraction((-1) ** k))


@pytest.mark.parametrize("r,k", [(1, 4), (2, 3), (2, 6), (3, 5)])
def test_weighted_homogeneity(r, k):
    assert lg_potential(r, k).weighted_homogeneous_degree() == k + 1
    assert hessian_class(r, k).weighted_homogeneous_degree() == r * (k + 1) - r * (r + 1)


def test_elementary_symmetric_specialization():
    # substituting e_i of fresh variables into the potential recovers the
    # separated form sum_a u_a^(k+1)/(k+1)
    r, k = 2, 4
    us = sympy.symbols("u1 u2")
    xs = sympy.symbols("x1 x2")
    w = _to_sympy(lg_potential(r, k), xs)
    subs = {
        xs[0]: us[0] + us[1],
        xs[1]: us[0] * us[1],
    }
    separated = sympy.expand(sum(u ** (k + 1) for u in us) / (k + 1))
    assert sympy.expand(w.subs(subs) - separated) == 0


def test_elementary_symmetric_builder():
    e2 = elementary_symmetric(3, 2)
    xs = sympy.symbols("a b c")
    expected = sympy.expand(sympy.symmetric_poly(2, xs))
    assert sympy.expand(_to_sympy(e2, xs) - expected) == 0


def test_eval_guarded_matches_eval_exact_at_rationals():
    p = hessian_class(2, 5)
    values = [Fraction(3, 7), Fraction(-2, 5)]
    exact = p.eval_exact(values)
    guarded = p.eval_guarded([GuardedComplex.from_fraction(v) for v in values])
    assert abs(guarded.re - float(exact)) <= max(guarded.err, 1e-12)
    assert abs(guarded.im) <= guarded.err


def test_eval_at_unity_angles():
    # h for G(1,3) is 3 X1^2; at X1 = primitive cube root the value is 3 zeta^2
    h = hessian_class(1, 3)
    zeta = UnityAngle.of(1, 3).to_guarded()
    val = h.eval_guarded([zeta])
    expected = (UnityAngle.of(2, 3).to_guarded()).scale(3)
    assert abs(val.re - expected.re) < 1e-12
    assert abs(val.im - expected.im) < 1e-12


def test_rejects_bad_grassmannian():
    for r, k in ((0, 3), (3, 3), (4, 2), (-1, 5)):
        with pytest.raises(InvalidGrassmannian):
            lg_potential(r, k)
    with pytest.raises(InvalidGrassmannian):
        relation_polys(5, 4)
    with pytest.raises(InvalidGrassmannian):
        hessian_class(3, 2)


def test_multipoly_arithmetic_basics():
    x1 = MultiPoly.variable(2, 0)
    x2 = MultiPoly.variable(2, 1)
    p = (x1 + x2) ** 2 - x1**2 - x2**2
    assert p == (x1 * x2).scaled(Fraction(2))
    assert (p - p).is_zero()
    assert str(MultiPoly.constant(2, Fraction(-1, 4))) == "-1/4"
