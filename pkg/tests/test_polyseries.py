"""Tests for exact polynomial and truncated-series arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from svtab.series import (
    ALPHA,
    MultiPoly,
    NonExactDivision,
    ONE,
    X,
    Y,
    ZSeries,
    check_reversion,
    solve_M,
    solve_M0,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


def poly_strategy():
    monos = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2))
    return st.dictionaries(monos, st.integers(-9, 9), max_size=5).map(MultiPoly)


def test_poly_basics():
    assert MultiPoly.zero().is_zero()
    assert ONE.is_one()
    assert (X - X).is_zero()
    assert MultiPoly.const(7).constant_value() == 7
    assert X.constant_value() is None
    assert X + Y == Y + X
    assert X * (Y + ALPHA) == X * Y + X * ALPHA
    with pytest.raises(ValueError):
        MultiPoly.var("q")


def test_poly_str():
    assert str(MultiPoly.zero()) == "0"
    assert str(MultiPoly.const(-2)) == "-2"
    assert str(X * X * 3 - Y + ALPHA) == "3*x^2 - y + alpha"


def test_poly_pow():
    assert (X + Y) ** 0 == ONE
    assert (X + Y) ** 2 == X * X + 2 * X * Y + Y * Y
    with pytest.raises(ValueError):
        (X + Y) ** -1


def test_divexact_recovers_factor():
    p = (X + Y) * (ALPHA * 2 + ONE)
    assert p.divexact(X + Y) == ALPHA * 2 + ONE
    assert p.divexact(ALPHA * 2 + ONE) == X + Y


def test_divexact_rejects_inexact():
    with pytest.raises(NonExactDivision):
        (X + ONE).divexact(Y)
    with pytest.raises(NonExactDivision):
        (X * 3).divexact(X * 2)
    with pytest.raises(NonExactDivision):
        X.divexact(MultiPoly.zero())


@settings(max_examples=120, deadline=None)
@given(poly_strategy(), poly_strategy())
def test_divexact_inverts_product(a, b):
    if b.is_zero():
        return
    assert (a * b).divexact(b) == a


def test_substitute_partial():
    p = X * Y + ALPHA * X
    assert p.substitute(x=2) == Y * 2 + ALPHA * 2
    assert p.substitute(x=1, y=1, alpha=1).constant_value() == 2


def test_specialize_fraction():
    p = X * 6 + Y
    assert p.specialize(Fraction(1, 2), Fraction(1, 3), 0) == Fraction(10, 3)


def test_alpha_derivative():
    p = ALPHA * ALPHA * X + ALPHA * 3 + Y
    assert p.alpha_derivative() == ALPHA * X * 2 + MultiPoly.const(3)


def test_zseries_arithmetic():
    z = ZSeries.z(5)
    one = ZSeries.one(5)
    geom = (one - z).unit_inverse()
    assert all(geom[n] == ONE for n in range(6))
    assert (geom * (one - z)) == one
    assert (z * z) == z.shift(1)
    assert z.scale(X)[1] == X
    assert (geom - geom).is_zero()


def test_zseries_mismatched_orders():
    with pytest.raises(ValueError):
        ZSeries.z(3) + ZSeries.z(4)


def test_unit_inverse_needs_unit():
    with pytest.raises(ValueError):
        ZSeries.z(3).unit_inverse()


def test_exact_divide_cancels_valuation():
    z = ZSeries.z(6)
    num = z * z * (ZSeries.one(6) + z)
    got = num.exact_divide(z)
    assert got == z * (ZSeries.one(6) + z)
    assert num.valuation() == 2
    assert ZSeries.zero(6).valuation() is None


def test_exact_divide_rejects_lower_valuation():
    z = ZSeries.z(4)
    with pytest.raises(NonExactDivision):
        ZSeries.one(4).exact_divide(z)


def test_solve_M_satisfies_its_equation():
    order = 10
    m = solve_M(order)
    one = ZSeries.one(order)
    rhs = one + m.shift(1).scale(X + Y) + (m * m).shift(2).scale(ALPHA)
    assert m == rhs
    assert m[0] == ONE


def test_solve_M_catalan_at_unit_values():
    m = solve_M(8, x_val=1, y_val=1, alpha_val=1)
    got = [m[n].constant_value() for n in range(9)]
    assert got == CATALAN[1:10]


def test_solve_M0_satisfies_its_equation():
    order = 10
    m = solve_M(order)
    m0 = solve_M0(order)
    one = ZSeries.one(order)
    denom = one - ZSeries.z(order).scale(Y) - (m.shift(2)).scale(ALPHA)
    assert m0 * denom == one


def test_reversion_check_passes():
    r = check_reversion(12)
    assert r.ok
    assert bool(r)
    assert r.first_mismatch is None


def test_reversion_check_catches_corruption():
    m = solve_M(8)
    coeffs = list(m.coeffs)
    coeffs[5] = coeffs[5] + ONE
    bad = ZSeries(8, coeffs)
    r = check_reversion(8, m=bad)
    assert not r.ok
    assert r.first_mismatch is not None


def test_series_substitute_and_specialize():
    m = solve_M(5)
    at_111 = m.substitute(x=1, y=1, alpha=1)
    assert [at_111[n].constant_value() for n in range(6)] == CATALAN[1:7]
    vals = m.specialize(1, 1, 1)
    assert list(vals) == [Fraction(c) for c in CATALAN[1:7]]


def test_dump_format():
    m = solve_M(3)
    assert m.dump() == ("0: 1\n"
                        "1: x + y\n"
                        "2: x^2 + 2*x*y + y^2 + alpha\n"
                        "3: x^3 + 3*x^2*y + 3*x*y^2 + 3*x*alpha"
                        " + y^3 + 3*y*alpha")
