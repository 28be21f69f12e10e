"""Core arithmetic, canonical forms, and the long-division oracle."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polydiv.polycore import (
    DivisionResult,
    Polynomial,
    ZeroDivisor,
    add,
    divisor_views,
    evaluate,
    long_divide,
    monic_reduction,
    mul,
    normalize,
    scale,
)

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=6)
polys = st.lists(rationals, max_size=8).map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero)
divisors = st.tuples(
    st.lists(rationals, max_size=6),
    rationals.filter(lambda c: c != 0),
).map(lambda t: Polynomial(list(t[0]) + [t[1]]))


def test_normalize_strips_trailing_zeros():
    assert normalize([1, 2, 0, 0]) == Polynomial([1, 2])


def test_normalize_all_zero_is_canonical_zero():
    p = normalize([0, 0])
    assert p.is_zero
    assert p.coeffs == ()
    assert p.degree is None


def test_normalize_identity_on_canonical_input():
    assert normalize([Fraction(1, 2)]).coeffs == (Fraction(1, 2),)


@given(polys)
def test_normalize_idempotent(p):
    assert Polynomial(p.coeffs) == p


def test_degree_and_lead():
    p = Polynomial([2, 3, 0, 5])
    assert p.degree == 3
    assert p.lead == 5
    with pytest.raises(ZeroDivisor):
        Polynomial([]).lead


def test_coeff_out_of_range_reads_zero():
    p = Polynomial([1, 2])
    assert p.coeff(5) == 0
    assert p.coeff(-1) == 0


def test_evaluate_examples():
    assert evaluate(Polynomial([1, 0, 1]), 2) == 5
    assert evaluate(Polynomial([7, 3, -2]), 0) == 7
    assert evaluate(Polynomial([Fraction(-1, 2), 3]), Fraction(1, 3)) == Fraction(1, 2)


def test_ring_op_examples():
    assert mul(Polynomial([-1, 1]), Polynomial([1, 1])) == Polynomial([-1, 0, 1])
    p = Polynomial([2, 0, 3])
    assert add(p, Polynomial()) == p
    assert scale(p, 0).is_zero


@given(polys, polys, rationals)
def test_evaluate_is_multiplicative(p, q, x0):
    assert evaluate(mul(p, q), x0) == evaluate(p, x0) * evaluate(q, x0)


@given(polys, polys)
def test_add_commutes(p, q):
    assert add(p, q) == add(q, p)


def test_long_divide_cubic_example():
    result = long_divide(Polynomial([0, 0, 0, 1]), Polynomial([-1, 1]))
    assert result.quotient == Polynomial([1, 1, 1])
    assert result.remainder == Polynomial([1])


@given(nonzero_polys)
def test_long_divide_self_division(p):
    result = long_divide(p, p)
    assert result.quotient == Polynomial([1])
    assert result.remainder.is_zero


def test_long_divide_golden_quartic():
    result = long_divide(Polynomial([0, 0, 0, 0, 1]), Polynomial([-1, -1, 1]))
    assert result.quotient == Polynomial([2, 1, 1])
    assert result.remainder == Polynomial([2, 3])


def test_long_divide_rejects_zero_divisor():
    with pytest.raises(ZeroDivisor):
        long_divide(Polynomial([1]), Polynomial())


@given(polys, divisors)
def test_euclidean_identity(f, g):
    result = long_divide(f, g)
    assert mul(g, result.quotient) + result.remainder == f
    assert result.remainder.is_zero or result.remainder.degree < g.degree
    assert result.reconstructs(f, g)


@given(polys, divisors)
def test_division_result_unique(f, g):
    # Perturbing the quotient while preserving the identity pushes the
    # remainder degree to deg g, so no second valid pair exists.
    result = long_divide(f, g)
    other = DivisionResult(
        quotient=result.quotient + Polynomial([1]),
        remainder=result.remainder - g,
    )
    assert mul(g, other.quotient) + other.remainder == f
    assert not other.reconstructs(f, g)


def test_monic_reduction_examples():
    result = monic_reduction(Polynomial([0, 0, 2]), Polynomial([-2, 2]))
    assert result.quotient == Polynomial([1, 1])
    assert result.remainder == Polynomial([2])
    result = monic_reduction(Polynomial([0, 0, 1]), Polynomial([0, 0, 3]))
    assert result.quotient == Polynomial([Fraction(1, 3)])
    assert result.remainder.is_zero


@given(polys, divisors)
def test_monic_reduction_matches_long_divide(f, g):
    assert monic_reduction(f, g) == long_divide(f, g)


@given(polys, divisors)
def test_monic_scaling_law(f, g):
    # Dividing by g/lead scales the quotient by lead and keeps the
    # remainder; that is exactly how monic_reduction undoes it.
    monic = scale(g, Fraction(1) / g.lead)
    inner = long_divide(f, monic)
    outer = long_divide(f, g)
    assert outer.quotient == scale(inner.quotient, Fraction(1) / g.lead)
    assert outer.remainder == inner.remainder


@given(polys, divisors)
def test_low_dividend_coefficients_never_reach_quotient(f, g):
    m = g.degree
    zeroed = Polynomial([Fraction(0)] * m + list(f.coeffs[m:]))
    assert long_divide(zeroed, g).quotient == long_divide(f, g).quotient


def test_divisor_views_golden():
    views = divisor_views(Polynomial([-1, -1, 1]))
    assert views.lead == 1
    assert views.monic_tail == (Fraction(-1), Fraction(-1))
    assert views.negated_tail == (Fraction(1), Fraction(1))


def test_divisor_views_scaled_linear():
    views = divisor_views(Polynomial([-2, 2]))
    assert views.lead == 2
    assert views.monic_tail == (Fraction(-1),)
    assert views.negated_tail == (Fraction(2),)


def test_divisor_views_constant():
    views = divisor_views(Polynomial([5]))
    assert views.lead == 5
    assert views.monic_tail == ()
    assert views.negated_tail == ()
    assert views.degree == 0


def test_divisor_views_rejects_zero():
    with pytest.raises(ZeroDivisor):
        divisor_views(Polynomial())


@given(divisors)
def test_divisor_views_consistency(g):
    views = divisor_views(g)
    m = views.degree
    for i in range(m):
        assert views.beta(i) * views.lead == g.coeff(i)
        assert views.c(i) == -g.coeff(i)
        assert views.gamma(i) * views.lead == views.c(i)
    assert views.beta(m) == 0 and views.c(-1) == 0 and views.gamma(m + 3) == 0


def test_polynomial_immutable():
    p = Polynomial([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (Fraction(9),)
