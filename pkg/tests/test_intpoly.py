from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from fhm.intpoly import IntPoly, IntegralityError, binom, evaluate, interpolate


def lagrange(xs, ys, x):
    total = Fraction(0)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = Fraction(yi)
        for j, xj in enumerate(xs):
            if j != i:
                term *= Fraction(x - xj, xi - xj)
        total += term
    return total


coeff_lists = st.lists(st.integers(-20, 20), max_size=6)


def test_generalised_binomial():
    assert binom(5, 2) == 10
    assert binom(-1, 0) == 1
    assert binom(-1, 3) == -1
    assert binom(-3, 2) == 6
    assert binom(4, -1) == 0


def test_shifted_binomial():
    f = interpolate(2, [0, 0, 1, 3, 6])
    assert f == IntPoly.binomial(2, shift=2)
    assert f(5) == 3
    assert [f(n) for n in range(0, 8)] == [comb(n - 2, 2) if n >= 2 else (n - 2) * (n - 3) // 2 for n in range(8)]
    assert f.shifted_binomial_form(2) == "C(t-2,2)"
    assert str(IntPoly([3, -2, 1])) == "3 - 2*t + C(t,2)"


@given(st.integers(-5, 10), st.lists(st.integers(-50, 50), min_size=1, max_size=7), st.integers(-10, 20))
def test_interpolate_matches_lagrange(base, values, x):
    f = interpolate(base, values)
    xs = list(range(base, base + len(values)))
    assert [f(n) for n in xs] == values
    assert f(x) == lagrange(xs, values, x)
    assert f.degree < len(values)


@given(coeff_lists, coeff_lists, st.integers(-8, 12))
def test_ring_operations_are_pointwise(a, b, n):
    p, q = IntPoly(a), IntPoly(b)
    assert (p + q)(n) == p(n) + q(n)
    assert (p - q)(n) == p(n) - q(n)
    assert (p * q)(n) == p(n) * q(n)
    assert (-p)(n) == -p(n)


@given(coeff_lists, st.integers(-4, 4), st.integers(-6, 10))
def test_shifted(a, k, n):
    p = IntPoly(a)
    assert p.shifted(k)(n) == p(n - k)


@given(coeff_lists)
def test_json_round_trip(a):
    p = IntPoly(a)
    assert IntPoly.from_json(p.to_json()) == p


def test_power_basis_and_integrality():
    p = IntPoly.binomial(2)
    assert p.monomial_coefficients() == [0, Fraction(-1, 2), Fraction(1, 2)]
    with pytest.raises(TypeError):
        IntPoly([Fraction(1, 2)])
    assert evaluate(IntPoly.t() ** 3, -2) == -8
    assert IntPoly() == 0 and IntPoly.constant(4) == 4
    assert issubclass(IntegralityError, ArithmeticError)
