from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from torusfix.errors import ConsistencyError
from torusfix.genocchi_poly import (
    RationalPolynomial,
    _integral_at_one,
    e_polynomial,
    e_target,
    h_polynomial,
    h_value,
)

x = sympy.Symbol("x")


def _sympy_sequence(step, count):
    """Independent oracle: the same recursion carried out by sympy."""
    polys = [sympy.Integer(1)]
    for _ in range(count):
        p = polys[-1]
        polys.append(sympy.expand(sympy.Rational(1, 2) * (x + 1) * ((x + step) * p.subs(x, x + step) - x * p)))
    return polys


def _as_fractions(expr):
    poly = sympy.Poly(expr, x)
    coeffs = list(reversed(poly.all_coeffs()))
    return tuple(Fraction(int(c.p), int(c.q)) for c in coeffs)


SYMPY_H = _sympy_sequence(1, 12)
SYMPY_E = _sympy_sequence(2, 12)


def test_polynomial_basics():
    X = RationalPolynomial.x()
    p = (X + 1) * (X + 1)
    assert p.coefficients == (1, 2, 1)
    assert p - p == RationalPolynomial()
    assert RationalPolynomial().degree == -1
    assert p(Fraction(1, 2)) == Fraction(9, 4)
    assert (X + 1).shift(2) == X + 3
    assert RationalPolynomial((0, 0, 0)).coefficients == ()


@given(
    st.lists(st.fractions(max_denominator=20), min_size=0, max_size=6),
    st.integers(-5, 5),
    st.integers(-5, 5),
)
def test_shift_composes_and_commutes_with_evaluation(coeffs, a, b):
    p = RationalPolynomial(coeffs)
    assert p.shift(a).shift(b) == p.shift(a + b)
    assert p.shift(a)(b) == p(a + b)


@given(
    st.lists(st.fractions(max_denominator=9), max_size=5),
    st.lists(st.fractions(max_denominator=9), max_size=5),
    st.fractions(max_denominator=9),
)
def test_ring_operations_match_evaluation(a, b, t):
    p, q = RationalPolynomial(a), RationalPolynomial(b)
    assert (p * q)(t) == p(t) * q(t)
    assert (p + q)(t) == p(t) + q(t)
    assert (p - q)(t) == p(t) - q(t)


def test_h_examples():
    X = RationalPolynomial.x()
    assert h_polynomial(0) == 1
    assert h_polynomial(1) == Fraction(1, 2) * (X + 1)
    assert h_polynomial(2) == Fraction(1, 2) * (X + 1) * (X + 1)
    assert h_polynomial(3) == Fraction(1, 4) * (X + 1) * (X + 1) * (3 * X + 4)


def test_e_examples():
    X = RationalPolynomial.x()
    assert e_polynomial(0) == 1
    assert e_polynomial(1) == X + 1
    assert e_polynomial(2) == (X + 1) * (2 * X + 3)


@pytest.mark.parametrize("n", range(13))
def test_recursions_match_sympy(n):
    assert h_polynomial(n).coefficients == _as_fractions(SYMPY_H[n])
    assert e_polynomial(n).coefficients == _as_fractions(SYMPY_E[n])


def test_values():
    assert [h_value(n) for n in (1, 2, 3)] == [1, 2, 7]
    assert [e_target(n) for n in (0, 2, 4)] == [1, 10, 1594]


def test_integrality_and_degree_up_to_20():
    hs = [h_value(n) for n in range(1, 21)]
    es = [e_target(n) for n in range(0, 21)]
    for n in range(1, 21):
        assert h_polynomial(n).degree == n
        assert e_polynomial(n).degree == n
    assert all(a < b for a, b in zip(hs, hs[1:]))
    assert all(a < b for a, b in zip(es[1:], es[2:]))


def test_non_integer_value_is_fatal():
    with pytest.raises(ConsistencyError):
        _integral_at_one(RationalPolynomial((Fraction(1, 3),)), "P")
