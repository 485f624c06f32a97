"""
Exact polynomial recursions for the normalized median Genocchi numbers
(``H_n``) and the median Euler targets (``E_n``).

    H_0 = 1,  H_n(x) = (x+1) * ((x+1) H_{n-1}(x+1) - x H_{n-1}(x)) / 2
    E_0 = 1,  E_n(x) = (x+1) * ((x+2) E_{n-1}(x+2) - x E_{n-1}(x)) / 2

>>> [h_value(n) for n in range(1, 7)]
[1, 2, 7, 38, 295, 3098]
>>> [e_target(n) for n in range(5)]
[1, 2, 10, 98, 1594]
"""

from __future__ import annotations

import functools
from collections.abc import Iterable
from fractions import Fraction
from math import comb

from .errors import ConsistencyError, DomainError

__all__ = [
    "RationalPolynomial",
    "e_polynomial",
    "e_target",
    "h_polynomial",
    "h_value",
]


class RationalPolynomial:
    """Dense univariate polynomial with ``Fraction`` coefficients.

    ``coefficients[k]`` multiplies ``x**k``; trailing zeros are stripped so
    the zero polynomial has no coefficients at all.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int | Fraction] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def x(cls) -> RationalPolynomial:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coefficients) - 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial((other,))
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def _coerce(self, other) -> RationalPolynomial:
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return RationalPolynomial(
            [c + (b[k] if k < len(b) else 0) for k, c in enumerate(a)]
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def shift(self, c: int | Fraction) -> RationalPolynomial:
        """Return ``p(x + c)`` by binomial expansion of each power."""
        c = Fraction(c)
        out = [Fraction(0)] * len(self.coefficients)
        for k, a in enumerate(self.coefficients):
            if a:
                for i in range(k + 1):
                    out[i] += a * comb(k, i) * c ** (k - i)
        return RationalPolynomial(out)

    def __call__(self, x: int | Fraction) -> Fraction:
        acc = Fraction(0)
        for a in reversed(self.coefficients):
            acc = acc * x + a
        return acc

    def __repr__(self) -> str:
        if not self.coefficients:
            return "RationalPolynomial(0)"
        terms = []
        for k, a in enumerate(self.coefficients):
            if a:
                terms.append(f"{a}" + ("" if k == 0 else "*x" if k == 1 else f"*x^{k}"))
        return "RationalPolynomial(" + " + ".join(terms) + ")"


_X = RationalPolynomial.x()
_HALF = Fraction(1, 2)


def _recur(prev: RationalPolynomial, step: int) -> RationalPolynomial:
    return _HALF * (_X + 1) * ((_X + step) * prev.shift(step) - _X * prev)


@functools.lru_cache(maxsize=None)
def h_polynomial(n: int) -> RationalPolynomial:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n == 0:
        return RationalPolynomial((1,))
    return _recur(h_polynomial(n - 1), 1)


@functools.lru_cache(maxsize=None)
def e_polynomial(n: int) -> RationalPolynomial:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n == 0:
        return RationalPolynomial((1,))
    return _recur(e_polynomial(n - 1), 2)


def _integral_at_one(p: RationalPolynomial, label: str) -> int:
    v = p(1)
    if v.denominator != 1:
        raise ConsistencyError(f"{label}(1) = {v} is not an integer")
    return v.numerator


def h_value(n: int) -> int:
    """``h_n = H_n(1)``, the number of Dellac configurations of size n."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return _integral_at_one(h_polynomial(n), f"H_{n}")


def e_target(n: int) -> int:
    """``E_n(1)``; checked to be an integer."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return _integral_at_one(e_polynomial(n), f"E_{n}")
