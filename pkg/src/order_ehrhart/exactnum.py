# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
"""Exact rationals, dense polynomials, binomials and interpolation.

Everything here is exact. ``Rational`` is ``fractions.Fraction``: it is
always stored reduced with a positive denominator. Polynomials are
immutable, dense and trimmed, so the zero polynomial has no coefficients.
"""

import math
import operator
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from .errors import InterpolationError

Rational = Fraction
Number = Union[int, Fraction]

_RAT_OPS = {
    "+": operator.add,
    "-": operator.sub,
    "*": operator.mul,
    "/": operator.truediv,
}


def rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


def rat_arith(a: Number, b: Number, op: str) -> Fraction:
    """Exact ``a op b``. Dividing by zero raises ZeroDivisionError."""
    try:
        func = _RAT_OPS[op]
    except KeyError:
        raise ValueError("Unknown rational operation: {}".format(op))
    return func(rat(a), rat(b))


def format_rational(value: Number) -> str:
    value = rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _trim(coefficients: Iterable[Number]) -> Tuple[Fraction, ...]:
    coeffs = [rat(c) for c in coefficients]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial(object):
    """Dense univariate polynomial over the rationals.

    ``coefficients[i]`` is the coefficient of ``x**i``. The variable is
    positional: the same type holds Ehrhart polynomials in ``t`` and
    h*-polynomials in ``z``.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Number] = ()):
        object.__setattr__(self, "coefficients", _trim(coefficients))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, value: Number) -> "Polynomial":
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, value: Number = 1) -> "Polynomial":
        return cls([0] * degree + [value])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, degree: int) -> Fraction:
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return Fraction(0)

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, degree):
        return self.coefficient(degree)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self.coefficients == _trim([other])
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return "Polynomial([{}])".format(
            ", ".join(format_rational(c) for c in self.coefficients))

    def __add__(self, other):
        return poly_arith(self, _as_poly(other), "+")

    __radd__ = __add__

    def __sub__(self, other):
        return poly_arith(self, _as_poly(other), "-")

    def __rsub__(self, other):
        return poly_arith(_as_poly(other), self, "-")

    def __mul__(self, other):
        return poly_arith(self, _as_poly(other), "*")

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial(-c for c in self.coefficients)

    def __call__(self, x: Number) -> Fraction:
        return poly_eval(self, x)

    def scale(self, factor: Number) -> "Polynomial":
        factor = rat(factor)
        return Polynomial(c * factor for c in self.coefficients)

    def shift(self, c: Number) -> "Polynomial":
        """Return ``p(x + c)`` by Horner's scheme on polynomials."""
        linear = Polynomial([c, 1])
        result = Polynomial()
        for coeff in reversed(self.coefficients):
            result = result * linear + Polynomial.constant(coeff)
        return result

    def to_json(self):
        return [format_rational(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, values: Sequence[str]) -> "Polynomial":
        return cls(parse_rational(str(v)) for v in values)

    def pretty(self, var: str = "t") -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for degree, coeff in enumerate(self.coefficients):
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            mag = format_rational(abs(coeff))
            if degree == 0:
                body = mag
            else:
                power = var if degree == 1 else "{}^{}".format(var, degree)
                body = power if mag == "1" else "{} {}".format(mag, power)
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += " {} {}".format(sign, body)
        return text


def _as_poly(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    a, b = p.coefficients, q.coefficients
    if op in ("+", "-"):
        size = max(len(a), len(b))
        sign = 1 if op == "+" else -1
        return Polynomial(
            (a[i] if i < len(a) else 0) + sign * (b[i] if i < len(b) else 0)
            for i in range(size))
    if op == "*":
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial(out)
    raise ValueError("Unknown polynomial operation: {}".format(op))


def poly_eval(p: Polynomial, x: Number) -> Fraction:
    x = rat(x)
    result = Fraction(0)
    for coeff in reversed(p.coefficients):
        result = result * x + coeff
    return result


def poly_interpolate(points: Sequence[Tuple[int, Number]]) -> Polynomial:
    """Unique polynomial of degree < len(points) through ``points``.

    Newton divided differences, expanded to the monomial basis.
    """
    points = [(rat(x), rat(y)) for x, y in points]
    if not points:
        raise InterpolationError("Interpolation needs at least one point")
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise InterpolationError("Duplicate abscissa in {}".format(
            [format_rational(x) for x in xs]))
    table = [y for _, y in points]
    size = len(points)
    for level in range(1, size):
        for i in range(size - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    # table[i] is now the i-th Newton coefficient
    result = Polynomial.constant(table[-1])
    for i in range(size - 2, -1, -1):
        result = result * Polynomial([-xs[i], 1]) + Polynomial.constant(
            table[i])
    return result


def binomial_polynomial(a: int, d: int) -> Polynomial:
    """``binomial(t + a, d)`` as a polynomial in ``t``."""
    result = Polynomial.constant(1)
    for s in range(1, d + 1):
        result = result * Polynomial([a - d + s, 1])
    return result.scale(Fraction(1, math.factorial(d)))
