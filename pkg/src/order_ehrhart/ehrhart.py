# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
"""Ehrhart polynomials of order polytopes.

Three independent routes are provided:

* counting lattice points through multichains of order ideals, then
  interpolating at ``t = 0..n``;
* h*-vectors, either from descents of linear extensions or as products of
  Eulerian polynomials for ordinal sums, turned into a polynomial through
  ``i(P, t) = sum_i h*_i C(t + d - i, d)``;
* the closed form for the one-minimum family ``Q_k``.
"""

import logging
import os
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Sequence, Tuple

import simplejson as json

from .bernoulli import bernoulli_number
from .errors import BoundError, DomainError, HStarError, InvariantError
from .exactnum import (Polynomial, binomial, binomial_polynomial,
                       poly_interpolate)
from .poset import (IDEAL_LATTICE_BOUND, LINEAR_EXTENSION_BOUND, IdealLattice,
                    Poset, count_linear_extensions, ideal_lattice,
                    linear_extensions, natural_labeling)

logger = logging.getLogger(__name__)

EULERIAN_BOUND = 12
# Above this size the descent cross-check costs more than it is worth.
EULERIAN_DESCENT_CHECK = 8
AUTO_CROSS_CHECK = 6

METHODS = ("counting", "hstar", "closed_form_qk", "product")

TABLE1_ROWS = ((6, 6), (6, 7), (7, 7), (7, 8), (8, 8),
               (8, 9), (9, 9), (9, 10), (10, 10))
TABLE1_FILE = os.path.join(os.path.dirname(__file__), "data", "table1.json")


class EhrhartPolynomial(object):
    """Ehrhart polynomial of a ``dim``-dimensional order polytope."""

    def __init__(self, poly: Polynomial, dim: int, method: str):
        if method not in METHODS:
            raise ValueError("Unknown method tag: {}".format(method))
        self.poly = poly
        self.dim = dim
        self.method = method

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        """All ``dim + 1`` coefficients, lowest degree first."""
        return tuple(self.poly.coefficient(j) for j in range(self.dim + 1))

    def coefficient(self, j: int) -> Fraction:
        return self.poly.coefficient(j)

    def __call__(self, t):
        return self.poly(t)

    def validate(self) -> "EhrhartPolynomial":
        poly, dim = self.poly, self.dim
        if poly.degree != dim:
            raise InvariantError("Degree {} != dimension {}".format(
                poly.degree, dim))
        if poly.coefficient(0) != 1:
            raise InvariantError("Constant term is {}, not 1".format(
                poly.coefficient(0)))
        if poly.leading <= 0:
            raise InvariantError("Leading coefficient is not positive")
        if dim >= 1 and poly.coefficient(dim - 1) <= 0:
            raise InvariantError("Second coefficient is not positive")
        for t in range(dim + 2):
            value = poly(t)
            if value.denominator != 1 or value <= 0:
                raise InvariantError(
                    "i(P, {}) = {} is not a positive integer".format(t, value))
        return self

    def to_json(self) -> dict:
        return {"dim": self.dim,
                "coefficients": self.poly.to_json() or ["0"],
                "method": self.method}

    def __eq__(self, other):
        if not isinstance(other, EhrhartPolynomial):
            return NotImplemented
        return self.dim == other.dim and self.poly == other.poly

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.dim, self.poly))

    def __repr__(self):
        return "EhrhartPolynomial(dim={}, method={}, {})".format(
            self.dim, self.method, self.poly.pretty())


class HStarVector(object):
    """``h*_0 .. h*_dim`` of an order polytope."""

    def __init__(self, values: Sequence[int], dim: int = None):
        values = [int(v) for v in values]
        if dim is None:
            dim = len(values) - 1
        if len(values) > dim + 1:
            if any(values[dim + 1:]):
                raise HStarError("h* vector {} longer than dimension {}"
                                 .format(values, dim))
            values = values[:dim + 1]
        self.values = tuple(values + [0] * (dim + 1 - len(values)))
        self.dim = dim

    def validate(self) -> "HStarVector":
        if not self.values or self.values[0] != 1:
            raise InvariantError("h*_0 must be 1, got {}".format(self.values))
        if any(v < 0 for v in self.values):
            raise InvariantError("Negative h* entry in {}".format(
                self.values))
        return self

    @property
    def volume(self) -> int:
        """Sum of the entries: the normalized volume."""
        return sum(self.values)

    def trimmed(self) -> Tuple[int, ...]:
        values = list(self.values)
        while len(values) > 1 and values[-1] == 0:
            values.pop()
        return tuple(values)

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self.values)

    def to_json(self) -> List[int]:
        return list(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __eq__(self, other):
        if isinstance(other, HStarVector):
            return self.dim == other.dim and self.values == other.values
        if isinstance(other, (tuple, list)):
            return self.values == tuple(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.dim, self.values))

    def __repr__(self):
        return "HStarVector({})".format(list(self.values))


# Counting

def count_points(p: Poset, t: int, lattice: IdealLattice = None,
                 bound: int = IDEAL_LATTICE_BOUND) -> int:
    """Order-preserving maps ``P -> {0, ..., t}``.

    Such a map is a multichain ``I_1 <= ... <= I_t`` of order ideals (``I_s``
    is where the map is below ``s``); the count is ``t - 1`` zeta passes over
    the ideal lattice, summed.
    """
    if t < 0:
        raise DomainError("Dilation must be >= 0, got {}".format(t))
    if t == 0:
        return 1
    lattice = lattice or ideal_lattice(p, bound)
    values = [1] * len(lattice)
    by_element = lattice.covers_by_element
    for _ in range(t - 1):
        # bottom-up, so each pass sums over every sub-ideal once
        for x in p.linear_extension:
            for lower, upper in by_element[x]:
                values[upper] += values[lower]
    return sum(values)


def ehrhart_by_counting(p: Poset,
                        bound: int = IDEAL_LATTICE_BOUND) -> EhrhartPolynomial:
    lattice = ideal_lattice(p, bound)
    points = [(t, count_points(p, t, lattice)) for t in range(p.n + 1)]
    return EhrhartPolynomial(poly_interpolate(points), p.n, "counting")


# Closed form for Q_k

def ehrhart_qk_closed_form(k: int) -> EhrhartPolynomial:
    if k < 0:
        raise DomainError("k must be >= 0, got {}".format(k))
    coeffs = [Fraction(1)]
    for j in range(1, k + 1):
        r = k - j + 1
        coeffs.append((bernoulli_number(r) + r) / r * binomial(k, j))
    coeffs.append(Fraction(1, k + 1))
    return EhrhartPolynomial(Polynomial(coeffs), k + 1, "closed_form_qk")


def qk_coefficient_raw(k: int, j: int) -> Fraction:
    """Coefficient of ``t^j`` in ``i(O_{Q_k}, t)`` as the unsimplified sum
    ``1/(k+1) sum_{i=j-1}^{k} C(i+1, j) C(k+1, i+1) B_{k-i}``."""
    if not 1 <= j <= k + 1:
        raise DomainError("Need 1 <= j <= k + 1, got k={} j={}".format(k, j))
    total = Fraction(0)
    for i in range(j - 1, k + 1):
        total += (binomial(i + 1, j) * binomial(k + 1, i + 1) *
                  bernoulli_number(k - i))
    return total / (k + 1)


# h* algebra

def ehrhart_from_hstar(h: HStarVector) -> EhrhartPolynomial:
    d = h.dim
    poly = Polynomial()
    for i, value in enumerate(h.values):
        if value:
            poly = poly + binomial_polynomial(d - i, d).scale(value)
    return EhrhartPolynomial(poly, d, "hstar")


def hstar_from_ehrhart(e: EhrhartPolynomial) -> HStarVector:
    """Invert ``i(P, t) = sum_i h*_i C(t + d - i, d)``.

    At ``t = m`` only ``i <= m`` contribute and ``h*_m`` has weight 1, so the
    system is solved from ``m = 0`` upward.
    """
    d = e.dim
    h = []
    for m in range(d + 1):
        value = e.poly(m)
        for i, hi in enumerate(h):
            value -= hi * binomial(m + d - i, d)
        if value.denominator != 1:
            raise HStarError("h*_{} = {} is not an integer".format(m, value))
        if value < 0:
            raise HStarError("h*_{} = {} is negative".format(m, value))
        h.append(value.numerator)
    result = HStarVector(h, d)
    if ehrhart_from_hstar(result).poly != e.poly:
        raise HStarError("Polynomial of degree {} is not determined by its "
                         "values at 0..{}".format(e.poly.degree, d))
    return result


def hstar_via_linear_extensions(p: Poset,
                                bound: int = LINEAR_EXTENSION_BOUND
                                ) -> HStarVector:
    """Histogram of descents over the linear extensions of a naturally
    labeled copy of ``p``."""
    natural = natural_labeling(p)
    counts = [0] * (p.n + 1)
    for extension in linear_extensions(natural, bound):
        descents = sum(1 for a, b in zip(extension, extension[1:]) if a > b)
        counts[descents] += 1
    return HStarVector(counts, p.n)


def hstar_ordinal_sum(hp: HStarVector, hq: HStarVector) -> HStarVector:
    product = [0] * (len(hp.values) + len(hq.values) - 1)
    for i, a in enumerate(hp.values):
        for j, b in enumerate(hq.values):
            product[i + j] += a * b
    return HStarVector(product, hp.dim + hq.dim)


def _eulerian_by_descents(k: int) -> List[int]:
    counts = [0] * (k + 1)
    for perm in permutations(range(k)):
        counts[sum(1 for a, b in zip(perm, perm[1:]) if a > b)] += 1
    return counts


def eulerian_polynomial(k: int, bound: int = EULERIAN_BOUND) -> HStarVector:
    """h* of the ``k``-antichain (the unit cube): Eulerian numbers.

    Built with ``A(n, m) = (m + 1) A(n-1, m) + (n - m) A(n-1, m-1)``, checked
    against descent counting over all permutations for small ``k``.
    """
    if k < 1:
        raise DomainError("Eulerian polynomial needs k >= 1, got {}".format(
            k))
    if k > bound:
        raise BoundError("eulerian", bound, k)
    row = [1]
    for n in range(2, k + 1):
        row = [(m + 1) * (row[m] if m < len(row) else 0) +
               (n - m) * (row[m - 1] if m >= 1 else 0)
               for m in range(n)]
    values = row + [0]
    if k <= EULERIAN_DESCENT_CHECK and _eulerian_by_descents(k) != values:
        raise InvariantError("Eulerian recurrence disagrees with descents "
                             "for k={}".format(k))
    return HStarVector(values, k)


def ehrhart_pmn(m: int, n: int,
                bound: int = EULERIAN_BOUND) -> EhrhartPolynomial:
    """``P_{m,n}``: an ``m``-antichain below an ``n``-antichain."""
    h = hstar_ordinal_sum(eulerian_polynomial(m, bound),
                          eulerian_polynomial(n, bound))
    return EhrhartPolynomial(ehrhart_from_hstar(h).poly, m + n, "product")


def hstar_by_counting(p: Poset,
                      bound: int = IDEAL_LATTICE_BOUND) -> HStarVector:
    return hstar_from_ehrhart(ehrhart_by_counting(p, bound))


def ehrhart_ordinal_sum(*posets: Poset,
                        bound: int = IDEAL_LATTICE_BOUND) -> EhrhartPolynomial:
    """Ehrhart polynomial of ``p_1 + p_2 + ...`` (ordinal sum, first part at
    the bottom) through the product of the parts' h*-vectors."""
    if not posets:
        raise DomainError("Ordinal sum needs at least one poset")
    h = HStarVector([1], 0)
    for p in posets:
        h = hstar_ordinal_sum(h, hstar_by_counting(p, bound))
    return EhrhartPolynomial(ehrhart_from_hstar(h).poly, h.dim, "product")


def ehrhart_polynomial(p: Poset, method: str = "auto",
                       ideal_bound: int = IDEAL_LATTICE_BOUND,
                       extension_bound: int = LINEAR_EXTENSION_BOUND
                       ) -> Tuple[EhrhartPolynomial, HStarVector]:
    """Ehrhart polynomial and h*-vector of ``p``.

    ``counting`` interpolates point counts, ``hstar`` uses descents of linear
    extensions, ``auto`` counts and cross-checks against descents when
    ``p`` is small.
    """
    if method == "counting":
        e = ehrhart_by_counting(p, ideal_bound)
        h = hstar_from_ehrhart(e)
    elif method == "hstar":
        h = hstar_via_linear_extensions(p, extension_bound)
        e = ehrhart_from_hstar(h)
    elif method == "auto":
        e = ehrhart_by_counting(p, ideal_bound)
        h = hstar_from_ehrhart(e)
        if p.n <= AUTO_CROSS_CHECK:
            other = hstar_via_linear_extensions(p, extension_bound)
            if other != h:
                raise InvariantError("h* by counting {} != by descents {}"
                                     .format(h, other))
    else:
        raise DomainError("Unknown method: {}".format(method))
    h.validate()
    if h.volume != count_linear_extensions(p):
        raise InvariantError("h* sums to {}, expected {} linear extensions"
                             .format(h.volume, count_linear_extensions(p)))
    return e.validate(), h


# Generating functions

def ehrhart_series_prefix(e: EhrhartPolynomial, terms: int) -> List[int]:
    """First ``terms`` coefficients of ``1 + sum_{t >= 1} i(P, t) z^t``."""
    values = []
    for t in range(terms):
        value = e.poly(t)
        if value.denominator != 1:
            raise InvariantError("i(P, {}) = {} is not an integer".format(
                t, value))
        values.append(value.numerator)
    return values


def series_from_hstar(h: HStarVector, terms: int) -> List[int]:
    """First ``terms`` coefficients of ``h*(z) / (1 - z)^(d + 1)``."""
    d = h.dim
    return [sum(hi * binomial(t - i + d, d) for i, hi in enumerate(h.values)
                if i <= t)
            for t in range(terms)]


# Fixtures

def load_table1_fixtures(path: str = TABLE1_FILE
                         ) -> Tuple[Dict[Tuple[int, int], Polynomial],
                                    Dict[int, Tuple[int, ...]]]:
    """Stored ``P_{m,n}`` polynomials and Eulerian coefficient lists."""
    with open(path) as f:
        data = json.load(f)
    rows = {}
    for row in data["rows"]:
        rows[(row["m"], row["n"])] = Polynomial.from_json(row["coefficients"])
    eulerian = {int(k): tuple(v) for k, v in data["eulerian"].items()}
    missing = set(TABLE1_ROWS) - set(rows)
    if missing:
        logger.warning("Fixture file {} lacks rows {}".format(
            path, sorted(missing)))
    return rows, eulerian

