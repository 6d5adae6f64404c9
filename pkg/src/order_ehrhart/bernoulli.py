# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
"""Bernoulli numbers and polynomials.

Convention: ``B_n`` means ``B_n(1)``, so ``B_1 = +1/2``. Many references
(and libraries) use ``B_1 = -1/2``, i.e. ``B_n(0)``. The two tables differ
only at ``n = 1``:

    B_j(0) = B_j - [j == 1]

This follows from ``B_k(x + 1) = B_k(x) + k x^(k-1)`` at ``x = 0``, and it
is what ``bernoulli_polynomial`` builds on. The closed form for the
one-minimum posets needs the ``+1/2`` convention.
"""

import logging
import threading
from fractions import Fraction
from typing import List, Tuple

from . import logs
from .errors import DomainError
from .exactnum import Polynomial, binomial

logger = logging.getLogger(__name__)


class BernoulliTable(object):
    """Grow-only cache of ``B_0 .. B_m``.

    Readers always see a consistent prefix; one writer at a time extends it.
    """

    def __init__(self):
        self._values = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._values)

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError("Bernoulli index must be >= 0, got {}".format(n))
        values = self._values
        if n < len(values):
            return values[n]
        self.extend(n)
        return self._values[n]

    def extend(self, max_n: int):
        with self._lock:
            values = list(self._values)
            if max_n < len(values):
                return
            start = len(values)
            with logs.timer("bernoulli.extend"):
                for m in range(start, max_n + 1):
                    # (m+1) B_m = (m+1) - sum_{i=1}^{m} C(m+1, i+1) B_{m-i}
                    total = Fraction(m + 1)
                    for i in range(1, m + 1):
                        total -= binomial(m + 1, i + 1) * values[m - i]
                    values.append(total / (m + 1))
            logger.debug("Bernoulli table grown from {} to {}".format(
                start, max_n))
            # publish the longer list in one assignment
            self._values = values

    def prefix(self, max_n: int) -> List[Fraction]:
        self.get(max_n)
        return self._values[:max_n + 1]


TABLE = BernoulliTable()


def bernoulli_number(n: int) -> Fraction:
    return TABLE.get(n)


def bernoulli_table(max_n: int) -> List[Tuple[int, Fraction]]:
    return list(enumerate(TABLE.prefix(max_n)))


def bernoulli_polynomial(k: int) -> Polynomial:
    """``B_k(x) = sum_i C(k, i) B_{k-i}(0) x^i``."""
    if k < 0:
        raise DomainError("Bernoulli polynomial degree must be >= 0")
    coeffs = []
    for i in range(k + 1):
        j = k - i
        at_zero = bernoulli_number(j) - (1 if j == 1 else 0)
        coeffs.append(binomial(k, i) * at_zero)
    return Polynomial(coeffs)


def power_sum_polynomial(n: int) -> Polynomial:
    """Polynomial ``p`` with ``p(t) = 1^n + 2^n + ... + t^n``."""
    if n < 0:
        raise DomainError("Power must be >= 0")
    coeffs = [Fraction(0)] * (n + 2)
    for i in range(n + 1):
        coeffs[i + 1] = Fraction(
            binomial(n + 1, i + 1)) * bernoulli_number(n - i) / (n + 1)
    return Polynomial(coeffs)


def power_sum(n: int, t: int) -> int:
    value = power_sum_polynomial(n)(t)
    assert value.denominator == 1, value
    return value.numerator


def bernoulli_even_recurrence(n: int) -> Fraction:
    """``B_{2n}`` from ``B_2 .. B_{2n-2}`` alone (valid for n >= 2)."""
    if n < 2:
        raise DomainError(
            "Even-index recurrence needs n >= 2, got {}".format(n))
    total = Fraction(0)
    for j in range(1, n):
        total += (binomial(2 * n, 2 * j) * bernoulli_number(2 * j) *
                  bernoulli_number(2 * (n - j)))
    return -total / (2 * n + 1)


def bk_plus_k_is_negative(k: int) -> bool:
    return bernoulli_number(k) + k < 0


def bk_plus_k_negative_predicted(k: int) -> bool:
    return k >= 20 and k % 4 == 0


def check_properties(max_n: int = 100) -> dict:
    """Run the parity, sign, difference, power-sum and recurrence checks.

    Returns ``{property: [offending indices]}``; empty when all hold.
    """
    failures = {}

    def fail(name, index):
        failures.setdefault(name, []).append(index)

    with logs.timer("bernoulli.check_properties"):
        if bernoulli_number(1) != Fraction(1, 2):
            fail("convention", 1)
        for n in range(3, max_n + 1, 2):
            if bernoulli_number(n) != 0:
                fail("odd_zero", n)
        for n in range(2, max_n + 1, 2):
            positive = n % 4 == 2
            if (bernoulli_number(n) > 0) != positive:
                fail("even_sign", n)
        for k in range(1, min(max_n, 20) + 1):
            poly = bernoulli_polynomial(k)
            if poly.shift(1) - poly != Polynomial.monomial(k - 1, k):
                fail("difference", k)
        for n in range(0, min(max_n, 12) + 1):
            naive = 0
            for t in range(1, 31):
                naive += t ** n
                if power_sum(n, t) != naive:
                    fail("power_sum", n)
                    break
        for n in range(2, max_n // 2 + 1):
            if bernoulli_even_recurrence(n) != bernoulli_number(2 * n):
                fail("even_recurrence", n)
        for k in range(max_n + 1):
            if bk_plus_k_is_negative(k) != bk_plus_k_negative_predicted(k):
                fail("bk_plus_k", k)
    return failures
