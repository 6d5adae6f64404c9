# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
"""Signs of Ehrhart coefficients and the known non-positive families."""

import logging
from typing import List, Optional, Tuple

from .errors import DomainError, InvariantError
from .ehrhart import EhrhartPolynomial, ehrhart_pmn, ehrhart_qk_closed_form
from .poset import Poset, make_pmn, make_qk

logger = logging.getLogger(__name__)

POSITIVE = "positive"
NEGATIVE = "negative"
ZERO = "zero"

# Dimensions 12 and 13 are open.
UNKNOWN = "unknown"
# Every order polytope of dimension <= 11 is Ehrhart positive.
NONE_PROVEN = "none exists <= proven bound"
PROVEN_POSITIVE_DIM = 11

# dimension -> (m, n) for P_{m,n}
PMN_BY_DIMENSION = {
    14: (7, 7),
    15: (7, 8),
    16: (8, 8),
    17: (8, 9),
    18: (9, 9),
    19: (9, 10),
    20: (10, 10),
}

# Q_k has a negative coefficient at t^j iff k - j + 1 is a multiple of 4
# that is at least this.
QK_THRESHOLD = 20


def _sign(value) -> str:
    if value > 0:
        return POSITIVE
    if value < 0:
        return NEGATIVE
    return ZERO


class SignReport(object):

    def __init__(self, dim: int, signs: Tuple[str, ...]):
        self.dim = dim
        self.signs = tuple(signs)
        self.negative_degrees = [j for j, s in enumerate(self.signs)
                                 if s == NEGATIVE]
        self.zero_degrees = [j for j, s in enumerate(self.signs)
                             if s == ZERO]
        middle = self.signs[1:max(dim - 1, 1)]
        self.is_ehrhart_positive = all(s == POSITIVE for s in middle)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "signs": list(self.signs),
            "negative_degrees": self.negative_degrees,
            "zero_degrees": self.zero_degrees,
            "is_ehrhart_positive": self.is_ehrhart_positive,
        }

    def __repr__(self):
        return "SignReport(dim={}, negative_degrees={})".format(
            self.dim, self.negative_degrees)


def sign_report(e: EhrhartPolynomial) -> SignReport:
    report = SignReport(e.dim, tuple(_sign(c) for c in e.coefficients))
    for j in {0, e.dim - 1, e.dim}:
        if j >= 0 and report.signs[j] != POSITIVE:
            raise InvariantError(
                "Coefficient of t^{} is {}; it is always positive".format(
                    j, report.signs[j]))
    return report


def qk_sign_predicted(k: int, j: int) -> str:
    if not 1 <= j <= k - 1:
        raise DomainError("Need 1 <= j <= k - 1, got k={} j={}".format(k, j))
    r = k - j + 1
    return NEGATIVE if r >= QK_THRESHOLD and r % 4 == 0 else POSITIVE


def qk_negative_count(k: int) -> int:
    """Multiples of 4 in ``[20, k]``."""
    return max(0, k // 4 - 4)


def highest_negative_degree(k: int) -> Optional[int]:
    """Largest ``j`` with a negative ``t^j`` coefficient in ``Q_k``.

    The smallest qualifying ``k - j + 1`` is always 20, so this is
    ``k - 19``.
    """
    if k < QK_THRESHOLD:
        return None
    return k + 1 - QK_THRESHOLD


def poset_with_negatives(ell: int) -> Poset:
    """``Q_{4 ell + 16}``: the smallest ``Q_k`` with exactly ``ell``
    negative coefficients."""
    if ell < 1:
        raise DomainError("ell must be >= 1, got {}".format(ell))
    k = 4 * ell + 16
    report = sign_report(ehrhart_qk_closed_form(k))
    if len(report.negative_degrees) != ell:
        raise InvariantError("Q_{} has {} negative coefficients, expected {}"
                             .format(k, len(report.negative_degrees), ell))
    return make_qk(k)


class CounterexampleResult(object):
    """Outcome for one dimension: a poset with its label and report, or a
    marker (``UNKNOWN`` / ``NONE_PROVEN``)."""

    def __init__(self, d: int, marker: str = None, poset: Poset = None,
                 label: str = None, report: SignReport = None):
        self.d = d
        self.marker = marker
        self.poset = poset
        self.label = label
        self.report = report

    @property
    def found(self) -> bool:
        return self.poset is not None

    def to_json(self) -> dict:
        if not self.found:
            return {"dim": self.d, "result": self.marker}
        return {"dim": self.d,
                "label": self.label,
                "poset": self.poset.to_json(),
                "signs": self.report.to_json()}


def find_counterexample(d: int) -> CounterexampleResult:
    if d < 1:
        raise DomainError("Dimension must be >= 1, got {}".format(d))
    if d <= PROVEN_POSITIVE_DIM:
        return CounterexampleResult(d, marker=NONE_PROVEN)
    if d in PMN_BY_DIMENSION:
        m, n = PMN_BY_DIMENSION[d]
        poset = make_pmn(m, n)
        e = ehrhart_pmn(m, n)
        label = "P_{{{},{}}}".format(m, n)
    elif d > max(PMN_BY_DIMENSION):
        poset = make_qk(d - 1)
        e = ehrhart_qk_closed_form(d - 1)
        label = "Q_{}".format(d - 1)
    else:
        return CounterexampleResult(d, marker=UNKNOWN)
    report = sign_report(e)
    if report.is_ehrhart_positive:
        raise InvariantError("{} turned out Ehrhart positive".format(label))
    logger.debug("Dimension {}: {} negative at {}".format(
        d, label, report.negative_degrees))
    return CounterexampleResult(d, poset=poset, label=label, report=report)


def counterexample_for_dimension(d: int):
    """A non-Ehrhart-positive poset of dimension ``d``, or a marker."""
    result = find_counterexample(d)
    return result.poset if result.found else result.marker


def qk_sign_mismatches(k_max: int) -> List[Tuple[int, int]]:
    """``(k, j)`` where the computed sign of ``t^j`` in ``Q_k`` disagrees
    with ``qk_sign_predicted``."""
    mismatches = []
    for k in range(2, k_max + 1):
        e = ehrhart_qk_closed_form(k)
        for j in range(1, k):
            if _sign(e.coefficient(j)) != qk_sign_predicted(k, j):
                mismatches.append((k, j))
    return mismatches
