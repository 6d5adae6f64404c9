# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
"""Exhaustive scans for Ehrhart positivity and the ``P_{m,n}`` table."""

import functools
import logging
import multiprocessing
import time
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from . import logs
from .ehrhart import (TABLE1_ROWS, HStarVector, ehrhart_by_counting,
                      ehrhart_from_hstar, ehrhart_pmn, eulerian_polynomial,
                      hstar_by_counting, hstar_from_ehrhart, hstar_ordinal_sum,
                      hstar_via_linear_extensions, load_table1_fixtures)
from .errors import BoundError, DomainError, InvariantError
from .poset import (CANONICAL_FORM_BOUND, ENUMERATE_BOUND,
                    IDEAL_LATTICE_BOUND, KNOWN_CLASS_COUNTS,
                    LINEAR_EXTENSION_BOUND, Poset, canonical_form,
                    enumerate_posets, make_antichain, ordinal_sum)
from .positivity import sign_report

logger = logging.getLogger(__name__)

SCAN_BOUND = 8
SCAN_WARN_N = 8
SUM_BOUND = 16
HSTAR_CHECK_N = 6
# rows expected to be Ehrhart positive
POSITIVE_TABLE1_ROWS = ((6, 6), (6, 7))


class ScanResult(object):
    """Outcome of scanning one size (or one total)."""

    def __init__(self, n, classes_scanned=0, violations=None, elapsed=0.0):
        self.n = n
        self.classes_scanned = classes_scanned
        self.violations = violations or []
        self.elapsed = elapsed

    @property
    def ok(self):
        return not self.violations

    def to_json(self):
        return {
            "n": self.n,
            "classes_scanned": self.classes_scanned,
            "violations": self.violations,
            "elapsed": round(self.elapsed, 3),
        }


def divvy(biglist, count):
    """Deal ``biglist`` round-robin into ``count`` shards."""
    return [biglist[s::count] for s in range(count)]


def _sorted_violations(violations):
    return sorted(violations,
                  key=lambda v: (v["canonical_form"], v.get("label") or ""))


def scan_shard(posets: Sequence[Poset],
               ideal_bound: int = IDEAL_LATTICE_BOUND,
               extension_bound: int = LINEAR_EXTENSION_BOUND,
               canonical_bound: int = CANONICAL_FORM_BOUND
               ) -> Tuple[int, List[dict]]:
    """Sign-check each poset; return ``(scanned, violations)``."""
    violations = []
    for count, p in enumerate(posets, 1):
        e = ehrhart_by_counting(p, ideal_bound)
        h = hstar_from_ehrhart(e)
        if (p.n <= HSTAR_CHECK_N and
                hstar_via_linear_extensions(p, extension_bound) != h):
            raise InvariantError("h* mismatch for {}".format(p))
        report = sign_report(e)
        if not report.is_ehrhart_positive:
            violations.append({
                "canonical_form": canonical_form(p, canonical_bound).hex(),
                "poset": p.to_json(),
                "signs": report.to_json(),
            })
        logs.tick(count)
    return len(posets), violations


def scan_all_posets(n_max: int, shards: int = 1,
                    bound: int = SCAN_BOUND,
                    warn_n: int = SCAN_WARN_N,
                    enumerate_bound: int = ENUMERATE_BOUND,
                    canonical_bound: int = CANONICAL_FORM_BOUND,
                    ideal_bound: int = IDEAL_LATTICE_BOUND,
                    extension_bound: int = LINEAR_EXTENSION_BOUND
                    ) -> List[ScanResult]:
    """Check Ehrhart positivity of one poset per isomorphism class, for
    every size up to ``n_max``."""
    if n_max < 1:
        raise DomainError("n_max must be >= 1, got {}".format(n_max))
    limit = min(bound, enumerate_bound, ENUMERATE_BOUND)
    if n_max > limit:
        raise BoundError("scan", limit, n_max,
                         "n = 11 alone needs weeks of CPU time")
    if shards < 1:
        raise DomainError("shards must be >= 1, got {}".format(shards))
    if n_max >= warn_n:
        logger.warning("Scanning n = {} enumerates {} classes and is slow"
                       .format(n_max, KNOWN_CLASS_COUNTS[n_max]))
    worker = functools.partial(scan_shard, ideal_bound=ideal_bound,
                               extension_bound=extension_bound,
                               canonical_bound=canonical_bound)
    results = []
    for n in range(1, n_max + 1):
        start = time.time()
        with logs.timer("scan.n{}_duration".format(n)):
            reps = list(enumerate_posets(n, enumerate_bound, canonical_bound))
            logger.info("Scanning {} classes on {} elements in {} shard(s)"
                        .format(len(reps), n, shards))
            if shards == 1:
                outcomes = [worker(reps)]
            else:
                with multiprocessing.Pool(shards) as pool:
                    outcomes = pool.map(worker, divvy(reps, shards))
        scanned = sum(count for count, _ in outcomes)
        violations = _sorted_violations(
            v for _, found in outcomes for v in found)
        result = ScanResult(n, scanned, violations, time.time() - start)
        logs.gauge("scan.classes", scanned)
        logs.gauge("scan.violations", len(violations))
        logger.info("n = {}: {} classes, {} violations".format(
            n, scanned, len(violations)))
        results.append(result)
    return results


def compositions(total: int):
    """Ordered tuples of positive integers summing to ``total``."""
    for cuts in range(1 << (total - 1)):
        parts = []
        size = 1
        for i in range(total - 1):
            if cuts >> i & 1:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        yield tuple(parts)


def ordinal_sum_chain(blocks: Sequence[Poset]) -> Poset:
    """``blocks[0] + blocks[1] + ...``, first block at the bottom."""
    return functools.reduce(ordinal_sum, blocks)


def antichain_sum_hstar(parts: Sequence[int], bound: int = SUM_BOUND,
                        eulerian: Dict[int, HStarVector] = None
                        ) -> HStarVector:
    """h* of the ordinal sum of antichains of sizes ``parts``."""
    eulerian = {} if eulerian is None else eulerian
    h = HStarVector([1], 0)
    for part in parts:
        if part not in eulerian:
            eulerian[part] = eulerian_polynomial(part, bound)
        h = hstar_ordinal_sum(h, eulerian[part])
    return h


def _violation(label: str, poset: Poset, h: HStarVector) -> Optional[dict]:
    """Violation record for an ordinal sum, or None when it is positive.

    Layers of an ordinal sum are twins or small blocks, so the canonical
    form stays cheap at the sizes the sum scans allow.
    """
    report = sign_report(ehrhart_from_hstar(h))
    if report.is_ehrhart_positive:
        return None
    return {"canonical_form": canonical_form(poset, poset.n).hex(),
            "label": label,
            "poset": poset.to_json(),
            "h_star": h.to_json(),
            "signs": report.to_json()}


def scan_antichain_sums(total: int, bound: int = SUM_BOUND) -> ScanResult:
    """Ordinal sums of antichains with ``total`` elements.

    There are ``2^(total-1)`` of them; h* of each is the product of
    Eulerian polynomials, which does not depend on the order of the parts.
    """
    if total < 1:
        raise DomainError("total must be >= 1, got {}".format(total))
    if total > bound:
        raise BoundError("antichain_sums", bound, total)
    start = time.time()
    eulerian = {}
    verdicts = {}
    violations = []
    scanned = 0
    with logs.timer("scan.antichain_sums_duration"):
        for parts in compositions(total):
            scanned += 1
            key = tuple(sorted(parts))
            if key not in verdicts:
                h = antichain_sum_hstar(key, bound, eulerian)
                report = sign_report(ehrhart_from_hstar(h))
                verdicts[key] = None if report.is_ehrhart_positive else h
            h = verdicts[key]
            if h is not None:
                label = "P_{{{}}}".format(",".join(str(p) for p in parts))
                poset = ordinal_sum_chain([make_antichain(p) for p in parts])
                violations.append(_violation(label, poset, h))
            logs.tick(scanned)
    violations = _sorted_violations(violations)
    logs.gauge("scan.antichain_sums.violations", len(violations))
    logger.info("Antichain sums of {}: {} compositions, {} distinct h*, "
                "{} violations".format(total, scanned, len(verdicts),
                                       len(violations)))
    return ScanResult(total, scanned, violations, time.time() - start)


def scan_block_sums(total: int, max_block: int = 4,
                    bound: int = SUM_BOUND,
                    enumerate_bound: int = ENUMERATE_BOUND,
                    canonical_bound: int = CANONICAL_FORM_BOUND,
                    ideal_bound: int = IDEAL_LATTICE_BOUND) -> ScanResult:
    """Ordinal sums of arbitrary posets with at most ``max_block`` elements
    each, ``total`` elements in all.

    h* of every block class is computed once by counting. Sums are built
    size by size, keeping one witness per distinct h*-vector.
    """
    if total < 1 or max_block < 1:
        raise DomainError("total and max_block must be >= 1")
    if total > bound:
        raise BoundError("block_sums", bound, total)
    if max_block > min(enumerate_bound, ENUMERATE_BOUND):
        raise BoundError("enumerate", min(enumerate_bound, ENUMERATE_BOUND),
                         max_block)
    start = time.time()
    max_block = min(max_block, total)
    with logs.timer("scan.block_sums_duration"):
        blocks = {}
        for size in range(1, max_block + 1):
            blocks[size] = [
                (p, hstar_by_counting(p, ideal_bound))
                for p in enumerate_posets(size, enumerate_bound,
                                          canonical_bound)]
            logger.debug("{} block classes of size {}".format(
                len(blocks[size]), size))
        # size -> {h* values: witness [(size, class index), ...]}
        reachable = {0: {(1,): []}}
        sums = {0: 1}
        for s in range(1, total + 1):
            reachable[s] = {}
            sums[s] = 0
            for b in range(1, min(s, max_block) + 1):
                sums[s] += sums[s - b] * len(blocks[b])
                for (values, witness), (index, (_, hb)) in product(
                        reachable[s - b].items(), enumerate(blocks[b])):
                    h = hstar_ordinal_sum(HStarVector(values, s - b), hb)
                    if h.values not in reachable[s]:
                        reachable[s][h.values] = witness + [(b, index)]
        violations = []
        for values, witness in sorted(reachable[total].items()):
            label = " + ".join("B{}.{}".format(b, i) for b, i in witness)
            poset = ordinal_sum_chain([blocks[b][i][0] for b, i in witness])
            found = _violation(label, poset, HStarVector(values, total))
            if found:
                violations.append(found)
        violations = _sorted_violations(violations)
    logs.gauge("scan.block_sums.violations", len(violations))
    logger.info("Block sums of {} (blocks <= {}): {} sums, {} distinct h*, "
                "{} violations".format(total, max_block, sums[total],
                                       len(reachable[total]),
                                       len(violations)))
    return ScanResult(total, sums[total], violations, time.time() - start)


class Table1Report(object):

    def __init__(self):
        self.rows = []
        self.mismatches = []

    def add_row(self, m, n, e, h, report):
        self.rows.append({
            "label": "P_{{{},{}}}".format(m, n),
            "m": m,
            "n": n,
            "dim": e.dim,
            "coefficients": e.poly.to_json(),
            "h_star": h.to_json(),
            "negative_degrees": report.negative_degrees,
            "is_ehrhart_positive": report.is_ehrhart_positive,
        })

    def mismatch(self, row, degree, expected, actual):
        logger.error("Mismatch in {} at degree {}: expected {}, got {}"
                     .format(row, degree, expected, actual))
        self.mismatches.append({"row": row, "degree": degree,
                                "expected": str(expected),
                                "actual": str(actual)})

    @property
    def ok(self):
        return not self.mismatches


def run_table1(fixtures: Optional[Tuple[Dict, Dict]] = None) -> Table1Report:
    """Recompute every ``P_{m,n}`` row and diff against the fixtures."""
    rows, eulerian = fixtures or load_table1_fixtures()
    report = Table1Report()
    with logs.timer("table1_duration"):
        for k, expected in sorted(eulerian.items()):
            actual = eulerian_polynomial(k).trimmed()
            if actual != tuple(expected):
                report.mismatch("A_{}".format(k), None, list(expected),
                                list(actual))
        for m, n in TABLE1_ROWS:
            label = "P_{{{},{}}}".format(m, n)
            e = ehrhart_pmn(m, n)
            h = hstar_ordinal_sum(eulerian_polynomial(m),
                                  eulerian_polynomial(n))
            signs = sign_report(e)
            report.add_row(m, n, e, h, signs)
            expected = rows.get((m, n))
            if expected is None:
                report.mismatch(label, None, "row", "missing fixture")
                continue
            for j in range(max(e.dim, expected.degree) + 1):
                if e.coefficient(j) != expected.coefficient(j):
                    report.mismatch(label, j, expected.coefficient(j),
                                    e.coefficient(j))
            positive = (m, n) in POSITIVE_TABLE1_ROWS
            if signs.is_ehrhart_positive != positive:
                report.mismatch(label, None,
                                "positive" if positive else "non-positive",
                                signs.negative_degrees)
    return report
