# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
"""Finite posets, order ideals, linear extensions and enumeration.

Elements are ``0 .. n-1``. ``leq[i, j]`` is True iff ``i <= j``. Subsets of
elements are int bitmasks (bit ``i`` set iff ``i`` is in the subset).
"""

import logging
from functools import cached_property
from typing import Iterator, List, Sequence, Tuple

import numpy as np
import simplejson as json

from . import logs
from .errors import BoundError, DomainError, PosetError

logger = logging.getLogger(__name__)

IDEAL_LATTICE_BOUND = 20
LINEAR_EXTENSION_BOUND = 12
CANONICAL_FORM_BOUND = 9
ENUMERATE_BOUND = 8

# Unlabeled posets on n = 0..8 elements.
KNOWN_CLASS_COUNTS = (1, 1, 2, 5, 16, 63, 318, 2045, 16999)


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _matmul(a, b):
    return (a.astype(np.int64) @ b.astype(np.int64)) > 0


def is_partial_order(rel) -> bool:
    """Check if the relation is reflexive, antisymmetric and transitive."""
    n = len(rel)
    if not rel[np.diag_indices(n)].all():
        return False
    if (rel & rel.T).sum() > n:
        return False
    if n and ((~rel) & _matmul(rel, rel)).any():
        return False
    return True


class Poset(object):
    """Immutable finite poset on ``0 .. n-1``."""

    def __init__(self, leq, check=True):
        try:
            leq = np.array(leq, dtype=bool)
        except ValueError as ex:
            raise PosetError("Relation is not a matrix: {}".format(ex))
        if leq.size == 0:
            leq = np.zeros((0, 0), dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise PosetError("Relation must be square, got {}".format(
                leq.shape))
        if check and not is_partial_order(leq):
            raise PosetError("Relation is not a partial order")
        leq.flags.writeable = False
        self.n = leq.shape[0]
        self.leq = leq

    # Construction

    @classmethod
    def from_relations(cls, matrix) -> "Poset":
        """Validate a full ``n x n`` relation (``matrix[i][j]`` iff
        ``i <= j``)."""
        return cls(matrix, check=True)

    @classmethod
    def from_covers(cls, n: int, covers: Sequence[Sequence[int]]) -> "Poset":
        """Reflexive-transitive closure of ``a < b`` for each ``(a, b)``."""
        if n < 0:
            raise PosetError("Element count must be >= 0")
        reach = np.eye(n, dtype=bool)
        for pair in covers:
            if len(pair) != 2:
                raise PosetError("Cover must be a pair, got {}".format(pair))
            a, b = (int(x) for x in pair)
            if not (0 <= a < n and 0 <= b < n):
                raise PosetError(
                    "Cover {} out of range for n={}".format(pair, n))
            if a == b:
                raise PosetError("Cover {} is a loop".format(pair))
            reach[a, b] = True
        # Floyd-Warshall closure
        for k in range(n):
            reach |= reach[:, k, None] & reach[None, k, :]
        if (reach & reach.T).sum() > n:
            raise PosetError("Covers contain a cycle")
        return cls(reach, check=False)

    @classmethod
    def from_json(cls, data) -> "Poset":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        try:
            n = int(data["n"])
            covers = data.get("covers", [])
        except (KeyError, TypeError, ValueError) as ex:
            raise PosetError("Malformed poset data: {}".format(ex))
        return cls.from_covers(n, covers)

    def to_json(self) -> dict:
        return {"n": self.n, "covers": [list(c) for c in self.covers]}

    # Structure

    @cached_property
    def covers(self) -> Tuple[Tuple[int, int], ...]:
        """Transitive reduction, as ``(a, b)`` with ``b`` covering ``a``."""
        n = self.n
        lt = self.leq & ~np.eye(n, dtype=bool)
        child = lt & ~_matmul(lt, lt) if n else lt
        return tuple((int(a), int(b)) for a, b in zip(*np.nonzero(child)))

    @cached_property
    def down_masks(self) -> Tuple[int, ...]:
        """``down_masks[i]`` = {x : x <= i} (includes i)."""
        return tuple(
            sum(1 << x for x in range(self.n) if self.leq[x, i])
            for i in range(self.n))

    @cached_property
    def up_masks(self) -> Tuple[int, ...]:
        return tuple(
            sum(1 << x for x in range(self.n) if self.leq[i, x])
            for i in range(self.n))

    @cached_property
    def strict_down_masks(self) -> Tuple[int, ...]:
        return tuple(m & ~(1 << i) for i, m in enumerate(self.down_masks))

    @cached_property
    def strict_up_masks(self) -> Tuple[int, ...]:
        return tuple(m & ~(1 << i) for i, m in enumerate(self.up_masks))

    @cached_property
    def height(self) -> Tuple[int, ...]:
        """Length of the longest chain ending at each element (0 = minimal).
        """
        height = [0] * self.n
        for x in self.linear_extension:
            for y in _bits(self.strict_down_masks[x]):
                height[x] = max(height[x], height[y] + 1)
        return tuple(height)

    @cached_property
    def linear_extension(self) -> Tuple[int, ...]:
        """Reference linear extension: always take the smallest minimal
        remaining element."""
        placed = 0
        order = []
        down = self.strict_down_masks
        for _ in range(self.n):
            for x in range(self.n):
                if not placed >> x & 1 and down[x] & ~placed == 0:
                    order.append(x)
                    placed |= 1 << x
                    break
        return tuple(order)

    def relabel(self, perm: Sequence[int]) -> "Poset":
        """Copy in which element ``i`` becomes ``perm[i]``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise PosetError("Invalid permutation {}".format(list(perm)))
        inverse = [0] * n
        for old, new in enumerate(perm):
            inverse[new] = old
        leq = self.leq[np.ix_(inverse, inverse)] if n else self.leq
        return Poset(leq, check=False)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and bool((self.leq == other.leq).all())

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.n, self.leq.tobytes()))

    def __repr__(self):
        return "Poset(n={}, covers={})".format(self.n, list(self.covers))

    def __getstate__(self):
        return {"leq": self.leq.tolist()}

    def __setstate__(self, state):
        leq = np.array(state["leq"], dtype=bool).reshape(
            len(state["leq"]), len(state["leq"]))
        leq.flags.writeable = False
        self.n = leq.shape[0]
        self.leq = leq


def load_poset(path) -> Poset:
    with open(path) as f:
        try:
            data = json.load(f)
        except ValueError as ex:
            raise PosetError("{}: not valid JSON ({})".format(path, ex))
    return Poset.from_json(data)


def dump_poset(poset: Poset) -> str:
    return json.dumps(poset.to_json())


# Constructors

def make_antichain(k: int) -> Poset:
    if k < 0:
        raise DomainError("Antichain size must be >= 0")
    return Poset(np.eye(k, dtype=bool), check=False)


def make_chain(k: int) -> Poset:
    if k < 1:
        raise DomainError("Chain length must be >= 1, got {}".format(k))
    return Poset(np.triu(np.ones((k, k), dtype=bool)), check=False)


def make_qk(k: int) -> Poset:
    """One minimal element (0) covered by ``k`` others."""
    if k < 0:
        raise DomainError("k must be >= 0")
    return Poset.from_covers(k + 1, [(0, i) for i in range(1, k + 1)])


def ordinal_sum(p: Poset, q: Poset) -> Poset:
    """Every element of ``p`` below every element of ``q``.

    Elements of ``q`` are relabeled by ``+ p.n``.
    """
    n = p.n + q.n
    leq = np.zeros((n, n), dtype=bool)
    leq[:p.n, :p.n] = p.leq
    leq[p.n:, p.n:] = q.leq
    leq[:p.n, p.n:] = True
    return Poset(leq, check=False)


def make_pmn(m: int, n: int) -> Poset:
    if m < 1 or n < 1:
        raise DomainError("m and n must be >= 1")
    return ordinal_sum(make_antichain(m), make_antichain(n))


# Order ideals

class IdealLattice(object):
    """Order ideals of a poset and their cover relations.

    ``ideals`` are bitmasks sorted by size then value, so ``ideals[0]`` is
    the empty ideal and ``ideals[-1]`` the whole poset. ``covers`` holds
    ``(lower, upper, element)`` index triples with
    ``ideals[upper] == ideals[lower] | 1 << element``.
    """

    def __init__(self, poset: Poset, ideals: Sequence[int]):
        self.poset = poset
        self.ideals = tuple(sorted(ideals, key=lambda m: (bin(m).count("1"),
                                                          m)))
        self.index = {mask: i for i, mask in enumerate(self.ideals)}

    @cached_property
    def covers(self) -> Tuple[Tuple[int, int, int], ...]:
        up = self.poset.strict_up_masks
        covers = []
        for upper, mask in enumerate(self.ideals):
            for x in _bits(mask):
                if up[x] & mask == 0:
                    covers.append((self.index[mask ^ (1 << x)], upper, x))
        return tuple(covers)

    def __len__(self):
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    @cached_property
    def covers_by_element(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        grouped = [[] for _ in range(self.poset.n)]
        for lower, upper, x in self.covers:
            grouped[x].append((lower, upper))
        return tuple(tuple(g) for g in grouped)

    def contains(self, a: int, b: int) -> bool:
        """Is ideal number ``a`` a subset of ideal number ``b``?"""
        return self.ideals[a] & ~self.ideals[b] == 0

    def as_sets(self) -> List[frozenset]:
        return [frozenset(_bits(m)) for m in self.ideals]


def ideal_lattice(p: Poset, bound: int = IDEAL_LATTICE_BOUND) -> IdealLattice:
    if p.n > bound:
        raise BoundError("ideal_lattice", bound, p.n,
                         "ideal lattices of up to 2^n elements")
    down = p.strict_down_masks
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            for x in range(p.n):
                if not mask >> x & 1 and down[x] & ~mask == 0:
                    grown = mask | 1 << x
                    if grown not in seen:
                        seen.add(grown)
                        nxt.append(grown)
        frontier = nxt
    return IdealLattice(p, seen)


# Linear extensions

def linear_extensions(p: Poset,
                      bound: int = LINEAR_EXTENSION_BOUND
                      ) -> Iterator[Tuple[int, ...]]:
    """Every linear extension once, in lexicographic order."""
    if p.n > bound:
        raise BoundError("linear_extensions", bound, p.n)
    down = p.strict_down_masks
    n = p.n
    order = []

    def extend(placed):
        if len(order) == n:
            yield tuple(order)
            return
        for x in range(n):
            if not placed >> x & 1 and down[x] & ~placed == 0:
                order.append(x)
                yield from extend(placed | 1 << x)
                order.pop()

    return extend(0)


def count_linear_extensions(p: Poset,
                            lattice: IdealLattice = None) -> int:
    """Number of maximal chains of the ideal lattice."""
    lattice = lattice or ideal_lattice(p)
    counts = [0] * len(lattice)
    counts[0] = 1
    for lower, upper, _ in lattice.covers:
        counts[upper] += counts[lower]
    return counts[-1]


def natural_labeling(p: Poset) -> Poset:
    """Relabel so the reference linear extension reads ``0, 1, ..., n-1``.
    """
    perm = [0] * p.n
    for position, x in enumerate(p.linear_extension):
        perm[x] = position
    return p.relabel(perm)


# Isomorphism

def _rank(signatures):
    table = {sig: r for r, sig in enumerate(sorted(set(signatures)))}
    return [table[sig] for sig in signatures]


def invariant_colors(p: Poset) -> List[int]:
    """Relabeling-invariant colouring of the elements.

    Starts from (strict down-degree, strict up-degree, height) and refines
    with the colours of the elements above and below until stable.
    """
    n = p.n
    down = [list(_bits(m)) for m in p.strict_down_masks]
    up = [list(_bits(m)) for m in p.strict_up_masks]
    colors = _rank([(len(down[i]), len(up[i]), p.height[i])
                    for i in range(n)])
    while True:
        refined = _rank([
            (colors[i],
             tuple(sorted(colors[j] for j in down[i])),
             tuple(sorted(colors[j] for j in up[i])))
            for i in range(n)])
        if len(set(refined)) == len(set(colors)):
            return colors
        colors = refined


def canonical_labeling(p: Poset,
                       bound: int = CANONICAL_FORM_BOUND) -> Tuple[int, ...]:
    """Order of elements giving the canonical relation matrix.

    Position ``k`` is filled from the k-th slot of the colour-sorted
    elements; among candidates only those whose new row/column block is
    lexicographically least survive. Twins (same strict up- and down-sets)
    are interchangeable, so only one of them is tried.
    """
    if p.n > bound:
        raise BoundError("canonical_form", bound, p.n)
    n = p.n
    leq = p.leq.tolist()
    colors = invariant_colors(p)
    slots = sorted(colors)
    twin = [(p.strict_down_masks[i], p.strict_up_masks[i]) for i in range(n)]

    def search(order, used):
        k = len(order)
        if k == n:
            return [], []
        seen = set()
        blocks = []
        for x in range(n):
            if used >> x & 1 or colors[x] != slots[k] or twin[x] in seen:
                continue
            seen.add(twin[x])
            block = (tuple(leq[x][y] for y in order) +
                     tuple(leq[y][x] for y in order))
            blocks.append((block, x))
        least = min(block for block, _ in blocks)
        best = None
        for block, x in blocks:
            if block != least:
                continue
            order.append(x)
            seq, rest = search(order, used | 1 << x)
            order.pop()
            candidate = ([block] + seq, [x] + rest)
            if best is None or candidate[0] < best[0]:
                best = candidate
        return best

    return tuple(search([], 0)[1])


def canonical_poset(p: Poset, bound: int = CANONICAL_FORM_BOUND) -> Poset:
    order = canonical_labeling(p, bound)
    perm = [0] * p.n
    for position, x in enumerate(order):
        perm[x] = position
    return p.relabel(perm)


def _form_of(canon: Poset) -> bytes:
    return bytes([canon.n]) + np.packbits(canon.leq.flatten()).tobytes()


def canonical_form(p: Poset, bound: int = CANONICAL_FORM_BOUND) -> bytes:
    """Byte string equal for two posets iff they are isomorphic."""
    return _form_of(canonical_poset(p, bound))


def _add_maximal(p: Poset, ideal: int) -> Poset:
    n = p.n
    leq = np.zeros((n + 1, n + 1), dtype=bool)
    leq[:n, :n] = p.leq
    leq[n, n] = True
    for x in _bits(ideal):
        leq[x, n] = True
    return Poset(leq, check=False)


def enumerate_posets(n: int, bound: int = ENUMERATE_BOUND,
                     canonical_bound: int = CANONICAL_FORM_BOUND
                     ) -> Iterator[Poset]:
    """One representative per isomorphism class on ``n`` elements.

    Grows level by level: every poset on ``m + 1`` elements is a poset on
    ``m`` elements plus a new maximal element sitting over an order ideal.
    Representatives are canonically labeled and come out in canonical-form
    order.
    """
    if n < 1:
        raise DomainError("enumerate_posets needs n >= 1, got {}".format(n))
    if n > bound:
        raise BoundError("enumerate_posets", bound, n,
                         "isomorphism-free enumeration beyond this is "
                         "out of reach")
    level = {canonical_form(make_antichain(1), canonical_bound):
             make_antichain(1)}
    for size in range(1, n):
        with logs.timer("poset.enumerate_level"):
            grown = {}
            for rep in level.values():
                for ideal in ideal_lattice(rep).ideals:
                    candidate = _add_maximal(rep, ideal)
                    canon = canonical_poset(candidate, canonical_bound)
                    grown.setdefault(_form_of(canon), canon)
            level = grown
        expected = KNOWN_CLASS_COUNTS[size + 1]
        if len(level) != expected:
            logger.error("Enumerated {} classes on {} elements, expected {}"
                         .format(len(level), size + 1, expected))
        else:
            logger.debug("Enumerated {} classes on {} elements".format(
                len(level), size + 1))
    for form in sorted(level):
        yield level[form]
