# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
"""Shared helpers for the order_ehrhart tests.

Besides the ``TestCase`` base there are slow but obviously correct oracles
used to cross-check the real implementations on small inputs.
"""

import functools
import os
import random
import sys
import unittest
from itertools import combinations, permutations, product

import numpy as np

from order_ehrhart.poset import Poset, enumerate_posets, is_partial_order
from order_ehrhart.settings import load_settings


def get_test_settings(root, ini_file="tests.ini"):
    """Find a file with testing settings and load it."""
    ini_dir = os.path.dirname(os.path.abspath(root))
    while True:
        ini_path = os.path.join(ini_dir, ini_file)
        if os.path.exists(ini_path):
            break
        parent = os.path.split(ini_dir)[0]
        if parent == ini_dir:
            raise RuntimeError("cannot locate " + ini_file)
        ini_dir = parent
    return load_settings(ini_path, environ={})


def restore_env(*keys):
    """Decorator that ensures os.environ gets restored after a test.

    Given a list of environment variable keys, this decorator will save the
    current values of those environment variables at the start of the call
    and restore them to those values at the end.
    """
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwds):
            values = [os.environ.get(key) for key in keys]
            try:
                return func(*args, **kwds)
            finally:
                for key, value in zip(keys, values):
                    if value is None:
                        os.environ.pop(key, None)
                    else:
                        os.environ[key] = value
        return wrapper
    return decorator


class TestCase(unittest.TestCase):
    """TestCase with the settings from tests.ini loaded."""

    def setUp(self):
        super(TestCase, self).setUp()
        self.settings = self.get_settings()
        self.rng = random.Random(int(self.settings["tests.random_seed"]))

    def get_settings(self):
        if not hasattr(self, "ini_file"):
            self.ini_file = os.environ.get("ORDER_EHRHART_TEST_INI_FILE",
                                           "tests.ini")
        __file__ = sys.modules[self.__class__.__module__].__file__
        return get_test_settings(__file__, self.ini_file)

    def setting(self, name):
        return int(self.settings["tests." + name])

    def all_posets(self, n_max):
        """One poset per class, for every size 1..n_max."""
        for n in range(1, n_max + 1):
            for p in enumerate_posets(n):
                yield p

    def shuffled(self, p):
        perm = list(range(p.n))
        self.rng.shuffle(perm)
        return p.relabel(perm)


# Oracles

def brute_count_points(p, t):
    """Order-preserving maps into {0..t}, by trying every map."""
    count = 0
    pairs = [(a, b) for a in range(p.n) for b in range(p.n)
             if a != b and p.leq[a, b]]
    for values in product(range(t + 1), repeat=p.n):
        if all(values[a] <= values[b] for a, b in pairs):
            count += 1
    return count


def naturally_labeled_posets(n):
    """Every poset on 0..n-1 in which ``i < j`` in the order implies
    ``i < j`` as integers. Each isomorphism class appears at least once."""
    slots = list(combinations(range(n), 2))
    for chosen in range(1 << len(slots)):
        leq = np.eye(n, dtype=bool)
        for bit, (a, b) in enumerate(slots):
            if chosen >> bit & 1:
                leq[a, b] = True
        if is_partial_order(leq):
            yield Poset(leq, check=False)


def brute_canonical(p):
    """Smallest relation matrix over all n! relabelings."""
    best = None
    for order in permutations(range(p.n)):
        key = p.leq[np.ix_(order, order)].tobytes()
        if best is None or key < best:
            best = key
    return best


def brute_isomorphic(p, q):
    return p.n == q.n and brute_canonical(p) == brute_canonical(q)


def brute_force_classes(n):
    """``{brute canonical key: representative}``."""
    classes = {}
    for p in naturally_labeled_posets(n):
        classes.setdefault(brute_canonical(p), p)
    return classes
