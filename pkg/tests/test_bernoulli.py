# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.

import threading
from fractions import Fraction

from order_ehrhart.bernoulli import (BernoulliTable, bernoulli_even_recurrence,
                                     bernoulli_number, bernoulli_polynomial,
                                     bernoulli_table, bk_plus_k_is_negative,
                                     bk_plus_k_negative_predicted,
                                     check_properties, power_sum,
                                     power_sum_polynomial)
from order_ehrhart.errors import DomainError
from order_ehrhart.exactnum import Polynomial
from test_support import TestCase

F = Fraction

KNOWN = [F(1), F(1, 2), F(1, 6), 0, F(-1, 30), 0, F(1, 42), 0, F(-1, 30), 0,
         F(5, 66), 0, F(-691, 2730), 0, F(7, 6), 0, F(-3617, 510), 0,
         F(43867, 798), 0, F(-174611, 330)]


class TestBernoulli(TestCase):

    def test_known_values(self):
        self.assertEqual([b for _, b in bernoulli_table(20)], KNOWN)
        self.assertEqual(bernoulli_table(2), [(0, 1), (1, F(1, 2)),
                                              (2, F(1, 6))])

    def test_b1_convention(self):
        self.assertEqual(bernoulli_number(1), F(1, 2))

    def test_negative_index(self):
        with self.assertRaises(DomainError):
            bernoulli_number(-1)

    def test_polynomials(self):
        self.assertEqual(bernoulli_polynomial(0), Polynomial([1]))
        self.assertEqual(bernoulli_polynomial(1), Polynomial([F(-1, 2), 1]))
        self.assertEqual(bernoulli_polynomial(2),
                         Polynomial([F(1, 6), -1, 1]))
        # B_k(1) is B_k in this convention
        for k in range(12):
            self.assertEqual(bernoulli_polynomial(k)(1), bernoulli_number(k))

    def test_power_sums(self):
        self.assertEqual(power_sum(3, 10), 3025)
        self.assertEqual(power_sum(0, 7), 7)
        self.assertEqual(power_sum(5, 0), 0)
        for n in range(8):
            poly = power_sum_polynomial(n)
            self.assertEqual(poly.degree, n + 1)
            self.assertEqual(poly.coefficient(0), 0)
            self.assertEqual(poly.leading, F(1, n + 1))

    def test_even_recurrence(self):
        self.assertEqual(bernoulli_even_recurrence(2), F(-1, 30))
        self.assertEqual(bernoulli_even_recurrence(10), F(-174611, 330))
        with self.assertRaises(DomainError):
            bernoulli_even_recurrence(1)

    def test_bk_plus_k(self):
        self.assertFalse(bk_plus_k_is_negative(16))
        self.assertTrue(bk_plus_k_is_negative(20))
        self.assertFalse(bk_plus_k_is_negative(22))
        self.assertTrue(bk_plus_k_is_negative(24))
        self.assertEqual(
            [k for k in range(41) if bk_plus_k_negative_predicted(k)],
            [20, 24, 28, 32, 36, 40])

    def test_bk_plus_k_through_200(self):
        self.assertEqual(
            [k for k in range(201)
             if bk_plus_k_is_negative(k) != bk_plus_k_negative_predicted(k)],
            [])

    def test_check_properties(self):
        self.assertEqual(check_properties(100), {})

    def test_concurrent_growth(self):
        table = BernoulliTable()
        results = []

        def grow(n):
            results.append(table.prefix(n))

        threads = [threading.Thread(target=grow, args=(n,))
                   for n in (40, 10, 60, 25)]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()
        self.assertGreaterEqual(len(table), 61)
        for prefix in results:
            self.assertEqual(prefix[:21], KNOWN[:len(prefix[:21])])
            self.assertEqual(prefix, [bernoulli_number(i)
                                      for i in range(len(prefix))])
