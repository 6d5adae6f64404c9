# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.

from fractions import Fraction

from order_ehrhart.ehrhart import (ehrhart_by_counting, ehrhart_pmn,
                                   ehrhart_qk_closed_form)
from order_ehrhart.errors import DomainError
from order_ehrhart.poset import Poset, make_antichain
from order_ehrhart.positivity import (NEGATIVE, NONE_PROVEN, POSITIVE,
                                      UNKNOWN, counterexample_for_dimension,
                                      find_counterexample,
                                      highest_negative_degree,
                                      poset_with_negatives, qk_negative_count,
                                      qk_sign_mismatches, qk_sign_predicted,
                                      sign_report)
from test_support import TestCase


class TestSignReport(TestCase):

    def test_q20(self):
        report = sign_report(ehrhart_qk_closed_form(20))
        self.assertEqual(report.negative_degrees, [1])
        self.assertFalse(report.is_ehrhart_positive)
        self.assertEqual(report.dim, 21)

    def test_p88(self):
        report = sign_report(ehrhart_pmn(8, 8))
        self.assertEqual(report.negative_degrees, [1, 2])

    def test_cube(self):
        report = sign_report(ehrhart_by_counting(make_antichain(5)))
        self.assertTrue(report.is_ehrhart_positive)
        self.assertEqual(report.signs, (POSITIVE,) * 6)
        self.assertEqual(report.zero_degrees, [])

    def test_json(self):
        data = sign_report(ehrhart_qk_closed_form(20)).to_json()
        self.assertEqual(data["negative_degrees"], [1])
        self.assertEqual(data["signs"][1], NEGATIVE)
        self.assertFalse(data["is_ehrhart_positive"])


class TestQkSigns(TestCase):

    def test_predictions(self):
        self.assertEqual(qk_sign_predicted(20, 1), NEGATIVE)
        self.assertEqual({qk_sign_predicted(19, j) for j in range(1, 19)},
                         {POSITIVE})
        self.assertEqual(qk_sign_predicted(43, 24), NEGATIVE)
        self.assertLess(ehrhart_qk_closed_form(43).coefficient(24), 0)
        self.assertTrue(
            sign_report(ehrhart_qk_closed_form(19)).is_ehrhart_positive)
        with self.assertRaises(DomainError):
            qk_sign_predicted(20, 0)
        with self.assertRaises(DomainError):
            qk_sign_predicted(20, 20)

    def test_census(self):
        k_max = self.setting("qk_k_max")
        self.assertEqual(qk_sign_mismatches(k_max), [])
        for k in range(2, k_max + 1):
            report = sign_report(ehrhart_qk_closed_form(k))
            self.assertEqual(report.zero_degrees, [])
            self.assertEqual(len(report.negative_degrees),
                             qk_negative_count(k))
            if k >= 20:
                self.assertEqual(max(report.negative_degrees),
                                 highest_negative_degree(k))
            else:
                self.assertIsNone(highest_negative_degree(k))

    def test_negative_count(self):
        self.assertEqual(qk_negative_count(19), 0)
        self.assertEqual(qk_negative_count(20), 1)
        self.assertEqual(qk_negative_count(23), 1)
        self.assertEqual(qk_negative_count(24), 2)
        self.assertEqual(qk_negative_count(0), 0)

    def test_highest_negative_degree(self):
        self.assertEqual(highest_negative_degree(20), 1)
        self.assertEqual(highest_negative_degree(23), 4)
        self.assertEqual(highest_negative_degree(24), 5)
        self.assertEqual(
            sign_report(ehrhart_qk_closed_form(24)).negative_degrees, [1, 5])


class TestConstructions(TestCase):

    def test_poset_with_negatives(self):
        self.assertEqual(poset_with_negatives(1).n, 21)
        self.assertEqual(poset_with_negatives(2).n, 25)
        for ell in range(1, 9):
            p = poset_with_negatives(ell)
            k = p.n - 1
            self.assertEqual(k, 4 * ell + 16)
            report = sign_report(ehrhart_qk_closed_form(k))
            self.assertEqual(len(report.negative_degrees), ell)
            fewer = sign_report(ehrhart_qk_closed_form(k - 1))
            self.assertEqual(len(fewer.negative_degrees), ell - 1)
        with self.assertRaises(DomainError):
            poset_with_negatives(0)

    def test_counterexamples(self):
        result = find_counterexample(14)
        self.assertEqual(result.label, "P_{7,7}")
        self.assertEqual(result.poset.n, 14)
        self.assertEqual(ehrhart_pmn(7, 7).coefficient(1),
                         Fraction(-3041, 1430))
        self.assertEqual(counterexample_for_dimension(12), UNKNOWN)
        self.assertEqual(counterexample_for_dimension(13), UNKNOWN)
        self.assertEqual(counterexample_for_dimension(11), NONE_PROVEN)
        self.assertEqual(counterexample_for_dimension(1), NONE_PROVEN)
        q20 = counterexample_for_dimension(21)
        self.assertIsInstance(q20, Poset)
        self.assertEqual(len(q20.covers), 20)
        self.assertEqual(find_counterexample(21).label, "Q_20")
        with self.assertRaises(DomainError):
            counterexample_for_dimension(0)

    def test_every_dimension_verified(self):
        labels = {}
        for d in range(14, 31):
            result = find_counterexample(d)
            self.assertTrue(result.found)
            self.assertEqual(result.poset.n, d)
            self.assertFalse(result.report.is_ehrhart_positive)
            labels[d] = result.label
        self.assertEqual(labels[20], "P_{10,10}")
        self.assertEqual(labels[30], "Q_29")

    def test_json(self):
        self.assertEqual(find_counterexample(12).to_json(),
                         {"dim": 12, "result": UNKNOWN})
        data = find_counterexample(15).to_json()
        self.assertEqual(data["label"], "P_{7,8}")
        self.assertEqual(data["poset"]["n"], 15)
