# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.

import io
import logging
import os
import tempfile

import simplejson as json

from order_ehrhart import logs
from order_ehrhart.errors import BoundError
from order_ehrhart.settings import DEFAULTS, load_settings
from test_support import TestCase, restore_env


class TestSettings(TestCase):

    def write_ini(self, text):
        tmp = tempfile.TemporaryDirectory()
        self.addCleanup(tmp.cleanup)
        path = os.path.join(tmp.name, "custom.ini")
        with open(path, "w") as f:
            f.write(text)
        return path

    def test_tests_ini(self):
        self.assertEqual(self.settings["scan.n_max"], 4)
        self.assertEqual(self.settings["bounds.ideal_lattice"], 20)
        self.assertEqual(self.setting("qk_k_max"), 60)

    def test_defaults_fill_gaps(self):
        path = self.write_ini("[scan]\nshards = 3\n")
        settings = load_settings(path, environ={})
        self.assertEqual(settings["scan.shards"], 3)
        self.assertEqual(settings["bounds.canonical_form"],
                         DEFAULTS["bounds.canonical_form"])
        self.assertEqual(settings["logging.level"], "INFO")

    def test_environment_overrides(self):
        path = self.write_ini("[bounds]\nideal_lattice = 18\n")
        settings = load_settings(
            path, environ={"ORDER_EHRHART_BOUNDS_IDEAL_LATTICE": "22",
                           "ORDER_EHRHART_SCAN_SHARDS": "2"})
        self.assertEqual(settings["bounds.ideal_lattice"], 22)
        self.assertEqual(settings["scan.shards"], 2)

    def test_config_from_environment(self):
        path = self.write_ini("[scan]\nn_max = 5\n")
        settings = load_settings(environ={"ORDER_EHRHART_CONFIG": path})
        self.assertEqual(settings["scan.n_max"], 5)

    @restore_env("ORDER_EHRHART_CONFIG")
    def test_missing_explicit_file(self):
        os.environ.pop("ORDER_EHRHART_CONFIG", None)
        with self.assertRaises(IOError):
            load_settings("/nonexistent/order_ehrhart.ini")


class TestErrorsAndLogging(TestCase):

    def test_bound_error(self):
        ex = BoundError("scan", 8, 11, "weeks of CPU time")
        self.assertIsInstance(ex, ValueError)
        self.assertEqual((ex.name, ex.bound, ex.value), ("scan", 8, 11))
        self.assertEqual(str(ex),
                         "scan bound exceeded: 11 > 8 (weeks of CPU time)")

    def test_json_lines(self):
        stream = io.StringIO()
        logs.init_logging("INFO", stream=stream)
        try:
            logging.getLogger("order_ehrhart.test").info("Starting scan")
            record = json.loads(stream.getvalue().splitlines()[-1])
            self.assertEqual(record["message"], "Starting scan")
            self.assertEqual(record["level"], "INFO")
            self.assertEqual(record["logger"], "order_ehrhart.test")
        finally:
            logs.init_logging(logging.WARNING)

    def test_tick(self):
        stream = io.StringIO()
        logs.init_logging(logging.INFO, stream=io.StringIO())
        try:
            for count in range(1, 2001):
                logs.tick(count, stream=stream)
            self.assertEqual(stream.getvalue(), ".........|.........|")
        finally:
            logs.init_logging(logging.WARNING)
