# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
"""``order-ehrhart`` command line.

Results are written to stdout as one JSON document per line; logs and
progress marks go to stderr.
"""

import argparse
import logging
import os
import sys
from datetime import datetime

import simplejson as json

from . import logs
from .bernoulli import bernoulli_table, check_properties
from .ehrhart import (EhrhartPolynomial, HStarVector, ehrhart_pmn,
                      ehrhart_polynomial, ehrhart_qk_closed_form,
                      eulerian_polynomial, hstar_from_ehrhart,
                      hstar_ordinal_sum)
from .errors import EhrhartError, InvariantError
from .exactnum import Polynomial, format_rational
from .poset import load_poset
from .positivity import find_counterexample, sign_report
from .scan import (run_table1, scan_all_posets, scan_antichain_sums,
                   scan_block_sums)
from .settings import CONFIG_ENV, load_settings

logger = logging.getLogger("order_ehrhart")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class Output(object):
    """Line-delimited JSON writer."""

    def __init__(self, stream=None, pretty=False):
        self.stream = stream or sys.stdout
        self.pretty = pretty

    def write(self, record):
        self.stream.write(json.dumps(record) + "\n")
        self.stream.flush()

    def polynomial(self, e: EhrhartPolynomial, h: HStarVector, **extra):
        record = e.to_json()
        record["h_star"] = h.to_json()
        record.update(extra)
        if self.pretty:
            record["pretty"] = e.poly.pretty("t")
            record["h_star_pretty"] = h.as_polynomial().pretty("z")
        self.write(record)


def cmd_bernoulli(args, settings, out):
    for n, value in bernoulli_table(args.max):
        out.write({"n": n, "B": format_rational(value)})
    if args.check:
        failures = check_properties(args.max)
        out.write({"check": "failed" if failures else "ok",
                   "failures": failures})
        if failures:
            return EXIT_VIOLATION
    return EXIT_OK


def cmd_ehrhart(args, settings, out):
    poset = load_poset(args.poset)
    e, h = ehrhart_polynomial(
        poset, args.method,
        ideal_bound=settings["bounds.ideal_lattice"],
        extension_bound=settings["bounds.linear_extensions"])
    out.polynomial(e, h)
    return EXIT_OK


def cmd_qk(args, settings, out):
    e = ehrhart_qk_closed_form(args.k).validate()
    out.polynomial(e, hstar_from_ehrhart(e), label="Q_{}".format(args.k))
    return EXIT_OK


def cmd_pmn(args, settings, out):
    bound = settings["bounds.eulerian"]
    e = ehrhart_pmn(args.m, args.n, bound).validate()
    h = hstar_ordinal_sum(eulerian_polynomial(args.m, bound),
                          eulerian_polynomial(args.n, bound))
    out.polynomial(e, h, label="P_{{{},{}}}".format(args.m, args.n))
    return EXIT_OK


def cmd_signs(args, settings, out):
    record = sign_report(ehrhart_qk_closed_form(args.k)).to_json()
    record["label"] = "Q_{}".format(args.k)
    out.write(record)
    return EXIT_OK


def cmd_counterexample(args, settings, out):
    out.write(find_counterexample(args.dim).to_json())
    return EXIT_OK


def _setting(value, settings, key):
    return settings[key] if value is None else value


def cmd_scan(args, settings, out):
    results = scan_all_posets(
        _setting(args.n_max, settings, "scan.n_max"),
        _setting(args.shards, settings, "scan.shards"),
        bound=settings["bounds.scan"],
        warn_n=settings["scan.warn_n"],
        enumerate_bound=settings["bounds.enumerate"],
        canonical_bound=settings["bounds.canonical_form"],
        ideal_bound=settings["bounds.ideal_lattice"],
        extension_bound=settings["bounds.linear_extensions"])
    for result in results:
        out.write(result.to_json())
    return EXIT_OK if all(r.ok for r in results) else EXIT_VIOLATION


def cmd_scan_antichain_sums(args, settings, out):
    result = scan_antichain_sums(args.total,
                                 bound=settings["bounds.antichain_sums"])
    out.write(result.to_json())
    return EXIT_OK if result.ok else EXIT_VIOLATION


def cmd_scan_block_sums(args, settings, out):
    result = scan_block_sums(
        args.total, _setting(args.max_block, settings, "scan.max_block"),
        bound=settings["bounds.block_sums"],
        enumerate_bound=settings["bounds.enumerate"],
        canonical_bound=settings["bounds.canonical_form"],
        ideal_bound=settings["bounds.ideal_lattice"])
    out.write(result.to_json())
    return EXIT_OK if result.ok else EXIT_VIOLATION


def cmd_table1(args, settings, out):
    report = run_table1()
    for row in report.rows:
        if out.pretty:
            row = dict(row, pretty=ehrhart_text(row["coefficients"]))
        out.write(row)
    out.write({"mismatches": report.mismatches})
    return EXIT_OK if report.ok else EXIT_VIOLATION


def ehrhart_text(coefficients):
    return Polynomial.from_json(coefficients).pretty("t")


def get_args(argv=None):
    parser = argparse.ArgumentParser(
        prog="order-ehrhart",
        description="Ehrhart polynomials of order polytopes")
    parser.add_argument(
        "--config",
        default=os.environ.get(CONFIG_ENV),
        help="INI settings file (default: ${} or ./order_ehrhart.ini)".format(
            CONFIG_ENV))
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="verbose logging")
    parser.add_argument(
        "--quiet",
        action="store_true",
        help="silence logging")
    parser.add_argument(
        "--pretty",
        action="store_true",
        help="add human readable polynomials to the output")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    cmd = sub.add_parser("bernoulli", help="Bernoulli numbers B_0..B_N")
    cmd.add_argument("--max", type=int, required=True)
    cmd.add_argument(
        "--check", action="store_true",
        help="also verify parity, sign, difference and power sum identities")
    cmd.set_defaults(func=cmd_bernoulli)

    cmd = sub.add_parser("ehrhart", help="Ehrhart polynomial of a poset file")
    cmd.add_argument("--poset", required=True,
                     help='JSON file: {"n": N, "covers": [[a, b], ...]}')
    cmd.add_argument("--method", choices=["counting", "hstar", "auto"],
                     default="auto",
                     help="computation method (default: auto)")
    cmd.set_defaults(func=cmd_ehrhart)

    cmd = sub.add_parser("qk", help="closed form for Q_K")
    cmd.add_argument("--k", type=int, required=True)
    cmd.set_defaults(func=cmd_qk)

    cmd = sub.add_parser("pmn", help="P_{M,N} through Eulerian products")
    cmd.add_argument("--m", type=int, required=True)
    cmd.add_argument("--n", type=int, required=True)
    cmd.set_defaults(func=cmd_pmn)

    cmd = sub.add_parser("signs", help="coefficient signs of Q_K")
    cmd.add_argument("--k", type=int, required=True)
    cmd.set_defaults(func=cmd_signs)

    cmd = sub.add_parser("counterexample",
                         help="non-Ehrhart-positive poset of dimension D")
    cmd.add_argument("--dim", type=int, required=True)
    cmd.set_defaults(func=cmd_counterexample)

    cmd = sub.add_parser("scan", help="all posets up to N elements")
    cmd.add_argument(
        "--n-max", type=int,
        default=os.environ.get("ORDER_EHRHART_SCAN_N_MAX"),
        help="largest size to scan (default: scan.n_max setting)")
    cmd.add_argument(
        "--shards", type=int,
        default=os.environ.get("ORDER_EHRHART_SCAN_SHARDS"),
        help="worker processes (default: scan.shards setting)")
    cmd.set_defaults(func=cmd_scan)

    cmd = sub.add_parser("scan-antichain-sums",
                         help="all ordinal sums of antichains of size T")
    cmd.add_argument("--total", type=int, required=True)
    cmd.set_defaults(func=cmd_scan_antichain_sums)

    cmd = sub.add_parser("scan-block-sums",
                         help="all ordinal sums of small posets of size T")
    cmd.add_argument("--total", type=int, required=True)
    cmd.add_argument(
        "--max-block", type=int,
        default=os.environ.get("ORDER_EHRHART_SCAN_MAX_BLOCK"),
        help="largest block size (default: scan.max_block setting)")
    cmd.set_defaults(func=cmd_scan_block_sums)

    cmd = sub.add_parser("table1", aliases=["pmn-table"],
                         help="reproduce the P_{m,n} table")
    cmd.set_defaults(func=cmd_table1)

    args = parser.parse_args(argv)
    for name in ("n_max", "shards", "max_block"):
        if getattr(args, name, None) is not None:
            setattr(args, name, int(getattr(args, name)))
    return args


def main(argv=None, stdout=None):
    try:
        args = get_args(argv)
    except SystemExit as ex:
        return EXIT_USAGE if ex.code else EXIT_OK
    log_level = logging.INFO
    if args.quiet:
        log_level = logging.ERROR
    if args.verbose:
        log_level = logging.DEBUG
    try:
        settings = load_settings(args.config)
    except (IOError, ValueError) as ex:
        logs.init_logging(log_level)
        logger.error("Could not load settings: {}".format(ex))
        return EXIT_USAGE
    if not (args.quiet or args.verbose):
        log_level = settings["logging.level"]
    logs.init_logging(log_level)
    out = Output(stdout, pretty=args.pretty)

    start_time = datetime.now()
    logger.info("Starting {}".format(args.command))
    try:
        with logs.timer("{}.total_duration".format(
                args.command.replace("-", "_"))):
            status = args.func(args, settings, out)
    except InvariantError as ex:
        logger.debug("Invariant failure", exc_info=True)
        logger.error("Internal error: {}".format(ex))
        return EXIT_INTERNAL
    except (EhrhartError, IOError, ValueError) as ex:
        logger.debug("Input error", exc_info=True)
        logger.error("{}".format(ex))
        return EXIT_USAGE
    duration = datetime.now() - start_time
    logger.info("Completed {}, total_duration: {}".format(
        args.command, duration))
    return status


if __name__ == "__main__":
    sys.exit(main())
