# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.

import logging
import sys

from statsd.defaults.env import statsd

LOG_FORMAT = ('{"datetime": "%(asctime)s", "level": "%(levelname)s", '
              '"logger": "%(name)s", "message": "%(message)s"}')
METRIC_PREFIX = "order_ehrhart"


def init_logging(level=logging.INFO, stream=None):
    """Configure the root logger for JSON-per-line output.

    Results go to stdout, so logs default to stderr.
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    logging.basicConfig(
        format=LOG_FORMAT,
        stream=stream or sys.stderr,
        level=level)


def timer(name):
    return statsd.timer("{}.{}".format(METRIC_PREFIX, name))


def gauge(name, value):
    statsd.gauge("{}.{}".format(METRIC_PREFIX, name), value)


def tick(count, stream=None):
    mark = None
    if not count % 100:
        mark = "."
    if not count % 1000:
        mark = "|"
    level = logging.getLogger().getEffectiveLevel()
    if mark and level > logging.DEBUG:
        print(mark, end='', flush=True, file=stream or sys.stderr)
