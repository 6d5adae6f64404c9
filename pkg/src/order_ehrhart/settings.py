# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
"""Settings loader.

Values are read from an INI file with konfig, flattened into dotted names
(``bounds.ideal_lattice``) and then overridden from the environment using
``ORDER_EHRHART_<SECTION>_<KEY>`` (``ORDER_EHRHART_SCAN_SHARDS=4``).
"""

import logging
import os

from konfig import Config, SettingsDict

logger = logging.getLogger(__name__)

ENV_PREFIX = "ORDER_EHRHART_"
CONFIG_ENV = ENV_PREFIX + "CONFIG"
DEFAULT_CONFIG_FILE = "order_ehrhart.ini"

DEFAULTS = {
    "bounds.ideal_lattice": 20,
    "bounds.linear_extensions": 12,
    "bounds.canonical_form": 9,
    "bounds.enumerate": 8,
    "bounds.eulerian": 12,
    "bounds.antichain_sums": 16,
    "bounds.block_sums": 16,
    "bounds.scan": 8,
    "scan.n_max": 6,
    "scan.shards": 1,
    "scan.warn_n": 8,
    "scan.max_block": 4,
    "logging.level": "INFO",
}

# Konfig adds these to every section.
KONFIG_KEYWORDS = ("extends", "overrides")


def load_into_settings(filename, settings):
    """Flatten the sections of ``filename`` into dotted names in ``settings``.
    """
    filename = os.path.expandvars(os.path.expanduser(filename))
    filename = os.path.abspath(os.path.normpath(filename))
    config = Config(filename)
    for section in config.sections():
        setting_prefix = section.replace(":", ".")
        for name, value in config.get_map(section).items():
            if name not in KONFIG_KEYWORDS:
                settings[setting_prefix + "." + name] = value
    return config


def _coerce(default, value):
    if isinstance(default, bool):
        return str(value).lower() in ("1", "true", "yes", "on")
    if isinstance(default, int):
        return int(value)
    return value


def apply_environ(settings, environ=None):
    environ = os.environ if environ is None else environ
    for key in list(settings.keys()):
        env_name = ENV_PREFIX + key.replace(".", "_").upper()
        if env_name in environ:
            settings[key] = environ[env_name]
    return settings


def load_settings(filename=None, environ=None):
    """Build the effective settings.

    Order of precedence: environment, then the config file, then DEFAULTS.
    A missing default config file is fine; a missing explicit one is not.
    """
    environ = os.environ if environ is None else environ
    settings = SettingsDict()
    explicit = filename or environ.get(CONFIG_ENV)
    if explicit:
        if not os.path.isfile(os.path.expanduser(explicit)):
            raise IOError("{} not found".format(explicit))
        load_into_settings(explicit, settings)
    elif os.path.isfile(DEFAULT_CONFIG_FILE):
        load_into_settings(DEFAULT_CONFIG_FILE, settings)
    settings.setdefaults(DEFAULTS)
    apply_environ(settings, environ)
    for key, default in DEFAULTS.items():
        settings[key] = _coerce(default, settings[key])
    logger.debug("Settings: {}".format(dict(settings)))
    return settings
