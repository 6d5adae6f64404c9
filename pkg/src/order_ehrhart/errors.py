# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
"""Exceptions raised by order_ehrhart."""


class EhrhartError(Exception):
    pass


class BoundError(EhrhartError, ValueError):
    """A configured size bound was exceeded."""

    def __init__(self, name, bound, value, hint=None):
        self.name = name
        self.bound = bound
        self.value = value
        msg = "{} bound exceeded: {} > {}".format(name, value, bound)
        if hint:
            msg = "{} ({})".format(msg, hint)
        super(BoundError, self).__init__(msg)


class PosetError(EhrhartError, ValueError):
    pass


class InterpolationError(EhrhartError, ValueError):
    pass


class HStarError(EhrhartError, ArithmeticError):
    pass


class DomainError(EhrhartError, ValueError):
    pass


class InvariantError(EhrhartError, AssertionError):
    """An internal mathematical invariant failed; never recovered from."""
