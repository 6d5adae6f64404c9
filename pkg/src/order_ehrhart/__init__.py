# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.
"""Exact Ehrhart polynomials of order polytopes."""

from .errors import (BoundError, DomainError, EhrhartError, HStarError,
                     InterpolationError, InvariantError, PosetError)
from .exactnum import Polynomial, Rational
from .poset import Poset

__version__ = "0.1.0"

__all__ = [
    "BoundError", "DomainError", "EhrhartError", "HStarError",
    "InterpolationError", "InvariantError", "PosetError",
    "Polynomial", "Poset", "Rational",
]
