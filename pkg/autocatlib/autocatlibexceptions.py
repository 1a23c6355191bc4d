#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: autocatlibexceptions.py
#
# Copyright 2026 autocatlib developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#

"""
Custom exception code for autocatlib.

Every error raised by the library derives from :class:`AutocatlibError`. The command line front end maps
:class:`InvalidParameters`, :class:`InvalidState` and :class:`ConfigurationError` to exit code 2 and every other
library error to exit code 3.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

__author__ = 'autocatlib developers <autocatlib@users.noreply.github.com>'
__docformat__ = 'google'
__date__ = '19-10-2026'
__copyright__ = 'Copyright 2026, autocatlib developers'
__credits__ = ["autocatlib developers"]
__license__ = 'Apache Software License 2.0'
__maintainer__ = 'autocatlib developers'
__email__ = '<autocatlib@users.noreply.github.com>'
__status__ = 'Development'  # "Prototype", "Development", "Production".


class AutocatlibError(Exception):
    """Base exception for autocatlib."""


class DomainError(AutocatlibError, ValueError):
    """Argument outside the domain of a special function."""


class InvalidParameters(AutocatlibError, ValueError):
    """Invalid reaction parameters exception."""


class InvalidState(AutocatlibError, ValueError):
    """Invalid lattice state exception."""


class ValidityConditionViolation(AutocatlibError):
    """Closed form called outside the conditions under which it holds."""


class CapacityExceeded(AutocatlibError):
    """Requested enumeration is larger than the configured cap."""


class IrreducibilityError(AutocatlibError):
    """Truncated chain is not irreducible."""


class NotConvergedError(AutocatlibError):
    """Iterative solver did not reach the requested tolerance."""


class EmptyMeasure(AutocatlibError):
    """Occupation measure without recorded time."""


class ConfigurationError(AutocatlibError):
    """Malformed configuration or command line input."""
