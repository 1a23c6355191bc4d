# -*- coding: utf-8 -*-
# File: __init__.py
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
autocatlib package.

Import all parts from autocatlib here

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html
"""

__author__ = 'autocatlib developers <autocatlib@users.noreply.github.com>'
__docformat__ = 'google'
__date__ = '19-10-2026'
__copyright__ = 'Copyright 2026, autocatlib developers'
__license__ = 'Apache Software License 2.0'
__maintainer__ = 'autocatlib developers'
__email__ = '<autocatlib@users.noreply.github.com>'
__status__ = 'Development'  # "Prototype", "Development", "Production".

from ._version import __version__
from .autocatlib import AutocatalyticNetwork
from .autocatlibexceptions import (AutocatlibError,
                                   CapacityExceeded,
                                   ConfigurationError,
                                   DomainError,
                                   EmptyMeasure,
                                   InvalidParameters,
                                   InvalidState,
                                   IrreducibilityError,
                                   NotConvergedError,
                                   ValidityConditionViolation)
from .entities import (BalanceTerms,
                       Distribution,
                       FixedPoint,
                       MoranParams,
                       OccupationMeasure,
                       ReactionParams,
                       ReflectPolicy,
                       Regime,
                       RegimeLabel,
                       RunManifest,
                       ScaledParams,
                       SimConfig,
                       Solver,
                       TruncationSpec)
# This is to 'use' the module(s), so lint doesn't complain
assert __version__
assert AutocatalyticNetwork
assert AutocatlibError
assert CapacityExceeded
assert ConfigurationError
assert DomainError
assert EmptyMeasure
assert InvalidParameters
assert InvalidState
assert IrreducibilityError
assert NotConvergedError
assert ValidityConditionViolation
assert BalanceTerms
assert Distribution
assert FixedPoint
assert MoranParams
assert OccupationMeasure
assert ReactionParams
assert ReflectPolicy
assert Regime
assert RegimeLabel
assert RunManifest
assert ScaledParams
assert SimConfig
assert Solver
assert TruncationSpec
