#!/usr/bin/env python
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

Import all parts from autocatlib.entities here

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

from .base import Entity
from .distribution import Distribution
from .params import (MoranParams,
                     ReactionParams,
                     ScaledParams)
from .results import (BalanceTerms,
                      FixedPoint,
                      OccupationMeasure,
                      ReflectPolicy,
                      Regime,
                      RegimeLabel,
                      RunManifest,
                      SimConfig,
                      Solver,
                      TruncationSpec)
from .state import (State,
                    as_state,
                    composition_array,
                    composition_count,
                    compositions,
                    enumerate_states,
                    shifted)

# This is to 'use' the module(s), so lint doesn't complain
assert Entity
assert Distribution
assert MoranParams
assert ReactionParams
assert ScaledParams
assert BalanceTerms
assert FixedPoint
assert OccupationMeasure
assert ReflectPolicy
assert Regime
assert RegimeLabel
assert RunManifest
assert SimConfig
assert Solver
assert TruncationSpec
assert State
assert as_state
assert composition_array
assert composition_count
assert compositions
assert enumerate_states
assert shifted
