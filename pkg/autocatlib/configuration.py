#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: configuration.py
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
configuration module.

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

# Poisson tail mass left outside an enumerated window of hyperplanes.
DEFAULT_TAIL_TOLERANCE = 1e-12

# Caps on explicit enumerations.
MAX_COMPOSITIONS = 2 * 10 ** 6
MAX_DISTRIBUTION_STATES = 2 * 10 ** 6
MAX_ORACLE_STATES = 10 ** 5

# Largest accepted gap, in natural log units, between the biggest term of an alternating series and its sum.
CANCELLATION_LOG_LIMIT = 16.0

# Event budget of a simulation that sets neither t_max nor max_events.
DEFAULT_MAX_EVENTS = 10 ** 7

# Fraction of t_max discarded as burn-in when a run does not set one.
BURN_IN_FRACTION = 0.01

# Number of uniforms drawn per refill of the simulator buffer.
SSA_RANDOM_BLOCK = 4096

# Power iteration settings of the truncated master equation oracle.
POWER_TOLERANCE = 1e-14
POWER_MAX_ITERATIONS = 10 ** 6
UNIFORMIZATION_SLACK = 1.05

# Accepted stationarity residual relative to the largest exit rate.
RESIDUAL_TOLERANCE = 1e-12

# Slack used when comparing log probabilities of neighbouring states.
MODE_TOLERANCE = 1e-12

# Relative slack under which DV and d are reported as equal.
REGIME_RELATIVE_TOLERANCE = 1e-12

# Newton steps used to polish a root of the fixed point quadratic.
NEWTON_POLISH_STEPS = 3

# Environment variable enabling the long stochastic simulation checks.
LONG_TESTS_VARIABLE = 'AUTOCATLIB_LONG_TESTS'

DEFAULT_LOG_LEVEL = 'info'

CSV_FLOAT_FORMAT = '{:.17g}'
