#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: results.py
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
Result and run configuration entities.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import csv
import io
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from autocatlib.autocatlibexceptions import ConfigurationError, EmptyMeasure
from autocatlib.configuration import CSV_FLOAT_FORMAT
from .base import Entity
from .state import State, as_state

__author__ = 'autocatlib developers <autocatlib@users.noreply.github.com>'
__docformat__ = 'google'
__date__ = '19-10-2026'
__copyright__ = 'Copyright 2026, autocatlib developers'
__credits__ = ["autocatlib developers"]
__license__ = 'Apache Software License 2.0'
__maintainer__ = 'autocatlib developers'
__email__ = '<autocatlib@users.noreply.github.com>'
__status__ = 'Development'  # "Prototype", "Development", "Production".


class Regime(Enum):
    """Shape of the approximate stationary law."""

    BOUNDARY_BIMODAL = 'BOUNDARY_BIMODAL'
    FLAT = 'FLAT'
    INTERIOR_UNIMODAL = 'INTERIOR_UNIMODAL'


class ReflectPolicy(Enum):
    """What happens to transitions that would leave a truncated state set."""

    DROP_OUTFLOWING = 'DROP_OUTFLOWING'
    REFLECT = 'REFLECT'


class Solver(Enum):
    """Linear algebra used by the truncated master equation oracle."""

    SPARSE_LU = 'SPARSE_LU'
    POWER = 'POWER'


@dataclass(frozen=True)
class BalanceTerms(Entity):
    """Balance terms at a state, each divided by the approximate conditional probability of the state."""

    r_n: float
    l_nm1: float
    l_n: float
    l_np1: float
    bstar: float

    @property
    def scale(self) -> float:
        """Largest term magnitude, the conditioning scale of the sum."""
        return max(abs(self.r_n), abs(self.l_nm1), abs(self.l_n), abs(self.l_np1))


@dataclass(frozen=True)
class FixedPoint(Entity):
    """Equilibrium of the two species mean field equations."""

    a_star: Tuple[float, float]
    stable: bool
    residual: float = 0.0
    eigenvalues: Tuple[complex, ...] = ()

    def to_data(self):
        """Renders the fixed point as the json document of the fixed-point command."""
        return {'a1_star': self.a_star[0],
                'a2_star': self.a_star[1],
                'stable': self.stable,
                'residual': self.residual}


@dataclass(frozen=True)
class RegimeLabel(Entity):
    """Regime of a scaled parameter set together with the numbers it was decided on."""

    value: Regime
    dv: float
    d: int
    near_equal: bool = False


@dataclass(frozen=True)
class SimConfig(Entity):
    """Settings of one stochastic simulation run.

    Exactly one of ``t_max`` and ``max_events`` governs termination. ``burn_in`` is simulated time discarded
    before occupation is recorded; when it is omitted a time governed run discards a fixed fraction of
    ``t_max`` and an event governed run discards nothing.
    """

    initial: State
    seed: int = 0
    t_max: Optional[float] = None
    max_events: Optional[int] = None
    burn_in: Optional[float] = None

    def __post_init__(self):
        """Validates the termination settings."""
        object.__setattr__(self, 'initial', as_state(self.initial))
        if (self.t_max is None) == (self.max_events is None):
            raise ConfigurationError('Exactly one of t_max and max_events must be set')
        if self.t_max is not None and not (math.isfinite(self.t_max) and self.t_max > 0):
            raise ConfigurationError(f't_max must be finite and positive, got {self.t_max}')
        if self.max_events is not None and (int(self.max_events) != self.max_events or self.max_events < 1):
            raise ConfigurationError(f'max_events must be a positive integer, got {self.max_events}')
        if self.burn_in is not None and not (math.isfinite(self.burn_in) and self.burn_in >= 0):
            raise ConfigurationError(f'burn_in must be finite and non negative, got {self.burn_in}')
        if self.t_max is not None and self.burn_in is not None and self.burn_in >= self.t_max:
            raise ConfigurationError(f'burn_in {self.burn_in} must be below t_max {self.t_max}')
        if not 0 <= int(self.seed) < 2 ** 64:
            raise ConfigurationError(f'seed must fit in 64 bits, got {self.seed}')
        object.__setattr__(self, 'seed', int(self.seed))

    def with_seed(self, seed: int) -> 'SimConfig':
        """Returns the same settings with another seed."""
        return SimConfig(initial=self.initial, seed=seed, t_max=self.t_max,
                         max_events=self.max_events, burn_in=self.burn_in)


@dataclass(frozen=True, eq=False)
class OccupationMeasure:
    """Time spent in every visited state after burn-in."""

    weights: Dict[State, float]
    total_time: float
    events: int
    seeds: Tuple[int, ...] = ()

    def __post_init__(self):
        """Rejects measures without recorded time."""
        if not self.total_time > 0:
            raise EmptyMeasure(f'Occupation measure needs positive total time, got {self.total_time}')

    def __eq__(self, other):
        if not isinstance(other, OccupationMeasure):
            return NotImplemented
        return (self.weights == other.weights and self.total_time == other.total_time
                and self.events == other.events and self.seeds == other.seeds)

    def to_csv(self) -> str:
        """Renders the measure as csv text with header a1..ad,n,time_fraction sorted by (n, counts)."""
        states = sorted(self.weights, key=lambda state: (sum(state), state))
        d = len(states[0])
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow([f'a{species + 1}' for species in range(d)] + ['n', 'time_fraction'])
        for state in states:
            writer.writerow(list(state) + [sum(state), CSV_FLOAT_FORMAT.format(self.weights[state] / self.total_time)])
        return buffer.getvalue()


@dataclass(frozen=True)
class TruncationSpec(Entity):
    """Finite state set n <= n_max of the oracle and how its boundary is treated."""

    n_max: int
    reflect_policy: ReflectPolicy = ReflectPolicy.DROP_OUTFLOWING
    solver: Solver = Solver.SPARSE_LU

    def __post_init__(self):
        """Validates n_max and coerces enum names."""
        if isinstance(self.n_max, bool) or int(self.n_max) != self.n_max or self.n_max < 1:
            raise ConfigurationError(f'n_max must be a positive integer, got {self.n_max}')
        try:
            object.__setattr__(self, 'reflect_policy', ReflectPolicy(self.reflect_policy))
            object.__setattr__(self, 'solver', Solver(self.solver))
        except ValueError as msg:
            raise ConfigurationError(str(msg)) from None
        object.__setattr__(self, 'n_max', int(self.n_max))


@dataclass(frozen=True)
class RunManifest(Entity):
    """Record of a command line run, written after every output file."""

    command: str
    params_echo: Dict
    tool_version: str
    outputs: List[str] = field(default_factory=list)
    seed: Optional[int] = None
    notes: Dict = field(default_factory=dict)
