#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: params.py
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
Reaction parameter entities.

Three parameterizations are supported: the raw rates of the open network, the volume scaled rates where
inflow and outflow are both D and the catalytic rates are kappa' / V, and the parameters of the Moran
process that describes the conditional law on a hyperplane of constant population.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import math
from dataclasses import dataclass, field
from typing import Sequence, Tuple

from autocatlib.autocatlibexceptions import InvalidParameters
from .base import Entity

__author__ = 'autocatlib developers <autocatlib@users.noreply.github.com>'
__docformat__ = 'google'
__date__ = '19-10-2026'
__copyright__ = 'Copyright 2026, autocatlib developers'
__credits__ = ["autocatlib developers"]
__license__ = 'Apache Software License 2.0'
__maintainer__ = 'autocatlib developers'
__email__ = '<autocatlib@users.noreply.github.com>'
__status__ = 'Development'  # "Prototype", "Development", "Production".


def _positive_tuple(name: str, values: Sequence[float]) -> Tuple[float, ...]:
    try:
        result = tuple(float(value) for value in values)
    except (TypeError, ValueError):
        raise InvalidParameters(f'{name} must be a sequence of numbers, got {values!r}') from None
    if not all(math.isfinite(value) and value > 0 for value in result):
        raise InvalidParameters(f'{name} must contain finite positive values, got {result}')
    return result


def _positive_float(name: str, value: float) -> float:
    try:
        result = float(value)
    except (TypeError, ValueError):
        raise InvalidParameters(f'{name} must be a number, got {value!r}') from None
    if not (math.isfinite(result) and result > 0):
        raise InvalidParameters(f'{name} must be finite and positive, got {result}')
    return result


@dataclass(frozen=True)
class ReactionParams(Entity):
    """Rates of the open network: catalytic kappa, inflow lambda and per capita outflow delta."""

    kappa: Tuple[float, ...]
    lambda_: Tuple[float, ...]
    delta: float
    _aliases = {'lambda': 'lambda_'}

    def __post_init__(self):
        """Validates and freezes the rate vectors."""
        kappa = _positive_tuple('kappa', self.kappa)
        lambda_ = _positive_tuple('lambda', self.lambda_)
        if len(kappa) < 2:
            raise InvalidParameters(f'At least two species are needed, got {len(kappa)}')
        if len(kappa) != len(lambda_):
            raise InvalidParameters(f'kappa has {len(kappa)} entries but lambda has {len(lambda_)}')
        object.__setattr__(self, 'kappa', kappa)
        object.__setattr__(self, 'lambda_', lambda_)
        object.__setattr__(self, 'delta', _positive_float('delta', self.delta))

    @property
    def d(self) -> int:
        """Number of species."""
        return len(self.kappa)

    @property
    def total_inflow(self) -> float:
        """Sum of the inflow rates."""
        return math.fsum(self.lambda_)

    @property
    def poisson_mean(self) -> float:
        """Mean of the stationary law of the total population."""
        return self.total_inflow / self.delta

    @property
    def alpha(self) -> Tuple[float, ...]:
        """Moran parameters alpha_i = delta lambda_i / (kappa_i sum(lambda))."""
        total = self.total_inflow
        return tuple(self.delta * rate / (kappa * total) for kappa, rate in zip(self.kappa, self.lambda_))

    @property
    def is_symmetric(self) -> bool:
        """True when all catalytic rates are equal."""
        return all(kappa == self.kappa[0] for kappa in self.kappa)

    def permuted(self, order: Sequence[int]) -> 'ReactionParams':
        """Returns the parameters with species relabeled so that new species i is old species order[i]."""
        return ReactionParams(kappa=tuple(self.kappa[index] for index in order),
                              lambda_=tuple(self.lambda_[index] for index in order),
                              delta=self.delta)

    def to_data(self):
        """Renders the parameters as they appear in a configuration file."""
        return {'kind': 'raw', 'd': self.d, **super().to_data()}


@dataclass(frozen=True)
class ScaledParams(Entity):
    """Volume scaled parameterization with lambda = delta = D and kappa = kappa' / V."""

    volume: float
    flow: float
    kappa_prime: Tuple[float, ...]
    _aliases = {'V': 'volume', 'D': 'flow'}

    def __post_init__(self):
        """Validates and freezes the parameters."""
        kappa_prime = _positive_tuple('kappa_prime', self.kappa_prime)
        if len(kappa_prime) < 2:
            raise InvalidParameters(f'At least two species are needed, got {len(kappa_prime)}')
        object.__setattr__(self, 'kappa_prime', kappa_prime)
        object.__setattr__(self, 'volume', _positive_float('V', self.volume))
        object.__setattr__(self, 'flow', _positive_float('D', self.flow))

    @property
    def d(self) -> int:
        """Number of species."""
        return len(self.kappa_prime)

    @property
    def dv(self) -> float:
        """The product D V that drives the regime of the stationary law."""
        return self.flow * self.volume

    @property
    def alpha_prime(self) -> Tuple[float, ...]:
        """Volume free Moran parameters alpha'_i = D / (d kappa'_i), the network has alpha_i = V alpha'_i."""
        return tuple(self.flow / (self.d * kappa) for kappa in self.kappa_prime)

    def to_unscaled(self) -> ReactionParams:
        """Unscaled rates in molecule counts: kappa = kappa' / V, lambda = D V and delta = D."""
        return ReactionParams(kappa=tuple(kappa / self.volume for kappa in self.kappa_prime),
                              lambda_=(self.flow * self.volume,) * self.d,
                              delta=self.flow)

    def to_data(self):
        """Renders the parameters as they appear in a configuration file."""
        return {'kind': 'scaled', 'd': self.d, **super().to_data()}


@dataclass(frozen=True)
class MoranParams(Entity):
    """Moran process on the compositions of n: selection kappa, mutation rate v and mutation law p."""

    n: int
    kappa: Tuple[float, ...]
    v: float
    p: Tuple[float, ...] = field(default=())

    def __post_init__(self):
        """Validates and freezes the parameters."""
        kappa = _positive_tuple('kappa', self.kappa)
        if len(kappa) < 2:
            raise InvalidParameters(f'At least two types are needed, got {len(kappa)}')
        if isinstance(self.n, bool) or not float(self.n).is_integer() or self.n < 1:
            raise InvalidParameters(f'n must be a positive integer, got {self.n}')
        try:
            p = tuple(float(value) for value in self.p) if self.p else (1.0 / len(kappa),) * len(kappa)
        except (TypeError, ValueError):
            raise InvalidParameters(f'p must be a sequence of numbers, got {self.p!r}') from None
        if len(p) != len(kappa):
            raise InvalidParameters(f'kappa has {len(kappa)} entries but p has {len(p)}')
        if any(not math.isfinite(value) or value < 0 for value in p) or abs(math.fsum(p) - 1.0) > 1e-12:
            raise InvalidParameters(f'p must be a probability vector, got {p}')
        object.__setattr__(self, 'n', int(self.n))
        object.__setattr__(self, 'kappa', kappa)
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'v', _positive_float('v', self.v))

    @property
    def d(self) -> int:
        """Number of types."""
        return len(self.kappa)

    @property
    def alpha(self) -> Tuple[float, ...]:
        """Dirichlet parameters alpha_i = n v p_i / kappa_i of the stationary law."""
        return tuple(self.n * self.v * share / kappa for share, kappa in zip(self.p, self.kappa))

    def to_data(self):
        """Renders the parameters as they appear in a configuration file."""
        return {'kind': 'moran', 'd': self.d, **super().to_data()}
