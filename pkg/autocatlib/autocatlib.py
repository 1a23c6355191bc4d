#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: autocatlib.py
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
Main code for autocatlib.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import logging
from typing import List, Optional, Tuple, Union

from autocatlib.autocatlibexceptions import InvalidParameters, ValidityConditionViolation
from autocatlib.balance import GridRow, balance_grid, hyp_ratios
from autocatlib.configuration import DEFAULT_TAIL_TOLERANCE
from autocatlib.entities import (Distribution,
                                 FixedPoint,
                                 OccupationMeasure,
                                 ReactionParams,
                                 ReflectPolicy,
                                 RegimeLabel,
                                 ScaledParams,
                                 SimConfig,
                                 Solver,
                                 TruncationSpec)
from autocatlib.model import as_reaction_params, load_params_file
from autocatlib.ode import fixed_point
from autocatlib.oracle import stationary_truncated, truncation_for
from autocatlib.ssa import merge_occupations, run_replicas
from autocatlib.stationary import (build_distribution,
                                   lattice_argmax,
                                   regime_classify,
                                   relabeling,
                                   symmetric_distribution)

__author__ = 'autocatlib developers <autocatlib@users.noreply.github.com>'
__docformat__ = 'google'
__date__ = '19-10-2026'
__copyright__ = 'Copyright 2026, autocatlib developers'
__credits__ = ["autocatlib developers"]
__license__ = 'Apache Software License 2.0'
__maintainer__ = 'autocatlib developers'
__email__ = '<autocatlib@users.noreply.github.com>'
__status__ = 'Development'  # "Prototype", "Development", "Production".


# This is the main prefix used for logging
LOGGER_BASENAME = 'autocatlib'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())


class AutocatalyticNetwork:
    """Open autocatalytic network with its stationary laws, balance error, simulation and mean field."""

    def __init__(self, params: Union[ReactionParams, ScaledParams]):
        self._logger = logging.getLogger(f'{LOGGER_BASENAME}.{self.__class__.__name__}')
        if not isinstance(params, (ReactionParams, ScaledParams)):
            raise InvalidParameters(f'Expected reaction or scaled parameters, got {type(params).__name__}')
        self.params = params
        self.rates = as_reaction_params(params)
        self._logger.debug(f'Initializing network with d={self.rates.d}, kappa={self.rates.kappa}, '
                           f'lambda={self.rates.lambda_}, delta={self.rates.delta}')
        if self.relabeled:
            self._logger.warning('kappa_1 > kappa_2, species are swapped internally for the closed forms '
                                 'and reported in the original labels')

    @classmethod
    def from_file(cls, path: str) -> 'AutocatalyticNetwork':
        """Builds a network from a json parameter file."""
        return cls(load_params_file(path))

    @property
    def relabeled(self) -> bool:
        """Whether the closed forms swap the two species internally."""
        return relabeling(self.rates)

    @property
    def scaled(self) -> Optional[ScaledParams]:
        """The volume scaled parameters when the network was built from them."""
        return self.params if isinstance(self.params, ScaledParams) else None

    def stationary(self, tail_tol: float = DEFAULT_TAIL_TOLERANCE, n_max: Optional[int] = None,
                   symmetric: bool = False, two_sided: bool = False) -> Distribution:
        """Materializes the approximate stationary law, or the exact law of a symmetric network.

        Args:
            tail_tol: Poisson mass allowed outside the enumerated hyperplanes.
            n_max: Explicit last hyperplane.
            symmetric: Whether to require and use the exact symmetric law.
            two_sided: Whether to also drop the low hyperplanes.

        Returns:
            Distribution: The law.

        """
        if symmetric:
            return symmetric_distribution(self.rates, tail_tol=tail_tol, n_max=n_max)
        return build_distribution(self.rates, tail_tol=tail_tol, two_sided=two_sided, n_max=n_max)

    def exact(self, n_max: Optional[int] = None, tail_tol: float = DEFAULT_TAIL_TOLERANCE,
              reflect_policy: ReflectPolicy = ReflectPolicy.DROP_OUTFLOWING,
              solver: Solver = Solver.SPARSE_LU) -> Distribution:
        """Solves the truncated master equation."""
        if n_max is None:
            spec = truncation_for(self.rates, tail_tol, reflect_policy, solver)
        else:
            spec = TruncationSpec(n_max=n_max, reflect_policy=reflect_policy, solver=solver)
        self._logger.debug(f'Solving the truncated chain up to n={spec.n_max}')
        return stationary_truncated(self.rates, spec)

    def balance(self, n_max: int) -> List[GridRow]:
        """Balance error at every state with n <= n_max."""
        return balance_grid(self.rates, n_max)

    def ratios(self, n_max: int) -> List[Tuple[int, float, float]]:
        """Series ratios of the hyperplanes 0..n_max."""
        return [(n,) + hyp_ratios(self.rates, n) for n in range(n_max + 1)]

    def fixed_point(self) -> FixedPoint:
        """Equilibrium of the mean field equations."""
        return fixed_point(self.rates)

    def regime(self) -> RegimeLabel:
        """Regime of the scaled parameters."""
        if self.scaled is None:
            raise ValidityConditionViolation('The regime is defined for volume scaled parameters only')
        return regime_classify(self.scaled)

    def lattice_mode(self, tail_tol: float = DEFAULT_TAIL_TOLERANCE):
        """Most probable state of the approximate law."""
        return lattice_argmax(self.rates, tail_tol)

    def simulate(self, cfg: SimConfig, replicas: int = 1, workers: Optional[int] = None) -> OccupationMeasure:
        """Runs replicas of the stochastic simulation and merges their occupation measures."""
        self._logger.debug(f'Simulating {replicas} replica(s) from seed {cfg.seed}')
        return merge_occupations(run_replicas(self.rates, cfg, replicas, workers))
