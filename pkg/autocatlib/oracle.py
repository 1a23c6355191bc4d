#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: oracle.py
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
Exact stationary laws of finite chains.

The open network is truncated to the states with n <= n_max and the finite Moran chain is taken as is. Both
generators are assembled as sparse matrices and their stationary law is obtained either by a direct sparse
solve of the global balance equations, with one equation replaced by the normalization, or by power
iteration on the uniformized jump matrix.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import logging
from typing import Callable, List, Sequence, Tuple, Union

import numpy as np
from scipy.sparse import coo_matrix, csr_matrix
from scipy.sparse.csgraph import connected_components
from scipy.sparse.linalg import spsolve
from scipy.stats import poisson

from autocatlib.autocatlibexceptions import (CapacityExceeded,
                                             IrreducibilityError,
                                             NotConvergedError)
from autocatlib.configuration import (DEFAULT_TAIL_TOLERANCE,
                                      MAX_ORACLE_STATES,
                                      POWER_MAX_ITERATIONS,
                                      POWER_TOLERANCE,
                                      RESIDUAL_TOLERANCE,
                                      UNIFORMIZATION_SLACK)
from autocatlib.entities import (Distribution,
                                 MoranParams,
                                 ReactionParams,
                                 ReflectPolicy,
                                 ScaledParams,
                                 Solver,
                                 State,
                                 TruncationSpec,
                                 composition_count,
                                 compositions,
                                 enumerate_states,
                                 shifted)
from autocatlib.model import as_reaction_params, enabled_transitions, moran_transitions
from autocatlib.stationary import poisson_upper_cutoff

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
LOGGER_BASENAME = 'oracle'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

TransitionFunction = Callable[[State], List[Tuple[State, float]]]


def truncation_for(params: Union[ReactionParams, ScaledParams], tail_tol: float = DEFAULT_TAIL_TOLERANCE,
                   reflect_policy: ReflectPolicy = ReflectPolicy.DROP_OUTFLOWING,
                   solver: Solver = Solver.SPARSE_LU) -> TruncationSpec:
    """Truncation whose last hyperplane leaves less than tail_tol of the Poisson mass above it."""
    params = as_reaction_params(params)
    return TruncationSpec(n_max=max(1, poisson_upper_cutoff(params.poisson_mean, tail_tol)),
                          reflect_policy=reflect_policy,
                          solver=solver)


def _truncated_transitions(params: ReactionParams, spec: TruncationSpec) -> TransitionFunction:
    def transitions(a: State) -> List[Tuple[State, float]]:
        kept = []
        n = sum(a)
        for target, rate in enabled_transitions(params, a):
            if sum(target) <= spec.n_max:
                kept.append((target, rate))
            elif spec.reflect_policy is ReflectPolicy.REFLECT:
                # an arriving molecule of species i replaces a uniformly chosen molecule
                arriving = next(species for species in range(len(a)) if target[species] > a[species])
                for replaced in range(len(a)):
                    if replaced != arriving and a[replaced]:
                        kept.append((shifted(shifted(a, arriving, 1), replaced, -1),
                                     rate * a[replaced] / n))
        return kept
    return transitions


def _generator(states: Sequence[State], transitions: TransitionFunction) -> Tuple[csr_matrix, float]:
    index = {state: position for position, state in enumerate(states)}
    rows, columns, rates = [], [], []
    for position, state in enumerate(states):
        for target, rate in transitions(state):
            rows.append(position)
            columns.append(index[target])
            rates.append(rate)
    size = len(states)
    off_diagonal = coo_matrix((rates, (rows, columns)), shape=(size, size)).tocsr()
    exit_rates = np.asarray(off_diagonal.sum(axis=1)).ravel()
    components, _ = connected_components(off_diagonal, directed=True, connection='strong')
    if components != 1:
        raise IrreducibilityError(f'Truncated chain on {size} states splits into {components} '
                                  f'strongly connected components')
    generator = off_diagonal - csr_matrix((exit_rates, (np.arange(size), np.arange(size))), shape=(size, size))
    return generator.tocsr(), float(exit_rates.max())


def _solve_sparse_lu(generator: csr_matrix) -> np.ndarray:
    system = generator.transpose().tolil()
    system[0, :] = np.ones(generator.shape[0])
    right_hand_side = np.zeros(generator.shape[0])
    right_hand_side[0] = 1.0
    return spsolve(system.tocsc(), right_hand_side)


def _solve_power(generator: csr_matrix, max_rate: float) -> np.ndarray:
    uniformization_rate = UNIFORMIZATION_SLACK * max_rate
    transposed = generator.transpose().tocsr()
    probabilities = np.full(generator.shape[0], 1.0 / generator.shape[0])
    for iteration in range(POWER_MAX_ITERATIONS):
        updated = probabilities + transposed @ probabilities / uniformization_rate
        change = np.max(np.abs(updated - probabilities))
        probabilities = updated
        if change < POWER_TOLERANCE:
            LOGGER.debug(f'Power iteration converged after {iteration + 1} steps')
            return probabilities
    raise NotConvergedError(f'Power iteration did not reach {POWER_TOLERANCE} in {POWER_MAX_ITERATIONS} steps')


def _stationary(states: List[State], transitions: TransitionFunction, solver: Solver) -> Tuple[np.ndarray, float]:
    generator, max_rate = _generator(states, transitions)
    if solver is Solver.POWER:
        probabilities = _solve_power(generator, max_rate)
    else:
        probabilities = _solve_sparse_lu(generator)
    probabilities = np.clip(probabilities, 0.0, None)
    probabilities /= probabilities.sum()
    residual = float(np.max(np.abs(generator.transpose() @ probabilities)))
    LOGGER.debug(f'Solved {len(states)} states with {solver.value}, residual {residual:.3g}, '
                 f'largest exit rate {max_rate:.3g}')
    if residual > RESIDUAL_TOLERANCE * max_rate:
        raise NotConvergedError(f'Stationarity residual {residual:.3g} exceeds '
                                f'{RESIDUAL_TOLERANCE} times the largest exit rate {max_rate:.3g}')
    return probabilities, residual


def _as_distribution(states: List[State], probabilities: np.ndarray, tail_mass: float, metadata) -> Distribution:
    with np.errstate(divide='ignore'):
        log_prob = np.log(probabilities)
    return Distribution(np.array(states, dtype=np.int64), log_prob, tail_mass, metadata)


def stationary_truncated(params: Union[ReactionParams, ScaledParams], spec: TruncationSpec,
                         cap: int = MAX_ORACLE_STATES) -> Distribution:
    """Exact stationary law of the network restricted to the states with n <= spec.n_max.

    Args:
        params: Reaction rates, raw or scaled.
        spec: Last hyperplane, boundary policy and solver.
        cap: Largest number of states to solve for.

    Returns:
        Distribution: The law, with the Poisson mass above n_max recorded as tail mass.

    Raises:
        CapacityExceeded: If the truncation holds more states than the cap.
        IrreducibilityError: If the truncated chain is not strongly connected.
        NotConvergedError: If the stationarity residual is too large.

    """
    params = as_reaction_params(params)
    count = sum(composition_count(n, params.d) for n in range(spec.n_max + 1))
    if count > cap:
        raise CapacityExceeded(f'Truncation at n_max={spec.n_max} holds {count} states, above the cap of {cap}')
    states = list(enumerate_states(spec.n_max, params.d))
    probabilities, residual = _stationary(states, _truncated_transitions(params, spec), spec.solver)
    metadata = {'n_max': spec.n_max,
                'reflect_policy': spec.reflect_policy.value,
                'solver': spec.solver.value,
                'residual': residual}
    return _as_distribution(states, probabilities, float(poisson.sf(spec.n_max, params.poisson_mean)), metadata)


def moran_stationary_exact(mp: MoranParams, solver: Solver = Solver.SPARSE_LU,
                           cap: int = MAX_ORACLE_STATES) -> Distribution:
    """Exact stationary law of the finite Moran chain on the compositions of mp.n."""
    count = composition_count(mp.n, mp.d)
    if count > cap:
        raise CapacityExceeded(f'Moran chain with n={mp.n}, d={mp.d} has {count} states, above the cap of {cap}')
    states = list(compositions(mp.n, mp.d))
    probabilities, residual = _stationary(states, lambda state: moran_transitions(mp, state), Solver(solver))
    return _as_distribution(states, probabilities, 0.0, {'n': mp.n, 'residual': residual})
