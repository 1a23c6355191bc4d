#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: model.py
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
The open autocatalytic network as a continuous time Markov chain.

Species i catalyzes its own production from species j at rate kappa_i a_i a_j, enters at rate lambda_i
and leaves at rate delta a_i. The total count is a birth and death chain with constant birth rate
sum(lambda) and death rate n delta.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import json
import logging
import math
from typing import Callable, Dict, List, Mapping, Tuple, Union

from autocatlib.autocatlibexceptions import ConfigurationError, InvalidState
from autocatlib.entities import (Distribution,
                                 MoranParams,
                                 ReactionParams,
                                 ScaledParams,
                                 State,
                                 as_state,
                                 shifted)

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
LOGGER_BASENAME = 'model'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

Transition = Tuple[State, float]
ProbabilitySource = Union[Distribution, Mapping[State, float], Callable[[State], float]]

PARAMETER_KINDS = {'raw': ReactionParams,
                   'scaled': ScaledParams,
                   'moran': MoranParams}


def load_params(data: Dict):
    """Builds parameters from a configuration mapping.

    Args:
        data: A mapping with a ``kind`` key of raw, scaled or moran and the matching fields.

    Returns:
        The parameter entity.

    Raises:
        ConfigurationError: If the kind is unknown or a declared d does not match the rate vectors.

    """
    if not isinstance(data, dict):
        raise ConfigurationError(f'Parameter configuration must be a json object, got {type(data).__name__}')
    kind = data.get('kind', 'raw')
    entity = PARAMETER_KINDS.get(kind)
    if entity is None:
        raise ConfigurationError(f'Unknown parameter kind "{kind}", expected one of {sorted(PARAMETER_KINDS)}')
    params = entity.from_data(data)
    if 'd' in data and data['d'] != params.d:
        raise ConfigurationError(f'Declared d={data["d"]} but the rate vectors describe {params.d} species')
    return params


def load_params_file(path: str):
    """Reads and builds parameters from a json file."""
    try:
        with open(path, encoding='utf8') as configuration_file:
            data = json.load(configuration_file)
    except (OSError, ValueError) as msg:
        raise ConfigurationError(f'Unable to read parameters from {path}: {msg}') from None
    return load_params(data)


def as_reaction_params(params: Union[ReactionParams, ScaledParams]) -> ReactionParams:
    """Returns raw rates, unscaling when needed."""
    if isinstance(params, ScaledParams):
        return params.to_unscaled()
    return params


def _checked(params: ReactionParams, a) -> State:
    return as_state(a, params.d)


def enabled_transitions(params: ReactionParams, a: State) -> List[Transition]:
    """Lists every transition out of a state that has a positive rate.

    Catalytic moves come first in (producer, consumed) order, then inflows, then outflows.

    Args:
        params: The reaction rates.
        a: The current state.

    Returns:
        list: Pairs of target state and rate.

    """
    d = len(a)
    transitions = []
    for producer in range(d):
        if not a[producer]:
            continue
        for consumed in range(d):
            if consumed == producer or not a[consumed]:
                continue
            target = shifted(shifted(a, producer, 1), consumed, -1)
            transitions.append((target, params.kappa[producer] * a[producer] * a[consumed]))
    for species in range(d):
        transitions.append((shifted(a, species, 1), params.lambda_[species]))
    for species in range(d):
        if a[species]:
            transitions.append((shifted(a, species, -1), params.delta * a[species]))
    return transitions


def exit_rate(params: ReactionParams, a: State) -> float:
    """Total rate of leaving a state."""
    return math.fsum(rate for _, rate in enabled_transitions(params, a))


def alpha_params(params: Union[ReactionParams, ScaledParams]) -> Tuple[float, ...]:
    """Moran parameters alpha_i = delta lambda_i / (kappa_i sum(lambda)) of the network."""
    return as_reaction_params(params).alpha


def lumped_rates(params: ReactionParams, a: State) -> Tuple[float, float]:
    """Rates from a state into the hyperplanes above and below it."""
    n = sum(a)
    up = math.fsum(rate for target, rate in enabled_transitions(params, a) if sum(target) == n + 1)
    down = math.fsum(rate for target, rate in enabled_transitions(params, a) if sum(target) == n - 1)
    return up, down


def moran_transitions(mp: MoranParams, a: State) -> List[Transition]:
    """Lists the moves of the Moran process with genic selection and parent independent mutation.

    An individual of type i is replaced by one of type j at rate a_i (kappa_j a_j / n + v p_j).

    Args:
        mp: The Moran parameters.
        a: A state of the hyperplane mp.n.

    Returns:
        list: Pairs of target state and rate, all in the same hyperplane.

    Raises:
        InvalidState: If the counts do not add up to mp.n.

    """
    a = as_state(a, mp.d)
    if sum(a) != mp.n:
        raise InvalidState(f'Moran states must add up to n={mp.n}, got {a}')
    transitions = []
    for source in range(mp.d):
        if not a[source]:
            continue
        for target_type in range(mp.d):
            if target_type == source:
                continue
            rate = a[source] * (mp.kappa[target_type] * a[target_type] / mp.n + mp.v * mp.p[target_type])
            if rate > 0:
                transitions.append((shifted(shifted(a, source, -1), target_type, 1), rate))
    return transitions


def _probability_lookup(p: ProbabilitySource) -> Callable[[State], float]:
    if isinstance(p, Distribution):
        return p.prob_of
    if isinstance(p, Mapping):
        return lambda state: p.get(state, 0.0)
    return p


def predecessors(params: ReactionParams, a: State) -> List[Transition]:
    """Lists the states that jump into a in one step together with the rate of that jump.

    Only predecessors with non negative counts are returned.
    """
    d = len(a)
    incoming = []
    for producer in range(d):
        if not a[producer]:
            continue
        for consumed in range(d):
            if consumed == producer:
                continue
            source = shifted(shifted(a, producer, -1), consumed, 1)
            rate = params.kappa[producer] * source[producer] * source[consumed]
            if rate > 0:
                incoming.append((source, rate))
    for species in range(d):
        if a[species]:
            incoming.append((shifted(a, species, -1), params.lambda_[species]))
    for species in range(d):
        incoming.append((shifted(a, species, 1), params.delta * (a[species] + 1)))
    return incoming


def adjoint_apply(params: ReactionParams, p: ProbabilitySource, a: State) -> float:
    """Evaluates the adjoint generator applied to p at a: inflow of probability minus outflow.

    Args:
        params: The reaction rates.
        p: A distribution, a mapping of states to probabilities or a callable; absent states count as zero.
        a: The state to evaluate at.

    Returns:
        float: The net probability flux into a.

    """
    a = _checked(params, a)
    lookup = _probability_lookup(p)
    inflow = [rate * lookup(source) for source, rate in predecessors(params, a)]
    return math.fsum(inflow) - exit_rate(params, a) * lookup(a)


def generator_apply(params: ReactionParams, f: Callable[[State], float], a: State) -> float:
    """Evaluates the generator applied to a function f at a: the expected rate of change of f."""
    a = _checked(params, a)
    value = f(a)
    return math.fsum(rate * (f(target) - value) for target, rate in enabled_transitions(params, a))
