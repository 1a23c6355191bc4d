#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: ssa.py
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
Stochastic simulation of the network and occupation time statistics.

Runs use the Gillespie direct method. The random stream of a run is a Philox counter based generator seeded
with the run seed, replica r of a batch uses seed + r, so every run is reproducible on any platform.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import logging
import math
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple, Union

import numpy as np
from scipy.stats import poisson

from autocatlib.autocatlibexceptions import ConfigurationError, EmptyMeasure
from autocatlib.configuration import BURN_IN_FRACTION, SSA_RANDOM_BLOCK
from autocatlib.entities import (Distribution,
                                 OccupationMeasure,
                                 ReactionParams,
                                 ScaledParams,
                                 SimConfig,
                                 State,
                                 as_state)
from autocatlib.model import as_reaction_params, enabled_transitions

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
LOGGER_BASENAME = 'ssa'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

Observer = Callable[[State, State, float], None]
Measure = Union[Distribution, OccupationMeasure, Mapping[State, float]]


def random_generator(seed: int) -> np.random.Generator:
    """The random stream of a run."""
    return np.random.Generator(np.random.Philox(seed))


def resolved_burn_in(cfg: SimConfig) -> float:
    """Burn-in of a run: the configured one, else a fraction of t_max, else nothing."""
    if cfg.burn_in is not None:
        return cfg.burn_in
    if cfg.t_max is not None:
        return BURN_IN_FRACTION * cfg.t_max
    return 0.0


def gillespie_run(params: Union[ReactionParams, ScaledParams], cfg: SimConfig,
                  observer: Optional[Observer] = None) -> OccupationMeasure:
    """Simulates the network and records the time spent in every state after burn-in.

    Every step draws an exponential holding time at the total exit rate and picks the next state with
    probability proportional to its rate, by a linear scan over the enabled transitions. A time governed
    run stops at t_max and counts the truncated last holding time, an event governed run stops after
    max_events jumps.

    Args:
        params: Reaction rates, raw or scaled.
        cfg: Initial state, seed, termination and burn-in.
        observer: Optional callable receiving (source, target, rate) for every jump.

    Returns:
        OccupationMeasure: Time spent per state after burn-in.

    Raises:
        EmptyMeasure: If the run ended before any time was recorded.

    """
    params = as_reaction_params(params)
    state = as_state(cfg.initial, params.d)
    burn_in = resolved_burn_in(cfg)
    generator = random_generator(cfg.seed)
    uniforms = generator.random(2 * SSA_RANDOM_BLOCK)
    position = 0
    weights = defaultdict(float)
    time, events = 0.0, 0
    while True:
        transitions = enabled_transitions(params, state)
        total_rate = sum(rate for _, rate in transitions)
        if position >= len(uniforms):
            uniforms = generator.random(2 * SSA_RANDOM_BLOCK)
            position = 0
        holding_draw, choice_draw = uniforms[position], uniforms[position + 1]
        position += 2
        end = time - math.log1p(-holding_draw) / total_rate
        if cfg.t_max is not None and end >= cfg.t_max:
            if cfg.t_max > max(time, burn_in):
                weights[state] += cfg.t_max - max(time, burn_in)
            break
        if end > burn_in:
            weights[state] += end - max(time, burn_in)
        time = end
        threshold = choice_draw * total_rate
        target, chosen_rate = transitions[-1]
        cumulative = 0.0
        for candidate, rate in transitions:
            cumulative += rate
            if threshold < cumulative:
                target, chosen_rate = candidate, rate
                break
        if observer is not None:
            observer(state, target, chosen_rate)
        state = target
        events += 1
        if cfg.max_events is not None and events >= cfg.max_events:
            break
    total_time = math.fsum(weights.values())
    if not total_time > 0:
        raise EmptyMeasure(f'Run with seed {cfg.seed} recorded no time after a burn-in of {burn_in}')
    LOGGER.debug(f'Seed {cfg.seed}: {events} events, {total_time:.6g} time recorded, {len(weights)} states')
    return OccupationMeasure(weights=dict(weights), total_time=total_time, events=events, seeds=(cfg.seed,))


def merge_occupations(measures: Iterable[OccupationMeasure]) -> OccupationMeasure:
    """Adds occupation measures of independent runs, in sorted seed order."""
    ordered = sorted(measures, key=lambda measure: measure.seeds)
    if not ordered:
        raise EmptyMeasure('Nothing to merge')
    weights = defaultdict(float)
    for measure in ordered:
        for state, weight in measure.weights.items():
            weights[state] += weight
    return OccupationMeasure(weights=dict(weights),
                             total_time=math.fsum(measure.total_time for measure in ordered),
                             events=sum(measure.events for measure in ordered),
                             seeds=tuple(seed for measure in ordered for seed in measure.seeds))


def run_replicas(params: Union[ReactionParams, ScaledParams], cfg: SimConfig, replicas: int,
                 workers: Optional[int] = None) -> List[OccupationMeasure]:
    """Runs independent replicas with seeds cfg.seed + r, concurrently when more than one worker is allowed.

    Args:
        params: Reaction rates, raw or scaled.
        cfg: Settings shared by all replicas.
        replicas: Number of runs.
        workers: Number of worker processes, one runs everything in this process.

    Returns:
        list: Occupation measures ordered by replica index.

    """
    if replicas < 1:
        raise ConfigurationError(f'replicas must be positive, got {replicas}')
    if cfg.seed + replicas > 2 ** 64:
        raise ConfigurationError(f'Seeds {cfg.seed}..{cfg.seed + replicas - 1} do not fit in 64 bits')
    params = as_reaction_params(params)
    configs = [cfg.with_seed(cfg.seed + replica) for replica in range(replicas)]
    if workers == 1 or replicas == 1:
        return [gillespie_run(params, config) for config in configs]
    results = [None] * replicas
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(gillespie_run, params, config): index for index, config in enumerate(configs)}
        for future in as_completed(futures):
            index = futures[future]
            try:
                results[index] = future.result()
            except Exception:
                LOGGER.exception(f'Replica {index} with seed {configs[index].seed} failed')
                raise
    return results


def occupation_to_distribution(occ: OccupationMeasure) -> Distribution:
    """Normalizes occupation times into a distribution."""
    if not occ.weights or not occ.total_time > 0:
        raise EmptyMeasure('Occupation measure without recorded time')
    return Distribution.from_mapping(occ.weights, metadata={'total_time': occ.total_time,
                                                            'events': occ.events,
                                                            'seeds': list(occ.seeds)})


def _probabilities(measure: Measure) -> Dict[State, float]:
    if isinstance(measure, Distribution):
        return measure.as_dict()
    if isinstance(measure, OccupationMeasure):
        return {state: weight / measure.total_time for state, weight in measure.weights.items()}
    return dict(measure)


def tv_distance(p: Measure, q: Measure) -> float:
    """Total variation distance, half the sum of absolute differences over the union of the supports."""
    first, second = _probabilities(p), _probabilities(q)
    union = set(first) | set(second)
    distance = 0.5 * math.fsum(abs(first.get(state, 0.0) - second.get(state, 0.0)) for state in union)
    return min(1.0, max(0.0, distance))


def lumped_statistics(occ: OccupationMeasure) -> Tuple[float, float, Dict[int, float]]:
    """Time weighted mean and variance of the total count and the fraction of time spent in each hyperplane."""
    if not occ.total_time > 0:
        raise EmptyMeasure('Occupation measure without recorded time')
    marginal = defaultdict(float)
    for state, weight in occ.weights.items():
        marginal[sum(state)] += weight / occ.total_time
    mean = math.fsum(n * share for n, share in marginal.items())
    variance = math.fsum((n - mean) ** 2 * share for n, share in marginal.items())
    return mean, variance, dict(sorted(marginal.items()))


def tv_to_poisson(marginal: Mapping[int, float], mu: float) -> float:
    """Total variation distance between a law on the hyperplanes and Poisson(mu)."""
    counts = np.array(sorted(marginal), dtype=np.int64)
    reference = poisson.pmf(counts, mu)
    observed = np.array([marginal[int(n)] for n in counts])
    outside = max(0.0, 1.0 - math.fsum(reference))
    return 0.5 * (math.fsum(np.abs(observed - reference)) + outside)


def interior_mass_fraction(dist: Measure, min_count: int = 2) -> float:
    """Probability of the states where every species has at least min_count molecules."""
    return math.fsum(probability for state, probability in _probabilities(dist).items()
                     if min(state) >= min_count)
