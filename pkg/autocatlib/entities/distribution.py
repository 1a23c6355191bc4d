#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: distribution.py
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
Distribution over lattice states.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import csv
import io
import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Mapping

import numpy as np
from scipy.special import logsumexp

from autocatlib.autocatlibexceptions import ConfigurationError, EmptyMeasure, InvalidState
from autocatlib.configuration import CSV_FLOAT_FORMAT
from .state import State

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
LOGGER_BASENAME = 'distribution'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

PROBABILITY_COLUMNS = ('prob', 'time_fraction')


@dataclass(frozen=True, eq=False)
class Distribution:
    """Log probabilities over a finite set of states.

    Rows of ``states`` are sorted by total count n and then lexicographically, and ``log_prob`` holds the
    matching log probabilities. ``truncation_tail_mass`` is the probability known to lie outside the support.
    """

    states: np.ndarray
    log_prob: np.ndarray
    truncation_tail_mass: float = 0.0
    metadata: Dict = field(default_factory=dict)

    def __post_init__(self):
        """Validates shapes and puts the rows in canonical order."""
        states = np.asarray(self.states, dtype=np.int64)
        log_prob = np.asarray(self.log_prob, dtype=float)
        if states.ndim != 2 or states.shape[0] == 0:
            raise EmptyMeasure('A distribution needs at least one state')
        if log_prob.shape != (states.shape[0],):
            raise InvalidState(f'Got {states.shape[0]} states but {log_prob.shape} log probabilities')
        if np.any(states < 0):
            raise InvalidState('Distribution states must have non negative counts')
        totals = states.sum(axis=1)
        order = np.lexsort(tuple(states[:, column] for column in reversed(range(states.shape[1]))) + (totals,))
        object.__setattr__(self, 'states', states[order])
        object.__setattr__(self, 'log_prob', log_prob[order])

    @classmethod
    def from_log_mapping(cls, mapping: Mapping[State, float], truncation_tail_mass: float = 0.0,
                         metadata: Dict = None, normalize: bool = True) -> 'Distribution':
        """Builds a distribution from a mapping of states to log weights.

        Args:
            mapping: Log weights keyed by state.
            truncation_tail_mass: Probability known to lie outside the support.
            metadata: Free form information carried along, for example a species relabeling.
            normalize: Whether to rescale the weights to sum to one.

        Returns:
            Distribution: The distribution.

        """
        if not mapping:
            raise EmptyMeasure('Cannot build a distribution from an empty mapping')
        states = np.array(list(mapping.keys()), dtype=np.int64)
        log_prob = np.array(list(mapping.values()), dtype=float)
        if normalize:
            log_prob = log_prob - logsumexp(log_prob)
        return cls(states, log_prob, truncation_tail_mass, dict(metadata or {}))

    @classmethod
    def from_mapping(cls, mapping: Mapping[State, float], **kwargs) -> 'Distribution':
        """Builds a normalized distribution from non negative weights keyed by state."""
        weights = {state: weight for state, weight in mapping.items()}
        if any(weight < 0 for weight in weights.values()):
            raise InvalidState('Weights must be non negative')
        if not weights or math.fsum(weights.values()) <= 0:
            raise EmptyMeasure('Weights sum to zero')
        with np.errstate(divide='ignore'):
            return cls.from_log_mapping({state: float(np.log(weight)) for state, weight in weights.items()},
                                        **kwargs)

    def __len__(self):
        return self.states.shape[0]

    @property
    def d(self) -> int:
        """Number of species."""
        return self.states.shape[1]

    @property
    def totals(self) -> np.ndarray:
        """Total count n of every row."""
        return self.states.sum(axis=1)

    @property
    def probabilities(self) -> np.ndarray:
        """Probabilities of every row."""
        return np.exp(self.log_prob)

    @property
    def total_mass(self) -> float:
        """Sum of the probabilities, one for a normalized distribution."""
        return float(np.exp(logsumexp(self.log_prob)))

    @cached_property
    def _index(self) -> Dict[State, int]:
        return {tuple(int(count) for count in row): position for position, row in enumerate(self.states)}

    @property
    def support(self):
        """States in canonical order."""
        return list(self._index.keys())

    def log_prob_of(self, state: State) -> float:
        """Log probability of a state, minus infinity outside the support."""
        position = self._index.get(tuple(state))
        return -math.inf if position is None else float(self.log_prob[position])

    def prob_of(self, state: State) -> float:
        """Probability of a state, zero outside the support."""
        position = self._index.get(tuple(state))
        return 0.0 if position is None else float(math.exp(self.log_prob[position]))

    def as_dict(self) -> Dict[State, float]:
        """Probabilities keyed by state."""
        return dict(zip(self._index.keys(), self.probabilities.tolist()))

    def normalized(self) -> 'Distribution':
        """Returns a copy rescaled to total mass one."""
        return Distribution(self.states, self.log_prob - logsumexp(self.log_prob),
                            self.truncation_tail_mass, dict(self.metadata))

    def marginal_n(self) -> Dict[int, float]:
        """Mass of each hyperplane."""
        totals = self.totals
        probabilities = self.probabilities
        return {int(n): float(probabilities[totals == n].sum()) for n in np.unique(totals)}

    def to_csv(self) -> str:
        """Renders the distribution as csv text with header a1..ad,n,log_prob,prob."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow([f'a{species + 1}' for species in range(self.d)] + ['n', 'log_prob', 'prob'])
        for row, log_prob in zip(self.states.tolist(), self.log_prob.tolist()):
            writer.writerow(row + [sum(row), CSV_FLOAT_FORMAT.format(log_prob),
                                   CSV_FLOAT_FORMAT.format(math.exp(log_prob))])
        return buffer.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> 'Distribution':
        """Parses distribution or occupation csv text.

        Rows carry either a ``log_prob`` column or one of the ``prob`` and ``time_fraction`` columns, the
        counts sit in the columns named a1, a2 and so on.

        Args:
            text: The csv content.

        Returns:
            Distribution: The normalized distribution.

        Raises:
            ConfigurationError: If the header misses the count or probability columns.

        """
        reader = csv.DictReader(io.StringIO(text))
        header = reader.fieldnames or []
        count_columns = [name for name in header if name.startswith('a') and name[1:].isdigit()]
        count_columns.sort(key=lambda name: int(name[1:]))
        if not count_columns:
            raise ConfigurationError(f'No count columns in csv header {header}')
        log_column = 'log_prob' if 'log_prob' in header else None
        probability_column = next((name for name in PROBABILITY_COLUMNS if name in header), None)
        if log_column is None and probability_column is None:
            raise ConfigurationError(f'No probability column in csv header {header}')
        mapping = {}
        try:
            for row in reader:
                state = tuple(int(row[name]) for name in count_columns)
                if log_column:
                    mapping[state] = float(row[log_column])
                else:
                    weight = float(row[probability_column])
                    mapping[state] = math.log(weight) if weight > 0 else -math.inf
        except (KeyError, ValueError) as msg:
            raise ConfigurationError(f'Malformed csv row: {msg}') from None
        return cls.from_log_mapping(mapping)
