#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: state.py
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
Lattice states.

A state is a tuple of non negative molecule counts. Tuples are hashable, so states key occupation maps and
lookups directly, and their total is the hyperplane index n.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import itertools
import math
from collections.abc import Generator
from typing import Iterable, Tuple

import numpy as np

from autocatlib.autocatlibexceptions import CapacityExceeded, InvalidState

__author__ = 'autocatlib developers <autocatlib@users.noreply.github.com>'
__docformat__ = 'google'
__date__ = '19-10-2026'
__copyright__ = 'Copyright 2026, autocatlib developers'
__credits__ = ["autocatlib developers"]
__license__ = 'Apache Software License 2.0'
__maintainer__ = 'autocatlib developers'
__email__ = '<autocatlib@users.noreply.github.com>'
__status__ = 'Development'  # "Prototype", "Development", "Production".

State = Tuple[int, ...]


def as_state(values: Iterable[int], d: int = None) -> State:
    """Validates counts and returns them as a state tuple.

    Args:
        values: The molecule counts.
        d: The expected number of species, not checked when omitted.

    Returns:
        State: The counts as a tuple of ints.

    Raises:
        InvalidState: If a count is negative or not integral, or the length does not match d.

    """
    try:
        counts = tuple(values)
    except TypeError:
        raise InvalidState(f'A state must be a sequence of counts, got {values!r}') from None
    if not all(isinstance(count, (int, np.integer)) and not isinstance(count, bool) for count in counts):
        raise InvalidState(f'Counts must be integers, got {counts}')
    if any(count < 0 for count in counts):
        raise InvalidState(f'Counts must be non negative, got {counts}')
    if d is not None and len(counts) != d:
        raise InvalidState(f'Expected {d} counts, got {len(counts)}')
    return tuple(int(count) for count in counts)


def shifted(state: State, species: int, step: int) -> State:
    """Returns the state with the count of a species changed by step, without validation."""
    return state[:species] + (state[species] + step,) + state[species + 1:]


def composition_count(n: int, d: int) -> int:
    """Number of states of d species in hyperplane n."""
    return math.comb(n + d - 1, d - 1)


def compositions(n: int, d: int) -> Generator:
    """Yields the states of hyperplane n in lexicographic order."""
    if d == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, d - 1):
            yield (first,) + rest


def composition_array(n: int, d: int, cap: int = None) -> np.ndarray:
    """All states of hyperplane n as rows of an integer array, in lexicographic order.

    Args:
        n: The hyperplane index.
        d: The number of species.
        cap: Optional upper bound on the number of rows.

    Returns:
        numpy.ndarray: Array of shape (count, d).

    Raises:
        CapacityExceeded: If the number of compositions is above cap.

    """
    count = composition_count(n, d)
    if cap is not None and count > cap:
        raise CapacityExceeded(f'Hyperplane n={n} with d={d} has {count} states, above the cap of {cap}')
    if d == 2:
        first = np.arange(n + 1, dtype=np.int64)
        return np.column_stack((first, n - first))
    # stars and bars: bar positions among n + d - 1 slots
    bars = np.array(list(itertools.combinations(range(n + d - 1), d - 1)), dtype=np.int64).reshape(-1, d - 1)
    edges = np.column_stack((np.full(len(bars), -1), bars, np.full(len(bars), n + d - 1)))
    return np.diff(edges, axis=1) - 1


def enumerate_states(n_max: int, d: int, n_min: int = 0) -> Generator:
    """Yields every state with n_min <= n <= n_max sorted by (n, lexicographic counts)."""
    for n in range(n_min, n_max + 1):
        yield from compositions(n, d)
