#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: stationary.py
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
Closed form stationary and approximate stationary laws.

The total count is Poisson with mean sum(lambda) / delta. Given the total n, the symmetric network is
Dirichlet-multinomial, and the asymmetric network is approximated by the stationary law of a Moran process with
genic selection, whose weights kappa^a are normalized by the partition function u. For two species that
normalizer is a terminating Gauss hypergeometric series.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import logging
import math
from decimal import Decimal, InvalidOperation
from typing import Dict, Sequence, Tuple, Union

import numpy as np
from scipy.special import betaln, gammaln, logsumexp
from scipy.stats import poisson

from autocatlib.autocatlibexceptions import (CapacityExceeded,
                                             DomainError,
                                             InvalidState,
                                             ValidityConditionViolation)
from autocatlib.configuration import (DEFAULT_TAIL_TOLERANCE,
                                      MAX_COMPOSITIONS,
                                      MAX_DISTRIBUTION_STATES,
                                      MODE_TOLERANCE,
                                      REGIME_RELATIVE_TOLERANCE)
from autocatlib.entities import (Distribution,
                                 ReactionParams,
                                 Regime,
                                 RegimeLabel,
                                 ScaledParams,
                                 State,
                                 as_state,
                                 composition_array,
                                 composition_count)
from autocatlib.model import as_reaction_params
from autocatlib.specfun import log_binomial, log_hyperplane_series

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
LOGGER_BASENAME = 'stationary'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

PARTITION_METHODS = ('auto', 'sum', 'hypergeometric')


def log_poisson_nu(mu: float, n: Union[int, np.ndarray]) -> Union[float, np.ndarray]:
    """Log of the Poisson(mu) probability of n."""
    if not mu > 0:
        raise DomainError(f'Poisson mean must be positive, got {mu}')
    counts = np.asarray(n)
    if np.any(counts < 0):
        raise DomainError(f'Poisson support is the non negative integers, got {n}')
    result = counts * math.log(mu) - mu - gammaln(counts + 1)
    if np.ndim(result) == 0:
        return float(result)
    return result


def _log_dirmult_rows(n: int, alpha: np.ndarray, rows: np.ndarray) -> np.ndarray:
    total = alpha.sum()
    return (gammaln(n + 1) - gammaln(rows + 1).sum(axis=1)
            + gammaln(total) - gammaln(n + total)
            + (gammaln(rows + alpha) - gammaln(alpha)).sum(axis=1))


def _vectors(alpha: Sequence[float], kappa: Sequence[float] = None) -> Tuple[np.ndarray, np.ndarray]:
    alpha = np.asarray(alpha, dtype=float)
    if np.any(~(alpha > 0)):
        raise DomainError(f'alpha must be positive, got {alpha}')
    if kappa is None:
        return alpha, None
    kappa = np.asarray(kappa, dtype=float)
    if kappa.shape != alpha.shape:
        raise DomainError(f'alpha has {alpha.size} entries but kappa has {kappa.size}')
    if np.any(~(kappa > 0)):
        raise DomainError(f'kappa must be positive, got {kappa}')
    return alpha, kappa


def _row(n: int, a: State, d: int) -> np.ndarray:
    a = as_state(a, d)
    if sum(a) != n:
        raise InvalidState(f'State {a} does not lie in hyperplane n={n}')
    return np.array([a], dtype=np.int64)


def log_dirmult(n: int, alpha: Sequence[float], a: State) -> float:
    """Log Dirichlet-multinomial(n, alpha) probability of a composition a of n."""
    alpha, _ = _vectors(alpha)
    return float(_log_dirmult_rows(n, alpha, _row(n, a, alpha.size))[0])


def _log_partition_hypergeometric(alpha: np.ndarray, kappa: np.ndarray, n: int) -> float:
    if kappa[0] > kappa[1]:
        alpha, kappa = alpha[::-1], kappa[::-1]
    total = alpha.sum()
    return float(n * math.log(kappa[1]) + gammaln(total) - gammaln(n + total)
                 + gammaln(alpha[1] + n) - gammaln(alpha[1])
                 + log_hyperplane_series(n, float(alpha[0]), float(alpha[1]), float(kappa[0] / kappa[1])))


def _log_partition_sum(alpha: np.ndarray, kappa: np.ndarray, n: int, cap: int) -> float:
    count = composition_count(n, alpha.size)
    if count > cap:
        raise CapacityExceeded(f'Partition function at n={n}, d={alpha.size} needs {count} compositions, '
                               f'above the cap of {cap}')
    if count > cap // 2:
        LOGGER.warning(f'Partition function at n={n} sums {count} compositions, close to the cap of {cap}')
    rows = composition_array(n, alpha.size)
    return float(logsumexp(rows @ np.log(kappa) + _log_dirmult_rows(n, alpha, rows)))


def log_partition_u(alpha: Sequence[float], kappa: Sequence[float], n: int, method: str = 'auto',
                    cap: int = MAX_COMPOSITIONS) -> float:
    """Log of the partition function u(alpha, kappa, n) = E[(sum kappa_i xi_i)^n] with xi Dirichlet(alpha).

    Args:
        alpha: Positive Dirichlet parameters.
        kappa: Positive selection weights.
        n: Non negative population size.
        method: ``sum`` adds the weights of every composition, ``hypergeometric`` uses the two species
            series and ``auto`` picks the exact neutral value, then the series for two species, then the sum.
        cap: Largest number of compositions the sum may enumerate.

    Returns:
        float: log u.

    Raises:
        CapacityExceeded: If the composition sum would exceed the cap.
        ValidityConditionViolation: If the series is requested for more than two species.

    """
    if method not in PARTITION_METHODS:
        raise DomainError(f'Unknown partition method "{method}", expected one of {PARTITION_METHODS}')
    if n < 0:
        raise DomainError(f'n must be non negative, got {n}')
    alpha, kappa = _vectors(alpha, kappa)
    if method == 'hypergeometric' and alpha.size != 2:
        raise ValidityConditionViolation(f'The hypergeometric partition function needs d=2, got d={alpha.size}')
    if method == 'auto' and np.all(kappa == kappa[0]):
        return float(n * math.log(kappa[0]))
    if method == 'hypergeometric' or (method == 'auto' and alpha.size == 2):
        return _log_partition_hypergeometric(alpha, kappa, n)
    return _log_partition_sum(alpha, kappa, n, cap)


def log_moran_pi(n: int, alpha: Sequence[float], kappa: Sequence[float], a: State, method: str = 'auto') -> float:
    """Log stationary probability of a in the Moran process with genic selection kappa."""
    alpha, kappa = _vectors(alpha, kappa)
    row = _row(n, a, alpha.size)
    if method == 'auto' and np.all(kappa == kappa[0]):
        return float(_log_dirmult_rows(n, alpha, row)[0])
    return float(row[0] @ np.log(kappa) + _log_dirmult_rows(n, alpha, row)[0]
                 - log_partition_u(alpha, kappa, n, method=method))


def log_symmetric_Pi(params: ReactionParams, a: State) -> float:  # pylint: disable=invalid-name
    """Log of the exact stationary law Poisson(n) times Dirichlet-multinomial(a | n) of a symmetric network."""
    params = as_reaction_params(params)
    if not params.is_symmetric:
        raise ValidityConditionViolation(f'The exact product law needs equal kappa, got {params.kappa}')
    a = as_state(a, params.d)
    n = sum(a)
    return log_poisson_nu(params.poisson_mean, n) + log_dirmult(n, params.alpha, a)


def log_tilde_Pi(params: ReactionParams, a: State) -> float:  # pylint: disable=invalid-name
    """Log of the approximate stationary law: Poisson(n) times the Moran law of a given n."""
    params = as_reaction_params(params)
    a = as_state(a, params.d)
    n = sum(a)
    return log_poisson_nu(params.poisson_mean, n) + log_moran_pi(n, params.alpha, params.kappa, a)


def relabeling(params: ReactionParams) -> bool:
    """Whether the two species are swapped internally so that kappa_1 <= kappa_2."""
    return params.d == 2 and params.kappa[0] > params.kappa[1]


def _require_two_species(params: ReactionParams):
    if params.d != 2:
        raise ValidityConditionViolation(f'This closed form holds for d=2 only, got d={params.d}')


def _profile(kappa: Tuple[float, float], alpha: Tuple[float, float], n: int, first: np.ndarray) -> np.ndarray:
    """Log conditional probabilities of the states (i, n - i) for i in first, labels with kappa_1 <= kappa_2."""
    alpha_1, alpha_2 = alpha
    if kappa[0] == kappa[1]:
        rows = np.column_stack((first, n - first))
        return _log_dirmult_rows(n, np.array(alpha), rows)
    ratio = kappa[0] / kappa[1]
    log_weights = (first * math.log(ratio) + log_binomial(n, first)
                   + gammaln(alpha_1 + first) + gammaln(alpha_2 + n - first)
                   - gammaln(alpha_1) - gammaln(alpha_2 + n))
    return log_weights - log_hyperplane_series(n, alpha_1, alpha_2, ratio)


def _profile_original_labels(params: ReactionParams, n: int, first: np.ndarray) -> np.ndarray:
    if relabeling(params):
        swapped = params.permuted((1, 0))
        return _profile(swapped.kappa, swapped.alpha, n, n - first)
    return _profile(params.kappa, params.alpha, n, first)


def log_tilde_pi_d2(params: ReactionParams, n: int, i: int) -> float:
    """Log of the two species hyperplane law at state (i, n - i).

    The law is (kappa_1 / kappa_2)^i C(n, i) Gamma(alpha_1 + i) Gamma(alpha_2 + n - i) /
    (Gamma(alpha_1) Gamma(alpha_2 + n)) divided by F_n = 2F1(-n, alpha_1; 1 - alpha_2 - n; kappa_1 / kappa_2).
    Species are swapped internally when kappa_1 > kappa_2, the argument and result use the caller's labels.

    Args:
        params: Two species reaction rates.
        n: The hyperplane index.
        i: The count of the first species.

    Returns:
        float: The log probability.

    """
    params = as_reaction_params(params)
    _require_two_species(params)
    if not 0 <= i <= n:
        raise InvalidState(f'Need 0 <= i <= n, got i={i}, n={n}')
    return float(_profile_original_labels(params, n, np.array([i]))[0])


def log_tilde_pi_profile(params: ReactionParams, n: int) -> np.ndarray:
    """Log of the two species hyperplane law at every state (i, n - i), indexed by i = 0..n."""
    params = as_reaction_params(params)
    _require_two_species(params)
    if n < 0:
        raise InvalidState(f'n must be non negative, got {n}')
    return _profile_original_labels(params, n, np.arange(n + 1))


def log_tilde_pi_beta_binomial(sp: ScaledParams, n: int, i: int) -> float:
    """Log of the two species hyperplane law written as a weighted Beta-binomial law.

    The weight of i is kappa'_1^i kappa'_2^(n - i) C(n, i) B(i + DV / (d kappa'_1), n - i + DV / (d kappa'_2)),
    normalized by summing the weights over the hyperplane.
    """
    if sp.d != 2:
        raise ValidityConditionViolation(f'The Beta-binomial form holds for d=2 only, got d={sp.d}')
    if not 0 <= i <= n:
        raise InvalidState(f'Need 0 <= i <= n, got i={i}, n={n}')
    shape_1, shape_2 = (sp.dv / (sp.d * kappa) for kappa in sp.kappa_prime)
    first = np.arange(n + 1)
    log_weights = (first * math.log(sp.kappa_prime[0]) + (n - first) * math.log(sp.kappa_prime[1])
                   + log_binomial(n, first) + betaln(first + shape_1, n - first + shape_2)
                   - betaln(shape_1, shape_2))
    return float(log_weights[i] - logsumexp(log_weights))


def regime_classify(sp: ScaledParams) -> RegimeLabel:
    """Classifies the shape of the approximate law by comparing D V with the number of species.

    The comparison is made on the decimal representation of the inputs, so that D=0.01 and V=200 give
    exactly two.
    """
    try:
        dv_exact = Decimal(repr(sp.flow)) * Decimal(repr(sp.volume))
    except InvalidOperation:
        dv_exact = Decimal(sp.flow) * Decimal(sp.volume)
    d = Decimal(sp.d)
    near_equal = dv_exact != d and abs(dv_exact - d) <= Decimal(REGIME_RELATIVE_TOLERANCE) * d
    if dv_exact == d or near_equal:
        if near_equal:
            LOGGER.warning(f'DV={dv_exact} is within {REGIME_RELATIVE_TOLERANCE} of d={sp.d}, reporting FLAT')
        value = Regime.FLAT
    elif dv_exact < d:
        value = Regime.BOUNDARY_BIMODAL
    else:
        value = Regime.INTERIOR_UNIMODAL
    return RegimeLabel(value=value, dv=float(dv_exact), d=sp.d, near_equal=near_equal)


def _log_upper_tail_bound(mu: float, count: int) -> float:
    """Chernoff bound on log P(N >= count) for N Poisson(mu) and count > mu."""
    return -mu + count * (1.0 + math.log(mu / count))


def poisson_upper_cutoff(mu: float, tail_tol: float) -> int:
    """Smallest n_max whose Poisson(mu) upper tail P(N > n_max) is below tail_tol.

    The cutoff is found on the Chernoff bound, by doubling and then bisecting, and finally checked against
    the exact tail.
    """
    log_tolerance = math.log(tail_tol)
    high = max(1, math.ceil(mu) + 1)
    while _log_upper_tail_bound(mu, high) >= log_tolerance:
        high *= 2
    low = max(1, math.floor(mu) + 1)
    while low < high:
        middle = (low + high) // 2
        if _log_upper_tail_bound(mu, middle) < log_tolerance:
            high = middle
        else:
            low = middle + 1
    n_max = high - 1
    while poisson.sf(n_max, mu) >= tail_tol:
        n_max += 1
    return n_max


def poisson_lower_cutoff(mu: float, tail_tol: float) -> int:
    """Largest n_min whose Poisson(mu) lower tail P(N < n_min) is below tail_tol, from the Chernoff bound."""
    log_tolerance = math.log(tail_tol)
    if -mu >= log_tolerance:
        return 0
    n_min = 1
    for count in range(1, math.ceil(mu)):
        if -mu + count * (1.0 + math.log(mu / count)) >= log_tolerance:
            break
        n_min = count + 1
    return n_min


def hyperplane_window(mu: float, tail_tol: float = DEFAULT_TAIL_TOLERANCE) -> Tuple[int, int]:
    """Hyperplanes n_lo..n_hi holding all but tail_tol of the Poisson(mu) mass, split over both tails."""
    if not 0 < tail_tol < 1:
        raise DomainError(f'tail_tol must lie in (0, 1), got {tail_tol}')
    return poisson_lower_cutoff(mu, tail_tol / 2), poisson_upper_cutoff(mu, tail_tol / 2)


def _window(params: ReactionParams, tail_tol: float, two_sided: bool) -> Tuple[int, int, float]:
    mu = params.poisson_mean
    if two_sided:
        n_lo, n_hi = hyperplane_window(mu, tail_tol)
    else:
        if not 0 < tail_tol < 1:
            raise DomainError(f'tail_tol must lie in (0, 1), got {tail_tol}')
        n_lo, n_hi = 0, poisson_upper_cutoff(mu, tail_tol)
    tail_mass = float(poisson.sf(n_hi, mu) + (poisson.cdf(n_lo - 1, mu) if n_lo > 0 else 0.0))
    return n_lo, n_hi, tail_mass


def _hyperplane_log_values(params: ReactionParams, n: int, rows: np.ndarray) -> np.ndarray:
    if params.d == 2:
        values = _profile_original_labels(params, n, rows[:, 0])
    else:
        alpha = np.array(params.alpha)
        kappa = np.array(params.kappa)
        values = _log_dirmult_rows(n, alpha, rows)
        if not params.is_symmetric:
            values = values + rows @ np.log(kappa) - log_partition_u(alpha, kappa, n)
    return values + log_poisson_nu(params.poisson_mean, n)


def build_distribution(params: Union[ReactionParams, ScaledParams], tail_tol: float = DEFAULT_TAIL_TOLERANCE,
                       two_sided: bool = False, n_max: int = None,
                       cap: int = MAX_DISTRIBUTION_STATES) -> Distribution:
    """Materializes the approximate stationary law on the hyperplanes that carry all but tail_tol of the mass.

    Args:
        params: Reaction rates, raw or scaled.
        tail_tol: Poisson mass allowed outside the enumerated hyperplanes.
        two_sided: Whether to also drop the low hyperplanes, which suits large populations.
        n_max: Explicit last hyperplane, overriding the tail bound.
        cap: Largest number of states to enumerate.

    Returns:
        Distribution: The normalized law with the omitted Poisson mass recorded.

    Raises:
        CapacityExceeded: If the window holds more states than the cap.

    """
    params = as_reaction_params(params)
    if n_max is None:
        n_lo, n_hi, tail_mass = _window(params, tail_tol, two_sided)
    else:
        n_lo, n_hi = 0, int(n_max)
        tail_mass = float(poisson.sf(n_hi, params.poisson_mean))
    count = sum(composition_count(n, params.d) for n in range(n_lo, n_hi + 1))
    if count > cap:
        raise CapacityExceeded(f'Hyperplanes {n_lo}..{n_hi} hold {count} states, above the cap of {cap}')
    LOGGER.debug(f'Enumerating hyperplanes {n_lo}..{n_hi}, {count} states, omitted tail mass {tail_mass:.3g}')
    blocks, values = [], []
    for n in range(n_lo, n_hi + 1):
        rows = composition_array(n, params.d)
        blocks.append(rows)
        values.append(_hyperplane_log_values(params, n, rows))
    log_prob = np.concatenate(values)
    log_prob = log_prob - logsumexp(log_prob)
    metadata = {'n_min': n_lo, 'n_max': n_hi, 'relabeled': relabeling(params)}
    return Distribution(np.vstack(blocks), log_prob, tail_mass, metadata)


def symmetric_distribution(params: Union[ReactionParams, ScaledParams], tail_tol: float = DEFAULT_TAIL_TOLERANCE,
                           n_max: int = None, cap: int = MAX_DISTRIBUTION_STATES) -> Distribution:
    """Materializes the exact stationary law of a symmetric network."""
    params = as_reaction_params(params)
    if not params.is_symmetric:
        raise ValidityConditionViolation(f'The exact product law needs equal kappa, got {params.kappa}')
    return build_distribution(params, tail_tol=tail_tol, n_max=n_max, cap=cap)


def _neighbour_moves(d: int) -> np.ndarray:
    moves = []
    for species in range(d):
        for step in (1, -1):
            move = [0] * d
            move[species] = step
            moves.append(move)
    for producer in range(d):
        for consumed in range(d):
            if producer != consumed:
                move = [0] * d
                move[producer], move[consumed] = 1, -1
                moves.append(move)
    return np.array(moves, dtype=np.int64)


def distribution_modes(dist: Distribution, tolerance: float = MODE_TOLERANCE) -> list:
    """Local maxima of a distribution over single species steps and catalytic swaps.

    A state is a mode when no neighbour in the support is more probable by more than the tolerance. Modes
    are listed from most to least probable, equal values in lexicographic order.

    Args:
        dist: The distribution.
        tolerance: Relative slack on log probabilities.

    Returns:
        list: The modes as state tuples.

    """
    states, log_prob = dist.states, dist.log_prob
    base = int(states.max()) + 2
    weights = base ** np.arange(dist.d, dtype=np.int64)
    keys = states @ weights
    order = np.argsort(keys)
    sorted_keys = keys[order]
    best_neighbour = np.full(len(dist), -np.inf)
    for move in _neighbour_moves(dist.d):
        neighbours = states + move
        valid = np.all(neighbours >= 0, axis=1)
        neighbour_keys = neighbours @ weights
        positions = np.clip(np.searchsorted(sorted_keys, neighbour_keys), 0, len(dist) - 1)
        found = valid & (sorted_keys[positions] == neighbour_keys)
        candidate = np.where(found, log_prob[order[positions]], -np.inf)
        best_neighbour = np.maximum(best_neighbour, candidate)
    slack = tolerance * np.maximum(1.0, np.abs(log_prob))
    is_mode = np.isfinite(log_prob) & (log_prob >= best_neighbour - slack)
    modes = [(float(log_prob[index]), tuple(int(count) for count in states[index]))
             for index in np.flatnonzero(is_mode)]
    modes.sort(key=lambda item: (-item[0], item[1]))
    return [state for _, state in modes]


def lattice_argmax(params: Union[ReactionParams, ScaledParams],
                   tail_tol: float = DEFAULT_TAIL_TOLERANCE) -> State:
    """Most probable state of the two species approximate law, searched hyperplane by hyperplane."""
    params = as_reaction_params(params)
    _require_two_species(params)
    n_lo, n_hi = hyperplane_window(params.poisson_mean, tail_tol)
    best_value, best_state = -math.inf, None
    for n in range(n_lo, n_hi + 1):
        profile = log_tilde_pi_profile(params, n) + log_poisson_nu(params.poisson_mean, n)
        first = int(np.argmax(profile))
        if profile[first] > best_value:
            best_value, best_state = float(profile[first]), (first, n - first)
    LOGGER.debug(f'Lattice argmax {best_state} over hyperplanes {n_lo}..{n_hi}')
    return best_state


def boundary_mass(dist: Distribution, min_count: int = 2) -> Dict[str, float]:
    """Mass on each face where one species is absent and on the interior where every count is >= min_count."""
    probabilities = dist.probabilities
    masses = {f'absent_{species + 1}': float(probabilities[dist.states[:, species] == 0].sum())
              for species in range(dist.d)}
    masses['interior'] = float(probabilities[dist.states.min(axis=1) >= min_count].sum())
    return masses
