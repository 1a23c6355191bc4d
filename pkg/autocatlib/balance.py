#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: balance.py
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
Balance error of the approximate stationary law.

For two species the balance error at a state is the adjoint generator applied to the approximate law,
divided by the approximate conditional probability of the state. It vanishes everywhere exactly when the
approximation is stationary, which is the case for equal catalytic rates.

Three evaluations are offered. The direct one sums the outflow term and the three inflow terms from the
hyperplanes n - 1, n and n + 1 using the hyperplane law itself. The closed form writes every neighbour ratio
in terms of the counts, alpha and the series ratios F_n / F_(n-1) and F_n / F_(n+1), which removes the large
catalytic terms that cancel. The scaled one applies the closed form to volume scaled rates.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import csv
import io
import logging
import math
from typing import Callable, Dict, List, Tuple, Union

import numpy as np

from autocatlib.autocatlibexceptions import ValidityConditionViolation
from autocatlib.configuration import CSV_FLOAT_FORMAT
from autocatlib.entities import (BalanceTerms,
                                 ReactionParams,
                                 ScaledParams,
                                 State,
                                 as_state,
                                 compositions)
from autocatlib.model import as_reaction_params
from autocatlib.specfun import log_hyperplane_series
from autocatlib.stationary import log_tilde_pi_profile, relabeling

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
LOGGER_BASENAME = 'balance'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

GridRow = Tuple[State, BalanceTerms, float]


def _two_species(params: Union[ReactionParams, ScaledParams]) -> ReactionParams:
    params = as_reaction_params(params)
    if params.d != 2:
        raise ValidityConditionViolation(f'The balance error is implemented for d=2 only, got d={params.d}')
    return params


def _direct_terms(params: ReactionParams, a: State, profile: Callable[[int], np.ndarray]) -> BalanceTerms:
    kappa_1, kappa_2 = params.kappa
    lambda_1, lambda_2 = params.lambda_
    inflow = lambda_1 + lambda_2
    delta = params.delta
    a_1, a_2 = a
    n = a_1 + a_2
    log_reference = profile(n)[a_1]

    def ratio(hyperplane: int, first: int) -> float:
        return math.exp(profile(hyperplane)[first] - log_reference)

    r_n = inflow + n * delta + (kappa_1 + kappa_2) * a_1 * a_2
    lower = []
    if a_1 >= 1:
        lower.append(lambda_1 * ratio(n - 1, a_1 - 1))
    if a_2 >= 1:
        lower.append(lambda_2 * ratio(n - 1, a_1))
    l_nm1 = n * delta / inflow * math.fsum(lower)
    same = []
    if a_2 >= 2:
        same.append(kappa_2 * (a_1 + 1) * (a_2 - 1) * ratio(n, a_1 + 1))
    if a_1 >= 2:
        same.append(kappa_1 * (a_1 - 1) * (a_2 + 1) * ratio(n, a_1 - 1))
    l_n = math.fsum(same)
    l_np1 = inflow / (n + 1) * math.fsum(((a_1 + 1) * ratio(n + 1, a_1 + 1),
                                          (a_2 + 1) * ratio(n + 1, a_1)))
    bstar = math.fsum((l_nm1, l_n, l_np1, -r_n))
    return BalanceTerms(r_n=r_n, l_nm1=l_nm1, l_n=l_n, l_np1=l_np1, bstar=bstar)


def _profile_cache(params: ReactionParams) -> Callable[[int], np.ndarray]:
    cache = {}

    def profile(n: int) -> np.ndarray:
        if n not in cache:
            cache[n] = log_tilde_pi_profile(params, n)
        return cache[n]
    return profile


def bstar_direct(params: Union[ReactionParams, ScaledParams], a: State) -> BalanceTerms:
    """Evaluates the balance error by summing its outflow and inflow terms.

    Every term is the rate of a flux into or out of a, times the hyperplane law at the source, divided by the
    hyperplane law at a. Sources with a negative count are dropped.

    Args:
        params: Two species reaction rates.
        a: The state.

    Returns:
        BalanceTerms: The four terms and the balance error.

    """
    params = _two_species(params)
    a = as_state(a, 2)
    return _direct_terms(params, a, _profile_cache(params))


def _closed_form(params: ReactionParams, a: State) -> float:
    kappa_1, kappa_2 = params.kappa
    alpha_1, alpha_2 = params.alpha
    inflow = params.total_inflow
    ratio = kappa_1 / kappa_2
    a_1, a_2 = a
    n = a_1 + a_2
    log_series = log_hyperplane_series(n, alpha_1, alpha_2, ratio)
    log_shift_plus = log_series - log_hyperplane_series(n + 1, alpha_1, alpha_2, ratio)
    upper = (ratio * (a_1 + alpha_1) + a_2 + alpha_2) / (n + alpha_2)
    # t_i = a_i alpha_i / (a_i - 1 + alpha_i), zero on the face a_i = 0
    t_1 = a_1 * alpha_1 / (a_1 - 1 + alpha_1) if a_1 else 0.0
    t_2 = a_2 * alpha_2 / (a_2 - 1 + alpha_2) if a_2 else 0.0
    lower = 0.0
    if t_1 or t_2:
        shift_minus = math.exp(log_series - log_hyperplane_series(n - 1, alpha_1, alpha_2, ratio))
        lower = kappa_2 * (n - 1 + alpha_2) * shift_minus * (t_1 + t_2)
    return math.fsum((inflow * math.expm1(log_shift_plus + math.log(upper)),
                      lower,
                      -kappa_1 * alpha_1 * a_1,
                      -kappa_2 * alpha_2 * a_2,
                      -kappa_1 * (a_1 + alpha_1) * t_2,
                      -kappa_2 * (a_2 + alpha_2) * t_1))


def bstar_closed_form(params: Union[ReactionParams, ScaledParams], a: State) -> float:
    """Closed form of the balance error in terms of the counts, alpha and the series ratios.

    With z = kappa_1 / kappa_2, t_i = a_i alpha_i / (a_i - 1 + alpha_i) and the series ratios
    rho_minus = F_n / F_(n-1) and rho_plus = F_n / F_(n+1), the balance error is::

        sum(lambda) (rho_plus (z (a_1 + alpha_1) + a_2 + alpha_2) / (n + alpha_2) - 1)
        + kappa_2 (n - 1 + alpha_2) rho_minus (t_1 + t_2)
        - kappa_1 alpha_1 a_1 - kappa_2 alpha_2 a_2
        - kappa_1 (a_1 + alpha_1) t_2 - kappa_2 (a_2 + alpha_2) t_1

    Species are swapped internally when kappa_1 > kappa_2, equal rates return zero.

    Args:
        params: Two species reaction rates.
        a: The state.

    Returns:
        float: The balance error.

    """
    params = _two_species(params)
    a = as_state(a, 2)
    if params.is_symmetric:
        return 0.0
    if relabeling(params):
        return _closed_form(params.permuted((1, 0)), (a[1], a[0]))
    return _closed_form(params, a)


def bstar_scaled(sp: ScaledParams, a: State) -> float:
    """Balance error of volume scaled rates, the closed form evaluated on kappa' / V, D V and D."""
    return bstar_closed_form(sp.to_unscaled(), a)


def hyp_ratios(params: Union[ReactionParams, ScaledParams], n: int) -> Tuple[float, float]:
    """Series ratios F_n / F_(n-1) and F_n / F_(n+1) of hyperplane n.

    F_n = 2F1(-n, alpha_1; 1 - alpha_2 - n; kappa_1 / kappa_2) in the labeling with kappa_1 <= kappa_2. At
    n = 0 the first ratio has no lower hyperplane and is reported as 1.
    """
    params = _two_species(params)
    if n < 0:
        raise ValidityConditionViolation(f'n must be non negative, got {n}')
    if relabeling(params):
        params = params.permuted((1, 0))
    alpha_1, alpha_2 = params.alpha
    ratio = params.kappa[0] / params.kappa[1]
    log_series = log_hyperplane_series(n, alpha_1, alpha_2, ratio)
    shift_minus = math.exp(log_series - log_hyperplane_series(n - 1, alpha_1, alpha_2, ratio)) if n else 1.0
    shift_plus = math.exp(log_series - log_hyperplane_series(n + 1, alpha_1, alpha_2, ratio))
    return shift_minus, shift_plus


def pi_shift_ratios(params: Union[ReactionParams, ScaledParams], a: State) -> Dict[str, float]:
    """Closed forms of the hyperplane law at the neighbours of a relative to its value at a.

    Keys name the move: ``minus_e1`` and ``minus_e2`` go to hyperplane n - 1, ``e1_minus_e2`` and
    ``e2_minus_e1`` stay in hyperplane n, ``plus_e1`` and ``plus_e2`` go to hyperplane n + 1. Moves leaving
    the lattice are omitted.
    """
    params = _two_species(params)
    a_1, a_2 = as_state(a, 2)
    n = a_1 + a_2
    alpha_1, alpha_2 = params.alpha
    ratio = params.kappa[0] / params.kappa[1]
    log_series = log_hyperplane_series(n, alpha_1, alpha_2, ratio)
    shift_plus = math.exp(log_series - log_hyperplane_series(n + 1, alpha_1, alpha_2, ratio))
    ratios = {'plus_e1': ratio * (n + 1) / (a_1 + 1) * (a_1 + alpha_1) / (n + alpha_2) * shift_plus,
              'plus_e2': (n + 1) / (a_2 + 1) * (a_2 + alpha_2) / (n + alpha_2) * shift_plus}
    if n:
        shift_minus = math.exp(log_series - log_hyperplane_series(n - 1, alpha_1, alpha_2, ratio))
        if a_1:
            ratios['minus_e1'] = a_1 / (ratio * n) * (n - 1 + alpha_2) / (a_1 - 1 + alpha_1) * shift_minus
            ratios['e2_minus_e1'] = a_1 / (ratio * (a_2 + 1)) * (a_2 + alpha_2) / (a_1 - 1 + alpha_1)
        if a_2:
            ratios['minus_e2'] = a_2 / n * (n - 1 + alpha_2) / (a_2 - 1 + alpha_2) * shift_minus
            ratios['e1_minus_e2'] = ratio * a_2 / (a_1 + 1) * (a_1 + alpha_1) / (a_2 - 1 + alpha_2)
    return ratios


def balance_grid(params: Union[ReactionParams, ScaledParams], n_max: int) -> List[GridRow]:
    """Direct terms and closed form of the balance error at every state with n <= n_max, sorted by (n, a_1)."""
    params = _two_species(params)
    profile = _profile_cache(params)
    rows = []
    for n in range(n_max + 1):
        for state in compositions(n, 2):
            rows.append((state, _direct_terms(params, state, profile), bstar_closed_form(params, state)))
    LOGGER.debug(f'Evaluated the balance error at {len(rows)} states up to n={n_max}')
    return rows


def balance_csv(rows: List[GridRow]) -> str:
    """Renders grid rows as csv text with header a1,a2,n,bstar_direct,bstar_closed,abs_diff."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['a1', 'a2', 'n', 'bstar_direct', 'bstar_closed', 'abs_diff'])
    for state, terms, closed in rows:
        writer.writerow([state[0], state[1], sum(state)]
                        + [CSV_FLOAT_FORMAT.format(value) for value in (terms.bstar, closed,
                                                                        abs(terms.bstar - closed))])
    return buffer.getvalue()


def ratio_csv(params: Union[ReactionParams, ScaledParams], n_max: int) -> str:
    """Renders the series ratios for n = 0..n_max as csv text with header n,r_shift_minus,r_shift_plus."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['n', 'r_shift_minus', 'r_shift_plus'])
    for n in range(n_max + 1):
        writer.writerow([n] + [CSV_FLOAT_FORMAT.format(value) for value in hyp_ratios(params, n)])
    return buffer.getvalue()
