#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: ode.py
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
Mean field equations of the two species network and their fixed point.

The equations are written in molecule counts with the unscaled rates kappa_i = kappa'_i / V,
lambda_i = D V and delta = D::

    d a_1 / dt = (kappa_1 - kappa_2) a_1 a_2 + lambda_1 - delta a_1
    d a_2 / dt = (kappa_2 - kappa_1) a_1 a_2 + lambda_2 - delta a_2

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import logging
import math
from typing import Sequence, Tuple, Union

import numpy as np

from autocatlib.autocatlibexceptions import DomainError, ValidityConditionViolation
from autocatlib.configuration import NEWTON_POLISH_STEPS
from autocatlib.entities import FixedPoint, ReactionParams, ScaledParams
from autocatlib.model import as_reaction_params

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
LOGGER_BASENAME = 'ode'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())


def _two_species(params: Union[ReactionParams, ScaledParams]) -> ReactionParams:
    params = as_reaction_params(params)
    if params.d != 2:
        raise ValidityConditionViolation(f'The mean field fixed point is implemented for d=2 only, got d={params.d}')
    return params


def ode_rhs(params: Union[ScaledParams, ReactionParams], x: Sequence[float]) -> Tuple[float, float]:
    """Right hand side of the mean field equations at counts x."""
    params = _two_species(params)
    x_1, x_2 = (float(value) for value in x)
    if x_1 < 0 or x_2 < 0:
        raise DomainError(f'Counts must be non negative, got {x}')
    kappa_1, kappa_2 = params.kappa
    lambda_1, lambda_2 = params.lambda_
    exchange = (kappa_1 - kappa_2) * x_1 * x_2
    return exchange + lambda_1 - params.delta * x_1, -exchange + lambda_2 - params.delta * x_2


def jacobian(params: Union[ScaledParams, ReactionParams], x: Sequence[float]) -> np.ndarray:
    """Jacobian of the mean field equations at counts x."""
    params = _two_species(params)
    x_1, x_2 = x
    difference = params.kappa[0] - params.kappa[1]
    return np.array([[difference * x_2 - params.delta, difference * x_1],
                     [-difference * x_2, -difference * x_1 - params.delta]])


def _stable_roots(quadratic: float, linear: float, constant: float) -> Tuple[float, float]:
    """Both roots of quadratic * x^2 + linear * x + constant = 0, without subtracting nearly equal numbers."""
    discriminant = linear * linear - 4.0 * quadratic * constant
    if discriminant < 0:
        raise DomainError(f'Fixed point quadratic has no real root, discriminant {discriminant}')
    q = -0.5 * (linear + math.copysign(math.sqrt(discriminant), linear))
    return q / quadratic, constant / q


def fixed_point(params: Union[ScaledParams, ReactionParams]) -> FixedPoint:
    """Equilibrium of the mean field equations.

    At equilibrium the total inflow equals the total outflow, so a_1 + a_2 = S = (lambda_1 + lambda_2) / delta
    and the first equation becomes the quadratic c a_1^2 + (delta - c S) a_1 - lambda_1 = 0 with
    c = kappa_1 - kappa_2. Its value is lambda_1 > 0 at zero and -lambda_2 < 0 at S, so exactly one root
    lies in (0, S). The root is computed with the stable formula and polished with Newton steps.

    Args:
        params: Two species rates, raw or scaled.

    Returns:
        FixedPoint: The equilibrium, its stability and the size of the right hand side there.

    """
    params = _two_species(params)
    kappa_1, kappa_2 = params.kappa
    lambda_1, lambda_2 = params.lambda_
    delta = params.delta
    total = (lambda_1 + lambda_2) / delta
    difference = kappa_1 - kappa_2
    if difference == 0:
        first = lambda_1 / delta
    else:
        roots = _stable_roots(difference, delta - difference * total, -lambda_1)
        inside = [root for root in roots if 0 <= root <= total]
        assert inside, f'No fixed point in [0, {total}] for roots {roots}'
        first = inside[0]
        for _ in range(NEWTON_POLISH_STEPS):
            value = difference * first * (total - first) + lambda_1 - delta * first
            slope = difference * (total - 2.0 * first) - delta
            first -= value / slope
    a_star = (first, total - first)
    eigenvalues = np.linalg.eigvals(jacobian(params, a_star))
    residual = max(abs(component) for component in ode_rhs(params, a_star))
    LOGGER.debug(f'Fixed point {a_star}, eigenvalues {eigenvalues}, residual {residual:.3g}')
    return FixedPoint(a_star=a_star,
                      stable=bool(np.all(eigenvalues.real < 0)),
                      residual=float(residual),
                      eigenvalues=tuple(complex(value) for value in eigenvalues))
