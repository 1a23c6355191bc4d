#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: specfun.py
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
Log-space special functions.

Everything the closed forms need is evaluated in log space: log-gamma, signed log-Pochhammer symbols and the
terminating Gauss hypergeometric series. Values that may be negative travel as :class:`SignedLog`.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Tuple, Union

import numpy as np
from scipy.special import gammaln, logsumexp

from autocatlib.autocatlibexceptions import DomainError
from autocatlib.configuration import CANCELLATION_LOG_LIMIT

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
LOGGER_BASENAME = 'specfun'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

Number = Union[int, float]


@dataclass(frozen=True)
class SignedLog:
    """A real number stored as a sign in {-1, 0, 1} and the log of its absolute value."""

    sign: int
    log_abs: float

    def __post_init__(self):
        """Normalizes zero so that every zero compares equal."""
        if self.sign not in (-1, 0, 1):
            raise DomainError(f'Sign must be -1, 0 or 1, got {self.sign}')
        if self.sign == 0 or self.log_abs == -math.inf:
            object.__setattr__(self, 'sign', 0)
            object.__setattr__(self, 'log_abs', -math.inf)

    @classmethod
    def from_value(cls, value: Number) -> 'SignedLog':
        """Builds a signed log from a plain float."""
        if value == 0:
            return cls(0, -math.inf)
        return cls(1 if value > 0 else -1, math.log(abs(value)))

    @classmethod
    def one(cls) -> 'SignedLog':
        """The multiplicative identity."""
        return cls(1, 0.0)

    @classmethod
    def zero(cls) -> 'SignedLog':
        """The additive identity."""
        return cls(0, -math.inf)

    @property
    def value(self) -> float:
        """The plain float, which may over- or underflow."""
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_abs)

    def __mul__(self, other: 'SignedLog') -> 'SignedLog':
        return SignedLog(self.sign * other.sign, self.log_abs + other.log_abs)

    def __truediv__(self, other: 'SignedLog') -> 'SignedLog':
        if other.sign == 0:
            raise DomainError('Division by a signed log zero')
        return SignedLog(self.sign * other.sign, self.log_abs - other.log_abs)

    def __neg__(self) -> 'SignedLog':
        return SignedLog(-self.sign, self.log_abs)

    def __add__(self, other: 'SignedLog') -> 'SignedLog':
        return signed_log_sum((self, other))


def signed_log_sum(values: Iterable[SignedLog]) -> SignedLog:
    """Sums signed logs without leaving log space.

    Args:
        values: The terms to add.

    Returns:
        SignedLog: The sum, exactly zero when every term is zero.

    """
    terms = [value for value in values if value.sign != 0]
    if not terms:
        return SignedLog.zero()
    logs = np.array([term.log_abs for term in terms])
    signs = np.array([term.sign for term in terms], dtype=float)
    log_abs, sign = logsumexp(logs, b=signs, return_sign=True)
    if sign == 0 or not np.isfinite(log_abs):
        return SignedLog.zero()
    return SignedLog(int(sign), float(log_abs))


def log_gamma(x: Union[Number, np.ndarray]) -> Union[float, np.ndarray]:
    """Log of the gamma function for strictly positive arguments.

    Args:
        x: A positive scalar or an array of positive values.

    Returns:
        The log-gamma value(s), a float for scalar input.

    Raises:
        DomainError: If any argument is not strictly positive.

    """
    values = np.asarray(x, dtype=float)
    if np.any(~(values > 0)):
        raise DomainError(f'log_gamma is defined here for x > 0 only, got {x}')
    result = gammaln(values)
    if np.ndim(result) == 0:
        return float(result)
    return result


def log_beta(first: Number, second: Number) -> float:
    """Log of the beta function for positive arguments."""
    return log_gamma(first) + log_gamma(second) - log_gamma(first + second)


def log_binomial(n: int, k: Union[int, np.ndarray]) -> Union[float, np.ndarray]:
    """Log of the binomial coefficient n choose k for 0 <= k <= n."""
    k_values = np.asarray(k)
    if np.any(k_values < 0) or np.any(k_values > n):
        raise DomainError(f'Binomial coefficient needs 0 <= k <= {n}, got {k}')
    result = gammaln(n + 1) - gammaln(k_values + 1) - gammaln(n - k_values + 1)
    if np.ndim(result) == 0:
        return float(result)
    return result


def _pochhammer_table(x: float, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Signs and log magnitudes of (x)_k for k = 0..n, built as running products."""
    factors = x + np.arange(n, dtype=float)
    signs = np.concatenate(([1.0], np.cumprod(np.sign(factors))))
    with np.errstate(divide='ignore'):
        logs = np.concatenate(([0.0], np.cumsum(np.log(np.abs(factors)))))
    logs[signs == 0] = -np.inf
    return signs, logs


def log_pochhammer(x: Number, k: int) -> SignedLog:
    """Signed log of the rising factorial (x)_k = x (x + 1) ... (x + k - 1).

    Args:
        x: Any real number.
        k: A non negative integer.

    Returns:
        SignedLog: Zero when one of the factors vanishes.

    Raises:
        DomainError: If k is negative.

    """
    if k < 0:
        raise DomainError(f'Pochhammer order must be non negative, got {k}')
    if k == 0:
        return SignedLog.one()
    if x > 0:
        return SignedLog(1, float(gammaln(x + k) - gammaln(x)))
    signs, logs = _pochhammer_table(float(x), k)
    return SignedLog(int(signs[-1]), float(logs[-1]))


def hyp2f1_terminating(n: int, x: Number, y: Number, z: Number) -> SignedLog:
    """Evaluates the terminating series 2F1(-n, x; y; z) in signed log space.

    The series is sum over i of (-n)_i (x)_i / ((y)_i i!) z^i for i = 0..n, which is rewritten as
    sum of (-1)^i C(n, i) (x)_i / (y)_i z^i.

    Args:
        n: The non negative order at which the series terminates.
        x: The second upper parameter.
        y: The lower parameter.
        z: The argument.

    Returns:
        SignedLog: The value of the series.

    Raises:
        DomainError: If n is negative, if (y)_i vanishes for some i <= n, or if the alternating terms cancel by
            more than CANCELLATION_LOG_LIMIT in log units so the sum carries no significant digits.

    """
    if n < 0:
        raise DomainError(f'Terminating order must be non negative, got {n}')
    if n == 0 or z == 0:
        return SignedLog.one()
    denominator_signs, denominator_logs = _pochhammer_table(float(y), n)
    if np.any(denominator_signs == 0):
        raise DomainError(f'Lower parameter {y} makes (y)_i vanish for some i <= {n}')
    numerator_signs, numerator_logs = _pochhammer_table(float(x), n)
    index = np.arange(n + 1)
    z_sign = 1.0 if z > 0 else -1.0
    signs = (-1.0) ** index * numerator_signs * denominator_signs * z_sign ** index
    logs = log_binomial(n, index) + numerator_logs - denominator_logs + index * math.log(abs(z))
    if not np.any(signs):
        return SignedLog.zero()
    logs = np.where(signs == 0, -np.inf, logs)
    log_abs, sign = logsumexp(logs, b=signs, return_sign=True)
    largest = float(np.max(logs))
    if sign == 0 or not np.isfinite(log_abs) or largest - log_abs > CANCELLATION_LOG_LIMIT:
        raise DomainError(f'2F1(-{n}, {x}; {y}; {z}) cancels below double precision, '
                          f'largest term exp({largest:.6g}), sum exp({log_abs:.6g})')
    return SignedLog(int(sign), float(log_abs))


@lru_cache(maxsize=8192)
def log_hyperplane_series(n: int, alpha_1: float, alpha_2: float, ratio: float) -> float:
    """Log of the positive series F_n = 2F1(-n, alpha_1; 1 - alpha_2 - n; ratio).

    This is the normalizing series of a two species hyperplane profile. For positive alpha_2 every term of the
    series is positive, so the result is a plain log.

    Args:
        n: The hyperplane index.
        alpha_1: The first Moran parameter.
        alpha_2: The second Moran parameter.
        ratio: The catalytic rate ratio kappa_1 / kappa_2.

    Returns:
        float: The log of F_n.

    """
    value = hyp2f1_terminating(n, alpha_1, 1.0 - alpha_2 - n, ratio)
    if value.sign <= 0:
        raise DomainError(f'Hyperplane series is not positive for n={n}, alpha=({alpha_1}, {alpha_2})')
    return value.log_abs
