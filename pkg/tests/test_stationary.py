#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_stationary.py
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
test_stationary
----------------------------------
Tests for `stationary` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import math
import unittest

import mpmath
import numpy as np
from scipy.special import logsumexp
from scipy.stats import poisson

from autocatlib.autocatlibexceptions import (CapacityExceeded,
                                             DomainError,
                                             InvalidState,
                                             ValidityConditionViolation)
from autocatlib.entities import Distribution, ReactionParams, Regime, ScaledParams, compositions
from autocatlib.ode import fixed_point
from autocatlib.stationary import (boundary_mass,
                                   build_distribution,
                                   distribution_modes,
                                   hyperplane_window,
                                   lattice_argmax,
                                   log_dirmult,
                                   log_moran_pi,
                                   log_partition_u,
                                   log_poisson_nu,
                                   log_symmetric_Pi,
                                   log_tilde_Pi,
                                   log_tilde_pi_beta_binomial,
                                   log_tilde_pi_d2,
                                   log_tilde_pi_profile,
                                   poisson_upper_cutoff,
                                   regime_classify,
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


def mp_log_partition(alpha, kappa, n):
    """Two species partition function summed term by term in high precision."""
    alpha_1, alpha_2 = (mpmath.mpf(value) for value in alpha)
    kappa_1, kappa_2 = (mpmath.mpf(value) for value in kappa)
    total = mpmath.fsum(mpmath.binomial(n, i) * kappa_1 ** i * kappa_2 ** (n - i)
                        * mpmath.rf(alpha_1, i) * mpmath.rf(alpha_2, n - i) for i in range(n + 1))
    return float(mpmath.log(total / mpmath.rf(alpha_1 + alpha_2, n)))


class TestBuildingBlocks(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        This is where you can setup things that you use throughout the tests. This method is called before every test.
        """
        mpmath.mp.dps = 40

    def tearDown(self):
        """
        Test tear down

        This is where you should tear down what you've setup in setUp before. This method is called after every test.
        """
        mpmath.mp.dps = 15

    def test_poisson(self):
        counts = np.arange(0, 80)
        np.testing.assert_allclose(log_poisson_nu(40.0, counts), poisson.logpmf(counts, 40.0), rtol=1e-12)
        with self.assertRaises(DomainError):
            log_poisson_nu(0.0, 3)
        with self.assertRaises(DomainError):
            log_poisson_nu(1.0, -1)

    def test_dirichlet_multinomial_is_normalized(self):
        for alpha in ((0.3, 0.7), (0.1, 2.0, 5.0)):
            values = [log_dirmult(7, alpha, state) for state in compositions(7, len(alpha))]
            self.assertAlmostEqual(float(logsumexp(values)), 0.0, places=12)
        with self.assertRaises(InvalidState):
            log_dirmult(7, (0.3, 0.7), (3, 3))

    def test_partition_function_methods_agree(self):
        for alpha, kappa, n in (((0.3, 0.7), (1.0, 2.0), 30),
                                ((0.3, 0.7), (2.0, 1.0), 30),
                                ((0.005, 0.004995), (1.0, 1.001), 200)):
            expected = mp_log_partition(alpha, kappa, n)
            for method in ('auto', 'sum', 'hypergeometric'):
                self.assertAlmostEqual(log_partition_u(alpha, kappa, n, method=method), expected,
                                       delta=1e-10 * max(1.0, abs(expected)))

    def test_partition_function_neutral_and_errors(self):
        self.assertAlmostEqual(log_partition_u((0.2, 0.3, 0.4), (1.5, 1.5, 1.5), 12), 12 * math.log(1.5), places=12)
        self.assertAlmostEqual(log_partition_u((0.2, 0.3, 0.4), (1.5, 1.5, 1.5), 12, method='sum'),
                               12 * math.log(1.5), places=10)
        with self.assertRaises(ValidityConditionViolation):
            log_partition_u((0.2, 0.3, 0.4), (1.0, 2.0, 3.0), 5, method='hypergeometric')
        with self.assertRaises(CapacityExceeded):
            log_partition_u((0.2, 0.3, 0.4), (1.0, 2.0, 3.0), 3000, cap=100)
        with self.assertRaises(DomainError):
            log_partition_u((0.2, 0.3), (1.0, 2.0), 5, method='magic')

    def test_moran_law_is_normalized(self):
        alpha, kappa = (0.4, 1.5, 0.2), (1.0, 2.0, 0.5)
        values = [log_moran_pi(9, alpha, kappa, state) for state in compositions(9, 3)]
        self.assertAlmostEqual(float(logsumexp(values)), 0.0, places=11)

    def test_poisson_cutoffs(self):
        n_max = poisson_upper_cutoff(4.0, 1e-12)
        self.assertTrue(24 <= n_max <= 32)
        self.assertLess(poisson.sf(n_max, 4.0), 1e-12)
        n_lo, n_hi = hyperplane_window(4000.0, 1e-12)
        self.assertGreater(n_lo, 0)
        self.assertLess(poisson.cdf(n_lo - 1, 4000.0) + poisson.sf(n_hi, 4000.0), 1e-12)
        self.assertLess(n_hi - n_lo, 1100)
        with self.assertRaises(DomainError):
            hyperplane_window(4.0, 1.5)


class TestTwoSpeciesLaw(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        This is where you can setup things that you use throughout the tests. This method is called before every test.
        """
        self.params = ReactionParams(kappa=(1.0, 1.3), lambda_=(0.7, 1.1), delta=0.2)
        self.swapped = self.params.permuted((1, 0))

    def tearDown(self):
        """
        Test tear down

        This is where you should tear down what you've setup in setUp before. This method is called after every test.
        """
        pass

    def test_closed_form_matches_moran_law(self):
        for params in (self.params, self.swapped):
            for n in (0, 1, 5, 20):
                for i in range(n + 1):
                    expected = log_moran_pi(n, params.alpha, params.kappa, (i, n - i), method='sum')
                    self.assertAlmostEqual(log_tilde_pi_d2(params, n, i), expected,
                                           delta=1e-10 * max(1.0, abs(expected)))

    def test_relabeling_is_transparent(self):
        for n in (3, 17):
            np.testing.assert_allclose(log_tilde_pi_profile(self.swapped, n),
                                       log_tilde_pi_profile(self.params, n)[::-1], rtol=1e-12, atol=1e-12)

    def test_profile_is_normalized(self):
        for n in (0, 1, 50, 400):
            self.assertAlmostEqual(float(logsumexp(log_tilde_pi_profile(self.params, n))), 0.0, places=10)

    def test_beta_binomial_form(self):
        scaled = ScaledParams(volume=20.0, flow=0.05, kappa_prime=(1.0, 1.2))
        for n in (4, 25):
            for i in (0, 1, n // 2, n):
                self.assertAlmostEqual(log_tilde_pi_beta_binomial(scaled, n, i),
                                       log_tilde_pi_d2(scaled.to_unscaled(), n, i), places=10)

    def test_invalid_arguments(self):
        with self.assertRaises(InvalidState):
            log_tilde_pi_d2(self.params, 3, 4)
        with self.assertRaises(ValidityConditionViolation):
            log_tilde_pi_d2(ReactionParams(kappa=(1.0, 2.0, 3.0), lambda_=(1.0, 1.0, 1.0), delta=1.0), 3, 1)

    def test_symmetric_law(self):
        symmetric = ReactionParams(kappa=(1.0, 1.0), lambda_=(2.0, 2.0), delta=1.0)
        for state in ((0, 0), (3, 1), (2, 7)):
            self.assertAlmostEqual(log_symmetric_Pi(symmetric, state), log_tilde_Pi(symmetric, state), places=12)
        with self.assertRaises(ValidityConditionViolation):
            log_symmetric_Pi(self.params, (1, 1))
        with self.assertRaises(ValidityConditionViolation):
            symmetric_distribution(self.params)


class TestDistributions(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        This is where you can setup things that you use throughout the tests. This method is called before every test.
        """
        self.bimodal = ScaledParams(volume=20.0, flow=0.01, kappa_prime=(1.0, 1.01))

    def tearDown(self):
        """
        Test tear down

        This is where you should tear down what you've setup in setUp before. This method is called after every test.
        """
        pass

    def test_build_distribution(self):
        dist = build_distribution(self.bimodal)
        self.assertAlmostEqual(dist.total_mass, 1.0, places=12)
        self.assertLess(dist.truncation_tail_mass, 1e-12)
        self.assertEqual(dist.metadata['n_min'], 0)
        self.assertFalse(dist.metadata['relabeled'])
        raw = self.bimodal.to_unscaled()
        correction = math.log1p(-dist.truncation_tail_mass)
        for state in ((0, 40), (40, 0), (3, 5)):
            self.assertAlmostEqual(dist.log_prob_of(state), log_tilde_Pi(raw, state) - correction, places=9)

    def test_explicit_and_two_sided_windows(self):
        dist = build_distribution(self.bimodal, n_max=10)
        self.assertEqual(int(dist.totals.max()), 10)
        self.assertAlmostEqual(dist.truncation_tail_mass, poisson.sf(10, 40.0), places=15)
        large = ScaledParams(volume=200.0, flow=0.1, kappa_prime=(1.0, 1.001))
        dist = build_distribution(large, two_sided=True)
        self.assertGreater(dist.metadata['n_min'], 0)
        self.assertLess(dist.truncation_tail_mass, 1e-12)
        with self.assertRaises(CapacityExceeded):
            build_distribution(large, cap=1000)

    def test_three_species(self):
        params = ReactionParams(kappa=(1.0, 2.0, 3.0), lambda_=(0.5, 1.0, 1.5), delta=0.5)
        dist = build_distribution(params)
        self.assertEqual(dist.d, 3)
        correction = math.log1p(-dist.truncation_tail_mass)
        for state in ((0, 0, 0), (1, 2, 3), (0, 6, 0)):
            self.assertAlmostEqual(dist.log_prob_of(state), log_tilde_Pi(params, state) - correction, places=9)

    def test_regimes(self):
        expected = {20.0: Regime.BOUNDARY_BIMODAL, 200.0: Regime.FLAT, 2000.0: Regime.INTERIOR_UNIMODAL}
        for volume, regime in expected.items():
            label = regime_classify(ScaledParams(volume=volume, flow=0.01, kappa_prime=(1.0, 1.01)))
            self.assertIs(label.value, regime)
            self.assertFalse(label.near_equal)
        label = regime_classify(ScaledParams(volume=200.00000000001, flow=0.01, kappa_prime=(1.0, 1.01)))
        self.assertIs(label.value, Regime.FLAT)
        self.assertTrue(label.near_equal)

    def test_bimodal_favours_the_faster_catalyst(self):
        dist = build_distribution(self.bimodal)
        for n in range(2, int(dist.totals.max()) + 1):
            self.assertGreater(dist.log_prob_of((0, n)), dist.log_prob_of((n, 0)))
        # both species arrive at the same rate, so the first hyperplane is balanced
        self.assertAlmostEqual(dist.log_prob_of((0, 1)), dist.log_prob_of((1, 0)), places=12)

    def test_bimodal_modes_sit_on_both_faces(self):
        modes = distribution_modes(build_distribution(self.bimodal))
        self.assertGreaterEqual(len(modes), 2)
        self.assertEqual(modes[0][0], 0)
        self.assertTrue(any(mode[1] == 0 for mode in modes))
        masses = boundary_mass(build_distribution(self.bimodal))
        self.assertGreater(masses['absent_1'], masses['absent_2'])
        self.assertGreater(masses['absent_1'] + masses['absent_2'], masses['interior'])

    def test_flat_hyperplane_decays_geometrically(self):
        flat = ScaledParams(volume=200.0, flow=0.01, kappa_prime=(1.0, 1.1))
        profile = np.exp(log_tilde_pi_profile(flat.to_unscaled(), 400))
        self.assertGreaterEqual(profile[:41].sum(), 0.9)

    def test_interior_mode_follows_the_mean_field(self):
        for kappa_prime_2 in (1.001, 1.01, 1.1):
            large = ScaledParams(volume=2000.0, flow=0.01, kappa_prime=(1.0, kappa_prime_2))
            mode = lattice_argmax(large)
            a_star = fixed_point(large).a_star
            # S = dV = 4000 molecules at the fixed point
            tolerance = 3.0 * math.sqrt(sum(a_star))
            self.assertLess(abs(mode[0] - a_star[0]), tolerance, msg=f'kappa_prime_2={kappa_prime_2}')
            self.assertLess(abs(mode[1] - a_star[1]), tolerance, msg=f'kappa_prime_2={kappa_prime_2}')


class TestModes(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        This is where you can setup things that you use throughout the tests. This method is called before every test.
        """
        self.dist = Distribution.from_mapping({(0, 0): 1.0, (1, 0): 3.0, (0, 1): 2.0,
                                               (2, 0): 1.0, (1, 1): 1.0, (0, 2): 2.5})

    def tearDown(self):
        """
        Test tear down

        This is where you should tear down what you've setup in setUp before. This method is called after every test.
        """
        pass

    def test_local_maxima(self):
        self.assertEqual(distribution_modes(self.dist), [(1, 0), (0, 2)])

    def test_boundary_mass(self):
        masses = boundary_mass(self.dist, min_count=1)
        self.assertAlmostEqual(masses['absent_1'], 5.5 / 10.5, places=12)
        self.assertAlmostEqual(masses['absent_2'], 5.0 / 10.5, places=12)
        self.assertAlmostEqual(masses['interior'], 1.0 / 10.5, places=12)
