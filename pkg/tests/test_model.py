#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_model.py
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
test_model
----------------------------------
Tests for `model` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import json
import os
import tempfile
import unittest

from autocatlib.autocatlibexceptions import ConfigurationError, InvalidParameters, InvalidState
from autocatlib.entities import MoranParams, ReactionParams, ScaledParams, enumerate_states
from autocatlib.model import (adjoint_apply,
                              alpha_params,
                              enabled_transitions,
                              exit_rate,
                              generator_apply,
                              load_params,
                              load_params_file,
                              lumped_rates,
                              moran_transitions,
                              predecessors)

__author__ = 'autocatlib developers <autocatlib@users.noreply.github.com>'
__docformat__ = 'google'
__date__ = '19-10-2026'
__copyright__ = 'Copyright 2026, autocatlib developers'
__credits__ = ["autocatlib developers"]
__license__ = 'Apache Software License 2.0'
__maintainer__ = 'autocatlib developers'
__email__ = '<autocatlib@users.noreply.github.com>'
__status__ = 'Development'  # "Prototype", "Development", "Production".


class TestTransitions(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        This is where you can setup things that you use throughout the tests. This method is called before every test.
        """
        self.params = ReactionParams(kappa=(1.0, 2.0), lambda_=(3.0, 4.0), delta=0.5)
        self.three = ReactionParams(kappa=(1.0, 2.0, 3.0), lambda_=(0.5, 1.0, 1.5), delta=0.25)

    def tearDown(self):
        """
        Test tear down

        This is where you should tear down what you've setup in setUp before. This method is called after every test.
        """
        pass

    def test_enabled_transitions_order(self):
        self.assertEqual(enabled_transitions(self.params, (1, 2)),
                         [((2, 1), 2.0), ((0, 3), 4.0), ((2, 2), 3.0), ((1, 3), 4.0), ((0, 2), 0.5), ((1, 1), 1.0)])
        self.assertAlmostEqual(exit_rate(self.params, (1, 2)), 14.5)

    def test_empty_state_only_receives_inflow(self):
        self.assertEqual(enabled_transitions(self.params, (0, 0)), [((1, 0), 3.0), ((0, 1), 4.0)])

    def test_total_count_is_lumpable(self):
        for params in (self.params, self.three):
            for state in enumerate_states(6, params.d):
                up, down = lumped_rates(params, state)
                self.assertAlmostEqual(up, params.total_inflow, places=12)
                self.assertAlmostEqual(down, params.delta * sum(state), places=12)

    def test_predecessors_invert_transitions(self):
        for params in (self.params, self.three):
            for state in enumerate_states(4, params.d):
                for source, rate in predecessors(params, state):
                    self.assertIn((state, rate), enabled_transitions(params, source))

    def test_generator_of_the_total_count(self):
        for state in enumerate_states(5, 2):
            self.assertAlmostEqual(generator_apply(self.params, sum, state),
                                   self.params.total_inflow - self.params.delta * sum(state), places=12)
            self.assertEqual(generator_apply(self.params, lambda _: 1.0, state), 0.0)

    def test_adjoint_is_the_transpose_of_the_generator(self):
        support = list(enumerate_states(3, 2))
        probabilities = {state: 1.0 / len(support) for state in support}

        def f(state):
            return state[0] ** 2 + 3 * state[1]

        primal = sum(probabilities[state] * generator_apply(self.params, f, state) for state in support)
        dual = sum(f(state) * adjoint_apply(self.params, probabilities, state) for state in enumerate_states(4, 2))
        self.assertAlmostEqual(primal, dual, places=10)

    def test_adjoint_validates_the_state(self):
        with self.assertRaises(InvalidState):
            adjoint_apply(self.params, {}, (1, 2, 3))
        with self.assertRaises(InvalidState):
            adjoint_apply(self.params, lambda state: 0.0, (-1, 2))

    def test_alpha_of_scaled_parameters(self):
        scaled = ScaledParams(volume=200.0, flow=0.01, kappa_prime=(1.0, 1.01))
        # alpha_i = D V / (d kappa'_i)
        self.assertAlmostEqual(alpha_params(scaled)[0], 1.0, places=12)

    def test_moran_transitions(self):
        moran = MoranParams(n=4, kappa=(1.0, 2.0), v=0.5, p=(0.25, 0.75))
        transitions = moran_transitions(moran, (1, 3))
        self.assertEqual(transitions, [((0, 4), 1 * (2.0 * 3 / 4 + 0.5 * 0.75)),
                                       ((2, 2), 3 * (1.0 * 1 / 4 + 0.5 * 0.25))])
        with self.assertRaises(InvalidState):
            moran_transitions(moran, (1, 1))


class TestLoading(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        This is where you can setup things that you use throughout the tests. This method is called before every test.
        """
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self):
        """
        Test tear down

        This is where you should tear down what you've setup in setUp before. This method is called after every test.
        """
        self.directory.cleanup()

    def _write(self, name, content):
        path = os.path.join(self.directory.name, name)
        with open(path, 'w', encoding='utf8') as configuration_file:
            configuration_file.write(content)
        return path

    def test_kinds(self):
        raw = load_params({'kind': 'raw', 'd': 2, 'kappa': [1, 2], 'lambda': [1, 1], 'delta': 0.5})
        self.assertIsInstance(raw, ReactionParams)
        scaled = load_params({'kind': 'scaled', 'V': 20, 'D': 0.01, 'kappa_prime': [1, 1.01]})
        self.assertIsInstance(scaled, ScaledParams)
        moran = load_params({'kind': 'moran', 'n': 10, 'kappa': [1, 2], 'v': 0.5})
        self.assertIsInstance(moran, MoranParams)

    def test_kind_defaults_to_raw(self):
        self.assertIsInstance(load_params({'kappa': [1, 2], 'lambda': [1, 1], 'delta': 0.5}), ReactionParams)

    def test_configuration_errors(self):
        with self.assertRaises(ConfigurationError):
            load_params({'kind': 'quantum'})
        with self.assertRaises(ConfigurationError):
            load_params({'kind': 'raw', 'd': 3, 'kappa': [1, 2], 'lambda': [1, 1], 'delta': 0.5})
        with self.assertRaises(ConfigurationError):
            load_params(['raw'])
        with self.assertRaises(InvalidParameters):
            load_params({'kind': 'raw', 'kappa': [1, -2], 'lambda': [1, 1], 'delta': 0.5})

    def test_files(self):
        path = self._write('fig.json', json.dumps({'kind': 'scaled', 'V': 2000, 'D': 0.01, 'kappa_prime': [1, 1.1]}))
        self.assertEqual(load_params_file(path).volume, 2000.0)
        with self.assertRaises(ConfigurationError):
            load_params_file(self._write('broken.json', '{"kind": '))
        with self.assertRaises(ConfigurationError):
            load_params_file(os.path.join(self.directory.name, 'missing.json'))
